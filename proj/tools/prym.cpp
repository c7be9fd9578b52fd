// Command-line front end for the Prym-data engine: signature listing,
// full scans, per-class inspection, fixture checks, table rendering, and
// verification against the bundled expected tables.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "prym/catalog.hpp"
#include "prym/expected.hpp"
#include "prym/fixtures.hpp"
#include "prym/report.hpp"
#include "prym/scan.hpp"
#include "prym/signature.hpp"

#ifndef PRYM_DEFAULT_DATA_DIR
#define PRYM_DEFAULT_DATA_DIR "data"
#endif

namespace {

std::string data_dir() {
    if (const char* env = std::getenv("PRYM_DATA")) return env;
    return PRYM_DEFAULT_DATA_DIR;
}

std::string default_catalog() {
    if (const char* env = std::getenv("PRYM_CATALOG")) return env;
    return data_dir() + "/catalog/smallgroups.cat";
}

void print_report(const prym::DatumReport& r, std::ostream& os) {
    os << r.class_id << "\n";
    os << "  kind=" << prym::kind_name(r.kind) << " G(" << r.group_order
       << "," << r.group_index << ")"
       << (r.group_name.empty() ? "" : " " + r.group_name) << "\n";
    os << "  theta=(" << r.vector_words[0] << ", " << r.vector_words[1]
       << ", " << r.vector_words[2] << ", " << r.vector_words[3]
       << ")  sigma=" << r.sigma_word << "\n";
    os << "  m=(" << r.m[0] << "," << r.m[1] << "," << r.m[2] << ","
       << r.m[3] << ")\n";
    os << "  dims {gtilde:" << r.dims.gtilde << ", g:" << r.dims.g
       << ", dimVminus:" << r.dims.dimVminus << ", N1:" << r.dims.N1
       << ", N2:" << r.dims.N2 << ", dimS2Vminus:" << r.dims.dimS2Vminus
       << "}\n";
    os << "  flag_A=" << (r.flag_A ? "true" : "false")
       << " flag_B1=" << (r.flag_B1 ? "true" : "false")
       << " flag_B_source=" << prym::bsource_name(r.b_source) << "\n";
    os << "  reducibility=" << prym::redstatus_name(r.red_status);
    if (!r.red_witness_word.empty()) os << " h=" << r.red_witness_word;
    os << "\n";
    if (!r.abelian_mults.empty()) {
        os << "  V- =";
        for (const auto& [lab, m] : r.abelian_mults)
            os << " " << m << "*" << lab;
        os << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Prym datum enumeration and classification"};
    app.require_subcommand(1);

    // signatures
    auto* sig = app.add_subcommand(
        "signatures", "list Riemann-Hurwitz-admissible signatures");
    int sig_gt = 4;
    std::string sig_kind = "etale";
    sig->add_option("--gtilde", sig_gt, "genus of the covering curve")
        ->required();
    sig->add_option("--kind", sig_kind, "etale|ram1|ram2");

    // scan
    auto* sc = app.add_subcommand("scan", "run the enumeration pipeline");
    int sc_min = 2, sc_max = 5, sc_jobs = 0;
    std::string sc_kind = "etale", sc_catalog, sc_out;
    bool sc_no_orbit_check = false;
    sc->add_option("--gtilde-min", sc_min, "lowest genus (default 2)");
    sc->add_option("--gtilde-max", sc_max, "highest genus")->required();
    sc->add_option("--kind", sc_kind, "etale|ram1|ram2|all-ramified");
    sc->add_option("--catalog", sc_catalog, "catalog file");
    sc->add_option("--jobs", sc_jobs, "worker threads (default: all cores)");
    sc->add_option("--out", sc_out, "output JSONL path (default stdout)");
    sc->add_flag("--no-check-orbit-invariance", sc_no_orbit_check,
                 "skip the per-class orbit-invariance recheck");

    // classify
    auto* cl = app.add_subcommand(
        "classify", "Hurwitz classes of one (group, signature) pair");
    int cl_order = 0, cl_index = 0;
    std::string cl_m, cl_kind = "etale", cl_catalog;
    cl->add_option("--order", cl_order, "group order")->required();
    cl->add_option("--index", cl_index, "catalog index")->required();
    cl->add_option("--m", cl_m, "comma-separated signature, e.g. 4,4,4,4")
        ->required();
    cl->add_option("--kind", cl_kind, "etale|ram1|ram2");
    cl->add_option("--catalog", cl_catalog, "catalog file");

    // check
    auto* ck = app.add_subcommand("check", "evaluate one bundled fixture");
    std::string ck_fixture, ck_catalog;
    ck->add_option("--fixture", ck_fixture, "fixture name, e.g. etale-ex29")
        ->required();
    ck->add_option("--catalog", ck_catalog, "catalog file");

    // table
    auto* tb = app.add_subcommand("table", "render a report file");
    std::string tb_in, tb_fmt = "md";
    tb->add_option("--in", tb_in, "JSONL report file")->required();
    tb->add_option("--format", tb_fmt, "md|csv|jsonl");

    // verify
    auto* vf = app.add_subcommand(
        "verify", "compare a report file against an expected table");
    std::string vf_in, vf_expected, vf_file;
    int vf_gmin = 2, vf_gmax = 1000;
    vf->add_option("--in", vf_in, "JSONL report file")->required();
    vf->add_option("--expected", vf_expected, "table1|table2")->required();
    vf->add_option("--expected-file", vf_file, "override expected CSV path");
    vf->add_option("--gtilde-min", vf_gmin, "restrict comparison range");
    vf->add_option("--gtilde-max", vf_gmax, "restrict comparison range");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code ? 2 : 0;
    }

    try {
        if (*sig) {
            for (const auto& s : prym::enumerate_signatures(
                     sig_gt, prym::kind_from_name(sig_kind))) {
                std::cout << "n=" << s.n << " m=" << s.m[0] << ","
                          << s.m[1] << "," << s.m[2] << "," << s.m[3]
                          << "\n";
            }
            return 0;
        }
        if (*sc) {
            auto catalog = prym::load_catalog(
                sc_catalog.empty() ? default_catalog() : sc_catalog);
            prym::ScanConfig cfg;
            cfg.gtilde_min = sc_min;
            cfg.gtilde_max = sc_max;
            cfg.kind = prym::scankind_from_name(sc_kind);
            cfg.jobs = sc_jobs > 0
                           ? sc_jobs
                           : static_cast<int>(
                                 std::thread::hardware_concurrency());
            cfg.check_orbit_invariance = !sc_no_orbit_check;
            auto result = prym::scan(catalog, cfg);
            std::string out = prym::export_jsonl(result.reports);
            if (sc_out.empty()) {
                std::cout << out;
            } else {
                std::ofstream of(sc_out);
                of << out;
            }
            for (const auto& gap : result.gaps)
                std::cerr << "gap: gtilde=" << gap.gtilde
                          << " order=" << gap.order << " (" << gap.reason
                          << ")\n";
            std::cerr << result.reports.size() << " classes\n";
            return 0;
        }
        if (*cl) {
            auto catalog = prym::load_catalog(
                cl_catalog.empty() ? default_catalog() : cl_catalog);
            auto G = catalog.group(cl_order, cl_index);
            std::array<int, 4> m{};
            {
                std::istringstream is(cl_m);
                std::string tok;
                int i = 0;
                while (std::getline(is, tok, ',') && i < 4)
                    m[i++] = std::stoi(tok);
                if (i != 4) throw prym::Error("--m needs four entries");
            }
            std::sort(m.begin(), m.end());
            auto kind = prym::kind_from_name(cl_kind);
            auto states = prym::enumerate_states(*G, m, kind);
            auto auts = prym::automorphisms(*G);
            auto classes = prym::hurwitz_classes(*G, states, auts);
            std::cout << states.size() << " data, " << classes.size()
                      << " Hurwitz classes\n";
            for (const auto& hc : classes) {
                auto d = prym::make_datum(
                    *G, prym::GeneratingVector{hc.rep.x}, hc.rep.sigma,
                    kind);
                auto ev = prym::evaluate_datum(d);
                std::cout << prym::make_class_id(kind, d.gtilde, G->n,
                                                 cl_index, hc.rep)
                          << " orbit=" << hc.orbit_size
                          << " A=" << (ev.flag_A ? "true" : "false")
                          << " B1="
                          << (ev.flag_A && ev.flag_B1 ? "true" : "false")
                          << "\n";
            }
            return 0;
        }
        if (*ck) {
            auto catalog = prym::load_catalog(
                ck_catalog.empty() ? default_catalog() : ck_catalog);
            auto f = prym::load_fixture(data_dir() + "/fixtures/" +
                                        ck_fixture + ".fixture");
            auto G = catalog.group(f.order, f.index);
            auto r = prym::evaluate_fixture(f, *G);
            print_report(r, std::cout);
            return 0;
        }
        if (*tb) {
            std::ifstream in(tb_in);
            if (!in) throw prym::Error("cannot open " + tb_in);
            auto reports = prym::parse_jsonl(in);
            if (tb_fmt == "md")
                std::cout << prym::export_markdown(reports);
            else if (tb_fmt == "csv")
                std::cout << prym::export_csv(reports);
            else if (tb_fmt == "jsonl")
                std::cout << prym::export_jsonl(reports);
            else
                throw prym::Error("unknown format " + tb_fmt);
            return 0;
        }
        if (*vf) {
            std::ifstream in(vf_in);
            if (!in) throw prym::Error("cannot open " + vf_in);
            auto reports = prym::parse_jsonl(in);
            std::string path = vf_file;
            if (path.empty())
                path = data_dir() + "/expected/" + vf_expected + ".csv";
            auto expected = prym::load_expected(path, vf_expected);
            int gmax = vf_gmax;
            if (gmax == 1000)
                for (const auto& r : reports)
                    gmax = std::max(gmax == 1000 ? 0 : gmax, r.gtilde);
            auto diff = prym::verify_reports(reports, expected, vf_gmin,
                                             gmax);
            if (diff.empty()) {
                std::cerr << "verification passed\n";
                return 0;
            }
            std::cout << diff.str();
            return 1;
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 2;
}
