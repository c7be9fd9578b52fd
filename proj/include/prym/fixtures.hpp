#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "prym/catalog.hpp"
#include "prym/criteria.hpp"
#include "prym/report.hpp"
#include "prym/scan.hpp"

namespace prym {

// Evaluates a product of generator powers like "g1*g2^-1*g3^2".
inline int eval_word(const FiniteGroup& G, const std::string& word) {
    std::string w;
    for (char c : word)
        if (!isspace(static_cast<unsigned char>(c))) w += c;
    if (w.empty() || w == "1") return 0;
    int e = 0;
    size_t i = 0;
    while (i < w.size()) {
        if (w[i] == '*') {
            ++i;
            continue;
        }
        if (w[i] != 'g') throw Error("bad word token in '" + word + "'");
        ++i;
        size_t j = i;
        while (j < w.size() && isdigit(static_cast<unsigned char>(w[j])))
            ++j;
        int gi = std::stoi(w.substr(i, j - i)) - 1;
        if (gi < 0 || gi >= static_cast<int>(G.gens.size()))
            throw Error("generator out of range in '" + word + "'");
        i = j;
        long long k = 1;
        if (i < w.size() && w[i] == '^') {
            ++i;
            size_t s = i;
            if (i < w.size() && w[i] == '-') ++i;
            while (i < w.size() &&
                   isdigit(static_cast<unsigned char>(w[i])))
                ++i;
            k = std::stoll(w.substr(s, i - s));
        }
        e = G.mul(e, G.pow(G.gens[gi], k));
    }
    return e;
}

struct QuotientGenusCheck {
    std::vector<std::string> subgroup_words;
    long long genus = 0;
};

struct Fixture {
    std::string name;
    int order = 0, index = 0;
    CoverKind kind = CoverKind::etale;
    std::array<std::string, 4> theta;
    std::string sigma;
    std::string note;
    // expectations
    int gtilde = 0, g = 0;
    long long dimVminus = -1;
    long long dimS2Vminus = -1;
    bool flag_A = false, flag_B1 = false;
    std::vector<long long> abelian_mults;  // sorted multiset; empty if n/a
    std::vector<QuotientGenusCheck> qgenus;
};

inline Fixture parse_fixture(std::istream& in, const std::string& name) {
    Fixture f;
    f.name = name;
    std::string line;
    int lineno = 0;
    auto split_list = [](const std::string& s, char sep) {
        std::vector<std::string> out;
        std::istringstream is(s);
        std::string tok;
        while (std::getline(is, tok, sep)) {
            size_t b = tok.find_first_not_of(" \t");
            if (b == std::string::npos) continue;
            size_t e = tok.find_last_not_of(" \t");
            out.push_back(tok.substr(b, e - b + 1));
        }
        return out;
    };
    while (std::getline(in, line)) {
        ++lineno;
        size_t h = line.find('#');
        if (h != std::string::npos) line = line.substr(0, h);
        size_t eq = line.find('=');
        if (eq == std::string::npos) continue;
        std::string key = line.substr(0, eq);
        std::string val = line.substr(eq + 1);
        auto trim = [](std::string s) {
            size_t b = s.find_first_not_of(" \t\r");
            if (b == std::string::npos) return std::string();
            size_t e = s.find_last_not_of(" \t\r");
            return s.substr(b, e - b + 1);
        };
        key = trim(key);
        val = trim(val);
        if (key == "group") {
            auto parts = split_list(val, ',');
            if (parts.size() != 2)
                throw ParseError("group needs order,index", lineno);
            f.order = std::stoi(parts[0]);
            f.index = std::stoi(parts[1]);
        } else if (key == "kind") {
            f.kind = kind_from_name(val);
        } else if (key == "theta") {
            auto parts = split_list(val, ';');
            if (parts.size() != 4)
                throw ParseError("theta needs four words", lineno);
            for (int i = 0; i < 4; ++i) f.theta[i] = parts[i];
        } else if (key == "sigma") {
            f.sigma = val;
        } else if (key == "note") {
            f.note = val;
        } else if (key == "expect.gtilde") {
            f.gtilde = std::stoi(val);
        } else if (key == "expect.g") {
            f.g = std::stoi(val);
        } else if (key == "expect.dimVminus") {
            f.dimVminus = std::stoll(val);
        } else if (key == "expect.dimS2Vminus") {
            f.dimS2Vminus = std::stoll(val);
        } else if (key == "expect.flagA") {
            f.flag_A = val == "true";
        } else if (key == "expect.flagB1") {
            f.flag_B1 = val == "true";
        } else if (key == "expect.abelian_mults") {
            for (const auto& t : split_list(val, ','))
                f.abelian_mults.push_back(std::stoll(t));
            std::sort(f.abelian_mults.begin(), f.abelian_mults.end());
        } else if (key == "expect.qgenus") {
            // subgroup words | genus, entries separated by ';'
            for (const auto& ent : split_list(val, ';')) {
                size_t bar = ent.find(':');
                if (bar == std::string::npos)
                    throw ParseError("qgenus entry needs ':'", lineno);
                QuotientGenusCheck qc;
                qc.subgroup_words = split_list(ent.substr(0, bar), '&');
                qc.genus = std::stoll(ent.substr(bar + 1));
                f.qgenus.push_back(std::move(qc));
            }
        } else {
            throw ParseError("unknown fixture key " + key, lineno);
        }
    }
    return f;
}

inline Fixture load_fixture(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open fixture: " + path);
    auto slash = path.find_last_of('/');
    std::string base =
        slash == std::string::npos ? path : path.substr(slash + 1);
    auto dot = base.rfind('.');
    if (dot != std::string::npos) base = base.substr(0, dot);
    return parse_fixture(in, base);
}

inline PrymDatum fixture_datum(const Fixture& f, const FiniteGroup& G) {
    GeneratingVector v;
    for (int i = 0; i < 4; ++i) v.x[i] = eval_word(G, f.theta[i]);
    int sigma = eval_word(G, f.sigma);
    return make_datum(G, v, sigma, f.kind);
}

// Evaluates the fixture and renders it as a report row (class_id names the
// fixture; no orbit classification is run here).
inline DatumReport evaluate_fixture(const Fixture& f, const FiniteGroup& G) {
    PrymDatum d = fixture_datum(f, G);
    DatumEval ev = evaluate_datum(d);
    DatumReport r;
    r.kind = f.kind;
    r.gtilde = d.gtilde;
    r.g = d.g;
    r.group_order = G.n;
    r.group_index = G.catalog_id ? G.catalog_id->second : f.index;
    r.group_name = G.name;
    {
        auto ms = d.m;
        std::sort(ms.begin(), ms.end());
        r.m = ms;
    }
    r.class_id = "fixture:" + f.name;
    r.vec_class_id = r.class_id;
    r.orbit_size = 0;
    for (int i = 0; i < 4; ++i) r.vector_words[i] = f.theta[i];
    r.sigma_word = f.sigma;
    r.dims = ev.dims;
    r.flag_A = ev.flag_A;
    r.flag_B1 = ev.flag_B1;
    if (ev.flag_A && ev.flag_B1)
        r.b_source = BSource::from_B1;
    else if (ev.flag_A &&
             paper_asserted_b(f.kind, d.gtilde, G.n, r.group_index))
        r.b_source = BSource::paper_asserted;
    else
        r.b_source = BSource::unknown;
    r.red_status = ev.red_status;
    if (ev.red_witness) r.red_witness_word = G.word_str(*ev.red_witness);
    r.abelian_mults = ev.abelian_decomposition;
    return r;
}

}  // namespace prym
