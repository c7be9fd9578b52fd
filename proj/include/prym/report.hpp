#pragma once

#include <array>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "prym/criteria.hpp"
#include "prym/signature.hpp"

namespace prym {

inline constexpr int kSchemaVersion = 1;

// One Hurwitz class of Prym data, fully evaluated.
struct DatumReport {
    CoverKind kind = CoverKind::etale;
    int gtilde = 0;
    int g = 0;
    int group_order = 0;
    int group_index = 0;
    std::string group_name;
    std::array<int, 4> m{};  // sorted
    std::string class_id;
    long long orbit_size = 0;
    std::string vec_class_id;  // paper-style two-stage grouping key
    std::array<std::string, 4> vector_words;
    std::string sigma_word;
    DatumDims dims;
    bool flag_A = false;
    bool flag_B1 = false;
    BSource b_source = BSource::unknown;
    RedStatus red_status = RedStatus::not_applicable;
    std::string red_witness_word;  // empty when no witness
    std::vector<std::pair<std::string, long long>> abelian_mults;

    bool operator<(const DatumReport& o) const {
        if (gtilde != o.gtilde) return gtilde < o.gtilde;
        if (kind != o.kind) return static_cast<int>(kind) < static_cast<int>(o.kind);
        if (group_order != o.group_order) return group_order < o.group_order;
        if (group_index != o.group_index) return group_index < o.group_index;
        return class_id < o.class_id;
    }
};

inline nlohmann::json report_to_json(const DatumReport& r) {
    nlohmann::json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = kind_name(r.kind);
    j["gtilde"] = r.gtilde;
    j["g"] = r.g;
    j["group"] = {{"order", r.group_order},
                  {"index", r.group_index},
                  {"name", r.group_name}};
    j["m"] = r.m;
    j["class_id"] = r.class_id;
    j["orbit_size"] = r.orbit_size;
    j["vec_class_id"] = r.vec_class_id;
    j["vector"] = r.vector_words;
    j["sigma"] = r.sigma_word;
    j["dims"] = {{"gtilde", r.dims.gtilde},
                 {"g", r.dims.g},
                 {"dimVminus", r.dims.dimVminus},
                 {"N1", r.dims.N1},
                 {"N2", r.dims.N2},
                 {"dimS2Vminus", r.dims.dimS2Vminus}};
    j["flag_A"] = r.flag_A;
    j["flag_B1"] = r.flag_B1;
    j["flag_B_source"] = bsource_name(r.b_source);
    j["reducibility"] = {{"status", redstatus_name(r.red_status)},
                         {"witness", r.red_witness_word}};
    if (!r.abelian_mults.empty()) {
        nlohmann::json dec = nlohmann::json::array();
        for (const auto& [lab, mult] : r.abelian_mults)
            dec.push_back({{"character", lab}, {"multiplicity", mult}});
        j["abelian_decomposition"] = dec;
    }
    return j;
}

inline DatumReport report_from_json(const nlohmann::json& j) {
    DatumReport r;
    r.kind = kind_from_name(j.at("kind").get<std::string>());
    r.gtilde = j.at("gtilde").get<int>();
    r.g = j.at("g").get<int>();
    r.group_order = j.at("group").at("order").get<int>();
    r.group_index = j.at("group").at("index").get<int>();
    r.group_name = j.at("group").at("name").get<std::string>();
    auto m = j.at("m");
    for (int i = 0; i < 4; ++i) r.m[i] = m.at(i).get<int>();
    r.class_id = j.at("class_id").get<std::string>();
    r.orbit_size = j.at("orbit_size").get<long long>();
    r.vec_class_id = j.at("vec_class_id").get<std::string>();
    auto v = j.at("vector");
    for (int i = 0; i < 4; ++i)
        r.vector_words[i] = v.at(i).get<std::string>();
    r.sigma_word = j.at("sigma").get<std::string>();
    auto d = j.at("dims");
    r.dims.gtilde = d.at("gtilde").get<int>();
    r.dims.g = d.at("g").get<int>();
    r.dims.dimVminus = d.at("dimVminus").get<long long>();
    r.dims.N1 = d.at("N1").get<long long>();
    r.dims.N2 = d.at("N2").get<long long>();
    r.dims.dimS2Vminus = d.at("dimS2Vminus").get<long long>();
    r.flag_A = j.at("flag_A").get<bool>();
    r.flag_B1 = j.at("flag_B1").get<bool>();
    std::string bs = j.at("flag_B_source").get<std::string>();
    r.b_source = bs == "from_B1" ? BSource::from_B1
                 : bs == "paper_asserted" ? BSource::paper_asserted
                                          : BSource::unknown;
    std::string rs = j.at("reducibility").at("status").get<std::string>();
    r.red_status = rs == "witness" ? RedStatus::witness
                   : rs == "no-witness-in-group" ? RedStatus::none_in_group
                   : rs == "irreducible-catalog-closed"
                       ? RedStatus::catalog_closed
                       : RedStatus::not_applicable;
    r.red_witness_word =
        j.at("reducibility").at("witness").get<std::string>();
    if (j.count("abelian_decomposition"))
        for (const auto& it : j.at("abelian_decomposition"))
            r.abelian_mults.emplace_back(
                it.at("character").get<std::string>(),
                it.at("multiplicity").get<long long>());
    return r;
}

inline std::string export_jsonl(const std::vector<DatumReport>& reports) {
    std::string out;
    for (const auto& r : reports) out += report_to_json(r).dump() + "\n";
    return out;
}

inline std::vector<DatumReport> parse_jsonl(std::istream& in) {
    std::vector<DatumReport> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        out.push_back(report_from_json(nlohmann::json::parse(line)));
    }
    return out;
}

inline std::string export_csv(const std::vector<DatumReport>& reports) {
    std::ostringstream os;
    os << "kind,gtilde,g,group_order,group_index,group_name,m,class_id,"
          "orbit_size,dimVminus,N1,N2,dimS2Vminus,flag_A,flag_B1,"
          "flag_B_source,reducibility\n";
    for (const auto& r : reports) {
        os << kind_name(r.kind) << "," << r.gtilde << "," << r.g << ","
           << r.group_order << "," << r.group_index << "," << r.group_name
           << "," << r.m[0] << ";" << r.m[1] << ";" << r.m[2] << ";"
           << r.m[3] << "," << r.class_id << "," << r.orbit_size << ","
           << r.dims.dimVminus << "," << r.dims.N1 << "," << r.dims.N2
           << "," << r.dims.dimS2Vminus << ","
           << (r.flag_A ? "true" : "false") << ","
           << (r.flag_B1 ? "true" : "false") << ","
           << bsource_name(r.b_source) << ","
           << redstatus_name(r.red_status) << "\n";
    }
    return os.str();
}

// Markdown table mirroring the published layout.
inline std::string export_markdown(const std::vector<DatumReport>& reports) {
    std::ostringstream os;
    os << "| n | g(C~) | g(C) | G | SmallGroupId | B1 | B |\n";
    os << "|---|-------|------|---|--------------|----|---|\n";
    int row = 0;
    for (const auto& r : reports) {
        ++row;
        bool b = r.flag_B1 || r.b_source == BSource::paper_asserted;
        os << "| " << row << " | " << r.gtilde << " | " << r.g << " | "
           << (r.group_name.empty() ? std::string("?") : r.group_name)
           << " | G(" << r.group_order << "," << r.group_index << ") | "
           << (r.flag_B1 ? "yes" : "") << " | " << (b ? "yes" : "")
           << " |\n";
    }
    return os.str();
}

}  // namespace prym
