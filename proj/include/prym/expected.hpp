#pragma once

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "prym/report.hpp"

namespace prym {

// One row of a bundled expected table (CSV transcription of the published
// tables). row_label spans like "6-8" denote several Hurwitz classes.
struct ExpectedRow {
    std::string row_label;
    int gtilde = 0;
    int g = 0;
    int group_order = 0;
    int group_index = 0;
    bool b1 = false;
    bool b = false;
    std::string note;

    int count() const {
        auto dash = row_label.find('-');
        if (dash == std::string::npos) return 1;
        int a = std::stoi(row_label.substr(0, dash));
        int b2 = std::stoi(row_label.substr(dash + 1));
        return b2 - a + 1;
    }
    bool ambiguous_count() const {
        return note.find("ambiguous") != std::string::npos;
    }
};

struct ExpectedTable {
    std::vector<ExpectedRow> rows;
    std::string provenance;  // "table1" | "table2"
};

inline ExpectedTable parse_expected_csv(std::istream& in,
                                        const std::string& provenance) {
    ExpectedTable t;
    t.provenance = provenance;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        if (line.rfind("row_label", 0) == 0) continue;  // header
        std::vector<std::string> f;
        std::string cur;
        std::istringstream is(line);
        while (std::getline(is, cur, ',')) f.push_back(cur);
        while (f.size() < 8) f.emplace_back();
        ExpectedRow r;
        r.row_label = f[0];
        r.gtilde = std::stoi(f[1]);
        r.g = std::stoi(f[2]);
        r.group_order = std::stoi(f[3]);
        r.group_index = std::stoi(f[4]);
        r.b1 = f[5] == "true";
        r.b = f[6] == "true";
        r.note = f[7];
        t.rows.push_back(std::move(r));
    }
    return t;
}

inline ExpectedTable load_expected(const std::string& path,
                                   const std::string& provenance) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open expected table: " + path);
    return parse_expected_csv(in, provenance);
}

struct DiffEntry {
    std::string what;  // "missing" | "extra-A-B1" | "flag-mismatch" |
                       // "count-mismatch" | "genus-mismatch"
    std::string detail;
};

struct Diff {
    std::vector<DiffEntry> entries;
    bool empty() const { return entries.empty(); }
    std::string str() const {
        std::string s;
        for (const auto& e : entries)
            s += e.what + ": " + e.detail + "\n";
        return s;
    }
};

struct GapRecord {
    int gtilde = 0;
    int order = 0;
    std::string reason;
};

// Compares condition-(A) classes against the expected rows restricted to
// [gmin, gmax]. Keys are (gtilde, order, index); counts are matched
// exactly unless the expected row is flagged ambiguous, in which case a
// nonzero count suffices. Extra (A and B1) classes fail; extra A-only
// classes are tolerated. Throws CoverageGap when an expected row's order
// was a coverage gap of the scan.
inline Diff verify_reports(const std::vector<DatumReport>& reports,
                           const ExpectedTable& expected, int gmin, int gmax,
                           const std::vector<GapRecord>& gaps = {}) {
    Diff diff;
    struct Key {
        int gt, n, idx;
        bool operator<(const Key& o) const {
            return std::tie(gt, n, idx) < std::tie(o.gt, o.n, o.idx);
        }
    };
    std::map<Key, std::pair<int, bool>> want;  // count, b1
    std::map<Key, std::pair<bool, int>> want_amb_g;  // ambiguous?, g
    for (const auto& r : expected.rows) {
        if (r.gtilde < gmin || r.gtilde > gmax) continue;
        Key k{r.gtilde, r.group_order, r.group_index};
        for (const auto& gap : gaps)
            if (gap.gtilde == r.gtilde && gap.order == r.group_order)
                throw CoverageGap(
                    "expected row " + r.row_label + " needs order " +
                    std::to_string(r.group_order) +
                    " which is a catalog gap");
        want[k].first += r.count();
        want[k].second = r.b1;
        want_amb_g[k] = {r.ambiguous_count(), r.g};
    }
    std::map<Key, std::pair<int, bool>> got;  // count of flag_A, b1 seen
    std::map<Key, int> got_g;
    for (const auto& r : reports) {
        if (!r.flag_A) continue;
        if (r.gtilde < gmin || r.gtilde > gmax) continue;
        Key k{r.gtilde, r.group_order, r.group_index};
        auto it = got.find(k);
        if (it == got.end())
            got[k] = {1, r.flag_B1};
        else {
            it->second.first++;
            if (it->second.second != r.flag_B1)
                diff.entries.push_back(
                    {"flag-mismatch",
                     "inconsistent B1 within key g~=" +
                         std::to_string(k.gt) + " G(" +
                         std::to_string(k.n) + "," + std::to_string(k.idx) +
                         ")"});
        }
        got_g[k] = r.g;
    }
    for (const auto& [k, wc] : want) {
        auto it = got.find(k);
        std::string keystr = "g~=" + std::to_string(k.gt) + " G(" +
                             std::to_string(k.n) + "," +
                             std::to_string(k.idx) + ")";
        if (it == got.end()) {
            diff.entries.push_back({"missing", keystr});
            continue;
        }
        if (it->second.second != wc.second)
            diff.entries.push_back(
                {"flag-mismatch", keystr + " B1 expected " +
                                      (wc.second ? "true" : "false")});
        auto [amb, g_expect] = want_amb_g.at(k);
        if (!amb && it->second.first != wc.first)
            diff.entries.push_back(
                {"count-mismatch",
                 keystr + " expected " + std::to_string(wc.first) +
                     " classes, found " +
                     std::to_string(it->second.first)});
        if (got_g.at(k) != g_expect)
            diff.entries.push_back(
                {"genus-mismatch",
                 keystr + " g expected " + std::to_string(g_expect) +
                     ", found " + std::to_string(got_g.at(k))});
    }
    for (const auto& [k, gc] : got) {
        if (want.count(k)) continue;
        if (gc.second)  // flag_A and flag_B1 but not expected
            diff.entries.push_back(
                {"extra-A-B1", "g~=" + std::to_string(k.gt) + " G(" +
                                   std::to_string(k.n) + "," +
                                   std::to_string(k.idx) + ") x" +
                                   std::to_string(gc.first)});
    }
    return diff;
}

}  // namespace prym
