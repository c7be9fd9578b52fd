#pragma once

#include <algorithm>
#include <fstream>
#include <map>
#include <memory>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "prym/group.hpp"

namespace prym {

struct CatalogEntry {
    int order = 0;
    int index = 0;
    int degree = 0;
    std::string name;
    std::vector<Perm> generators;
};

struct CatalogManifest {
    // order -> declared number of isomorphism classes (complete coverage)
    std::map<int, int> covered;
    // order -> reason, declared gaps
    std::map<int, std::string> partial;
};

class Catalog {
public:
    std::vector<CatalogEntry> entries;
    CatalogManifest manifest;

    const CatalogEntry* find(int order, int index) const {
        auto it = by_id_.find({order, index});
        return it == by_id_.end() ? nullptr : &entries[it->second];
    }

    bool order_complete(int n) const {
        return manifest.covered.count(n) > 0;
    }

    // Builds (and caches) all groups of the given order, in index order.
    // An uncovered order yields an empty list; the caller records the gap.
    const std::vector<std::shared_ptr<FiniteGroup>>& groups_of_order(
        int n) const {
        std::lock_guard<std::mutex> lk(*mu_);
        auto it = group_cache_.find(n);
        if (it != group_cache_.end()) return it->second;
        std::vector<std::shared_ptr<FiniteGroup>> out;
        auto range = by_order_.equal_range(n);
        std::vector<int> idxs;
        for (auto i = range.first; i != range.second; ++i)
            idxs.push_back(i->second);
        std::sort(idxs.begin(), idxs.end(), [&](int a, int b) {
            return entries[a].index < entries[b].index;
        });
        for (int ei : idxs) out.push_back(build_entry(ei));
        return group_cache_.emplace(n, std::move(out)).first->second;
    }

    std::shared_ptr<FiniteGroup> group(int order, int index) const {
        for (const auto& g : groups_of_order(order))
            if (g->catalog_id && g->catalog_id->second == index) return g;
        throw OrderMismatch("no catalog entry (" + std::to_string(order) +
                            "," + std::to_string(index) + ")");
    }

    std::shared_ptr<FiniteGroup> build_entry(int ei) const {
        const CatalogEntry& e = entries[ei];
        auto G = std::make_shared<FiniteGroup>(
            build_group(e.generators, std::max(1024, e.order)));
        if (G->n != e.order)
            throw OrderMismatch(
                "catalog entry (" + std::to_string(e.order) + "," +
                std::to_string(e.index) + ") builds order " +
                std::to_string(G->n));
        G->catalog_id = {e.order, e.index};
        G->name = e.name;
        return G;
    }

    std::string serialize() const {
        std::ostringstream os;
        for (const auto& [n, k] : manifest.covered)
            os << "!complete " << n << " " << k << "\n";
        for (const auto& [n, r] : manifest.partial)
            os << "!gap " << n << " " << r << "\n";
        for (const auto& e : entries) {
            os << e.order << " " << e.index << " " << e.degree;
            if (!e.name.empty()) os << " " << e.name;
            os << " :: ";
            for (size_t i = 0; i < e.generators.size(); ++i) {
                if (i) os << ";";
                os << format_cycles(e.generators[i]);
            }
            os << "\n";
        }
        return os.str();
    }

private:
    std::map<std::pair<int, int>, int> by_id_;
    std::multimap<int, int> by_order_;
    mutable std::map<int, std::vector<std::shared_ptr<FiniteGroup>>>
        group_cache_;
    mutable std::unique_ptr<std::mutex> mu_ =
        std::make_unique<std::mutex>();

    friend Catalog parse_catalog(std::istream& in);
};

inline Catalog parse_catalog(std::istream& in) {
    Catalog cat;
    std::string line;
    int lineno = 0;
    std::map<int, int> counts;
    while (std::getline(in, line)) {
        ++lineno;
        size_t h = line.find('#');
        if (h != std::string::npos) line = line.substr(0, h);
        // trim
        size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        size_t e = line.find_last_not_of(" \t\r");
        line = line.substr(b, e - b + 1);
        if (line[0] == '!') {
            std::istringstream is(line);
            std::string kw;
            is >> kw;
            if (kw == "!complete") {
                int n, k;
                if (!(is >> n >> k))
                    throw ParseError("bad !complete directive", lineno);
                cat.manifest.covered[n] = k;
            } else if (kw == "!gap") {
                int n;
                std::string reason;
                if (!(is >> n))
                    throw ParseError("bad !gap directive", lineno);
                std::getline(is, reason);
                size_t rb = reason.find_first_not_of(" \t");
                cat.manifest.partial[n] =
                    rb == std::string::npos ? "" : reason.substr(rb);
            } else {
                throw ParseError("unknown directive " + kw, lineno);
            }
            continue;
        }
        size_t sep = line.find("::");
        if (sep == std::string::npos)
            throw ParseError("missing '::' separator", lineno);
        std::istringstream head(line.substr(0, sep));
        CatalogEntry ent;
        if (!(head >> ent.order >> ent.index >> ent.degree))
            throw ParseError("bad entry header", lineno);
        head >> ent.name;  // optional
        std::string body = line.substr(sep + 2);
        std::istringstream bs(body);
        std::string genstr;
        while (std::getline(bs, genstr, ';')) {
            try {
                ent.generators.push_back(
                    parse_cycles(genstr, ent.degree));
            } catch (const InvalidPermutation& ex) {
                throw ParseError(ex.what(), lineno);
            }
        }
        if (ent.generators.empty())
            throw ParseError("entry without generators", lineno);
        std::pair<int, int> id{ent.order, ent.index};
        if (cat.by_id_.count(id))
            throw ParseError("duplicate catalog id (" +
                                 std::to_string(ent.order) + "," +
                                 std::to_string(ent.index) + ")",
                             lineno);
        cat.by_id_[id] = static_cast<int>(cat.entries.size());
        cat.by_order_.emplace(ent.order,
                              static_cast<int>(cat.entries.size()));
        counts[ent.order]++;
        cat.entries.push_back(std::move(ent));
    }
    for (const auto& [n, k] : cat.manifest.covered)
        if (counts[n] != k)
            throw OrderMismatch(
                "order " + std::to_string(n) + ": manifest declares " +
                std::to_string(k) + " classes, file has " +
                std::to_string(counts[n]));
    return cat;
}

inline Catalog load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open catalog file: " + path);
    return parse_catalog(in);
}

}  // namespace prym
