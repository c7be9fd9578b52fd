#pragma once

#include <string>
#include <vector>

#include "prym/errors.hpp"

namespace prym {

// Permutations are 0-based image arrays. Products compose right-to-left:
// (p*q)(x) = p(q(x)), so in a word the rightmost factor acts first.
using Perm = std::vector<int>;

inline Perm perm_identity(int deg) {
    Perm p(deg);
    for (int i = 0; i < deg; ++i) p[i] = i;
    return p;
}

inline Perm perm_compose(const Perm& p, const Perm& q) {
    Perm r(p.size());
    for (size_t x = 0; x < p.size(); ++x) r[x] = p[q[x]];
    return r;
}

inline Perm perm_inverse(const Perm& p) {
    Perm r(p.size());
    for (size_t x = 0; x < p.size(); ++x) r[p[x]] = x;
    return r;
}

inline void check_bijection(const Perm& p) {
    std::vector<char> hit(p.size(), 0);
    for (int v : p) {
        if (v < 0 || v >= static_cast<int>(p.size()) || hit[v])
            throw InvalidPermutation("not a bijection");
        hit[v] = 1;
    }
}

// Parses disjoint-cycle notation with 1-based points, e.g. "(1 2 3)(4 5)".
// "()" denotes the identity. `deg` is the total number of points.
inline Perm parse_cycles(const std::string& s, int deg) {
    Perm p = perm_identity(deg);
    size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        if (i >= s.size()) break;
        if (s[i] != '(') throw InvalidPermutation("expected '(' in cycles");
        ++i;
        std::vector<int> cyc;
        while (i < s.size() && s[i] != ')') {
            while (i < s.size() && (s[i] == ' ' || s[i] == ',')) ++i;
            if (i < s.size() && s[i] == ')') break;
            size_t j = i;
            while (j < s.size() && isdigit(static_cast<unsigned char>(s[j])))
                ++j;
            if (j == i) throw InvalidPermutation("bad cycle entry");
            int v = std::stoi(s.substr(i, j - i)) - 1;
            if (v < 0 || v >= deg)
                throw InvalidPermutation("cycle point out of range");
            cyc.push_back(v);
            i = j;
        }
        if (i >= s.size()) throw InvalidPermutation("unterminated cycle");
        ++i;  // ')'
        for (size_t k = 0; k < cyc.size(); ++k)
            p[cyc[k]] = cyc[(k + 1) % cyc.size()];
    }
    check_bijection(p);
    return p;
}

inline std::string format_cycles(const Perm& p) {
    std::string out;
    std::vector<char> seen(p.size(), 0);
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == static_cast<int>(i)) {
            seen[i] = 1;
            continue;
        }
        out += "(";
        size_t j = i;
        bool first = true;
        while (!seen[j]) {
            if (!first) out += " ";
            out += std::to_string(j + 1);
            seen[j] = 1;
            first = false;
            j = p[j];
        }
        out += ")";
    }
    return out.empty() ? "()" : out;
}

}  // namespace prym
