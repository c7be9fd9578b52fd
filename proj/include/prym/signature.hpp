#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <string>
#include <vector>

#include "prym/errors.hpp"

namespace prym {

enum class CoverKind { etale, ram1, ram2 };

inline const char* kind_name(CoverKind k) {
    switch (k) {
        case CoverKind::etale: return "etale";
        case CoverKind::ram1: return "ram1";
        case CoverKind::ram2: return "ram2";
    }
    return "?";
}

inline CoverKind kind_from_name(const std::string& s) {
    if (s == "etale") return CoverKind::etale;
    if (s == "ram1") return CoverKind::ram1;
    if (s == "ram2") return CoverKind::ram2;
    throw Error("unknown cover kind: " + s);
}

struct Signature {
    int n = 0;
    std::array<int, 4> m{};  // sorted ascending
    CoverKind kind = CoverKind::etale;
    int gtilde = 0;

    bool operator<(const Signature& o) const {
        if (n != o.n) return n < o.n;
        return m < o.m;
    }
    bool operator==(const Signature& o) const {
        return n == o.n && m == o.m && kind == o.kind && gtilde == o.gtilde;
    }
};

// Any admissible order satisfies n <= 12 * (2g-2): the smallest positive
// value of sum(1 - 1/m_i) - 2 over integer 4-tuples is 1/6, at (2,2,2,3).
inline int max_order_bound(int gtilde) { return 12 * (2 * gtilde - 2); }

// All (n, m) with 2g-2 = n * (sum(1 - 1/m_i) - 2) exactly, each m_i | n,
// n even (a central involution must exist), plus the per-kind constraints.
// Exact integer arithmetic throughout.
inline std::vector<Signature> enumerate_signatures(int gtilde,
                                                   CoverKind kind) {
    if (gtilde < 2) throw Error("gtilde must be >= 2");
    std::vector<Signature> out;
    long long rhs = 2LL * gtilde - 2;
    int bound = max_order_bound(gtilde);
    for (int n = 2; n <= bound; n += 2) {
        std::vector<int> divs;
        for (int d = 2; d <= n; ++d)
            if (n % d == 0) divs.push_back(d);
        size_t nd = divs.size();
        for (size_t i = 0; i < nd; ++i)
            for (size_t j = i; j < nd; ++j)
                for (size_t k = j; k < nd; ++k)
                    for (size_t l = k; l < nd; ++l) {
                        long long m1 = divs[i], m2 = divs[j], m3 = divs[k],
                                  m4 = divs[l];
                        // n * (2 - 1/m1 - ... ) == rhs, all m_i | n, so each
                        // n/m_i is integral:
                        long long val = 2LL * n - n / m1 - n / m2 - n / m3 -
                                        n / m4;
                        if (val != rhs) continue;
                        Signature s;
                        s.n = n;
                        s.m = {static_cast<int>(m1), static_cast<int>(m2),
                               static_cast<int>(m3), static_cast<int>(m4)};
                        s.kind = kind;
                        s.gtilde = gtilde;
                        if (kind == CoverKind::ram1) {
                            bool ok = false;
                            for (int mi : s.m)
                                if (2 * mi == n) ok = true;
                            if (!ok) continue;
                        } else if (kind == CoverKind::ram2) {
                            int cnt = 0;
                            for (int mi : s.m)
                                if (mi == n) ++cnt;
                            if (cnt < 2) continue;
                        }
                        out.push_back(s);
                    }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace prym
