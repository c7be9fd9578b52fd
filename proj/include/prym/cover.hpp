#pragma once

#include <array>
#include <map>
#include <numeric>
#include <vector>

#include "prym/cyclo.hpp"
#include "prym/genvec.hpp"
#include "prym/group.hpp"

namespace prym {

// One fixed point of h on the covering curve: over branch point i, the
// left cosets c<x_i> with c^-1 h c in <x_i>; k records c^-1 h c = x_i^k.
struct FixedPoint {
    int branch = 0;  // 0..3
    int k = 0;       // rotation exponent mod m_i
};

inline std::vector<FixedPoint> fixed_point_data(const PrymDatum& d, int h) {
    if (h == 0) throw Error("fixed_point_data: h must be nontrivial");
    const FiniteGroup& G = *d.G;
    std::vector<FixedPoint> out;
    for (int i = 0; i < 4; ++i) {
        int xi = d.v.x[i];
        int mi = G.order(xi);
        std::vector<int> power_of(G.n, -1);
        {
            int e = 0, k = 0;
            do {
                power_of[e] = k;
                e = G.mul(e, xi);
                ++k;
            } while (e != 0);
        }
        std::vector<char> seen(G.n, 0);
        for (int c = 0; c < G.n; ++c) {
            if (seen[c]) continue;
            // mark the left coset c<x_i>
            int e = c;
            do {
                seen[e] = 1;
                e = G.mul(e, xi);
            } while (e != c);
            int t = G.mul(G.mul(G.inv(c), h), c);
            if (power_of[t] >= 0)
                out.push_back(FixedPoint{i, power_of[t]});
        }
        (void)mi;
    }
    return out;
}

// Character of the action on holomorphic differentials, one exact value per
// element: chi(1) = gtilde and, for h != 1, the fixed-point trace formula
// chi(h) = 1 + sum over fixed points of zeta^k / (1 - zeta^k).
struct DifferentialCharacter {
    int N = 1;  // conductor: exponent of the group
    std::vector<CycloQ> values;
};

inline DifferentialCharacter chi_V(const PrymDatum& d) {
    const FiniteGroup& G = *d.G;
    int N = static_cast<int>(G.exponent());
    DifferentialCharacter chi;
    chi.N = N;
    chi.values.assign(G.n, CycloQ(N));
    chi.values[0] = CycloQ::integer(N, d.gtilde);
    std::map<long long, CycloQ> term_cache;
    for (int h = 1; h < G.n; ++h) {
        CycloQ val = CycloQ::integer(N, 1);
        for (const auto& fp : fixed_point_data(d, h)) {
            int mi = G.order(d.v.x[fp.branch]);
            long long j = static_cast<long long>(fp.k) * (N / mi);
            auto it = term_cache.find(j);
            if (it == term_cache.end())
                it = term_cache.emplace(j, CycloQ::rotation_term(N, j))
                         .first;
            val = val.add(it->second);
        }
        chi.values[h] = val;
    }
    return chi;
}

// chi_-(h) = (chi(h) - chi(sigma h)) / 2, the sigma-antiinvariant part.
inline DifferentialCharacter chi_minus(const PrymDatum& d,
                                       const DifferentialCharacter& chi) {
    const FiniteGroup& G = *d.G;
    DifferentialCharacter out;
    out.N = chi.N;
    out.values.assign(G.n, CycloQ(chi.N));
    for (int h = 0; h < G.n; ++h)
        out.values[h] =
            chi.values[h].sub(chi.values[G.mul(d.sigma, h)]).scaled(1, 2);
    return out;
}

inline DifferentialCharacter chi_plus(const PrymDatum& d,
                                      const DifferentialCharacter& chi) {
    const FiniteGroup& G = *d.G;
    DifferentialCharacter out;
    out.N = chi.N;
    out.values.assign(G.n, CycloQ(chi.N));
    for (int h = 0; h < G.n; ++h)
        out.values[h] =
            chi.values[h].add(chi.values[G.mul(d.sigma, h)]).scaled(1, 2);
    return out;
}

// dim of the H-invariants: (1/|H|) sum over H of chi(h).
inline long long dim_invariants(const FiniteGroup& G,
                                const DifferentialCharacter& chi,
                                const std::vector<int>& H) {
    CycloQ s(chi.N);
    for (int h : H) s = s.add(chi.values[h]);
    long long r = s.extract_integer(static_cast<long long>(H.size()),
                                    "dim_invariants");
    if (r < 0) throw NonIntegralReduction("negative invariant dimension");
    return r;
}

// dim (S^2 V)^G = (1/2|G|) sum over G of chi(h)^2 + chi(h^2).
inline long long dim_sym2_invariants(const FiniteGroup& G,
                                     const DifferentialCharacter& chi) {
    CycloQ s(chi.N);
    for (int h = 0; h < G.n; ++h) {
        s = s.add(chi.values[h].mul(chi.values[h]));
        s = s.add(chi.values[G.mul(h, h)]);
    }
    long long r =
        s.extract_integer(2LL * G.n, "dim_sym2_invariants");
    if (r < 0) throw NonIntegralReduction("negative sym2 dimension");
    return r;
}

// Multiplicity of the linear character lambda in chi:
// (1/|G|) sum chi(h) * conj(lambda(h)).
inline long long multiplicity(const FiniteGroup& G,
                              const DifferentialCharacter& chi,
                              const LinearCharacter& lam) {
    long long M = lam.modulus;
    if (chi.N % M)
        throw InternalInconsistency("character modulus does not divide N");
    CycloQ s(chi.N);
    for (int h = 0; h < G.n; ++h)
        s = s.add(
            chi.values[h].rotated(-lam.exponent[h] * (chi.N / M)));
    long long r = s.extract_integer(G.n, "multiplicity");
    if (r < 0) throw NonIntegralReduction("negative multiplicity");
    return r;
}

// Genus of C~/H by the fixed-point count formula; cross-checked against the
// invariant-dimension route on every call.
inline long long quotient_genus(const PrymDatum& d,
                                const DifferentialCharacter& chi,
                                const std::vector<int>& H) {
    long long fix_sum = 0;
    for (int h : H) {
        if (h == 0) continue;
        fix_sum += static_cast<long long>(fixed_point_data(d, h).size());
    }
    long long H2 = 2LL * static_cast<long long>(H.size());
    long long num = H2 + 2LL * (d.gtilde - 1) - fix_sum;
    if (num % H2)
        throw InternalInconsistency("quotient genus is not an integer");
    long long g1 = num / H2;
    long long g2 = dim_invariants(*d.G, chi, H);
    if (g1 != g2)
        throw InternalInconsistency(
            "quotient-genus formulas disagree: " + std::to_string(g1) +
            " vs " + std::to_string(g2));
    return g1;
}

}  // namespace prym
