#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "prym/cover.hpp"
#include "prym/genvec.hpp"

namespace prym {

enum class BSource { from_B1, paper_asserted, unknown };

inline const char* bsource_name(BSource s) {
    switch (s) {
        case BSource::from_B1: return "from_B1";
        case BSource::paper_asserted: return "paper_asserted";
        case BSource::unknown: return "unknown";
    }
    return "?";
}

enum class RedStatus {
    not_applicable,       // ramified kinds
    witness,              // reducibility witness found
    none_in_group,        // no witness inside this group
    catalog_closed        // no witness and scan coverage had no gaps
};

inline const char* redstatus_name(RedStatus s) {
    switch (s) {
        case RedStatus::not_applicable: return "not-applicable";
        case RedStatus::witness: return "witness";
        case RedStatus::none_in_group: return "no-witness-in-group";
        case RedStatus::catalog_closed: return "irreducible-catalog-closed";
    }
    return "?";
}

struct DatumDims {
    int gtilde = 0;
    int g = 0;
    long long dimVminus = 0;
    long long N1 = 0;
    long long N2 = 0;
    long long dimS2Vminus = 0;
};

// Full per-datum evaluation result (the computable part of a DatumReport).
struct DatumEval {
    DatumDims dims;
    bool flag_A = false;
    bool flag_B1 = false;          // meaningful only when flag_A
    std::optional<int> red_witness;  // element index, etale only
    RedStatus red_status = RedStatus::not_applicable;
    // linear-character decomposition of V_-, abelian groups only
    std::vector<std::pair<std::string, long long>> abelian_decomposition;
};

// Condition (A): dim (S^2 V_-)^G = 1, together with the bookkeeping
// N1 = dim(S^2 V)^G, N2 = dim(S^2 V_+)^{G/<sigma>} and the identity
// N1 - N2 = dim(S^2 V_-)^G.
inline void check_condition_A(const PrymDatum& d,
                              const DifferentialCharacter& chi,
                              const DifferentialCharacter& chim,
                              DatumDims& dims) {
    const FiniteGroup& G = *d.G;
    dims.gtilde = d.gtilde;
    dims.g = d.g;
    long long forced =
        chi.values[d.sigma].extract_integer(1, "chi(sigma)");
    long long expect = d.kind == CoverKind::etale ? 1 : 0;
    if (forced != expect)
        throw InternalInconsistency("chi(sigma) convention check failed");
    dims.dimVminus = chim.values[0].extract_integer(1, "dim V-");
    long long want_vm =
        d.kind == CoverKind::etale ? d.g - 1 : d.g;
    if (dims.dimVminus != want_vm)
        throw InternalInconsistency("dim V- does not match the genus");
    dims.N1 = dim_sym2_invariants(G, chi);
    dims.dimS2Vminus = dim_sym2_invariants(G, chim);
    // N2 over the quotient group, with chi_+ transported along cosets
    auto [Q, img] = quotient_datum(d);
    (void)img;
    auto proj = quotient_projection(d, Q);
    DifferentialCharacter chip = chi_plus(d, chi);
    DifferentialCharacter chipq;
    chipq.N = chip.N;
    chipq.values.assign(Q.n, CycloQ(chip.N));
    for (int x = 0; x < G.n; ++x) chipq.values[proj[x]] = chip.values[x];
    dims.N2 = dim_sym2_invariants(Q, chipq);
    if (dims.N1 - dims.N2 != dims.dimS2Vminus)
        throw InternalInconsistency("N1 - N2 != dim(S^2 V_-)^G");
    if (dims.N2 < 0 || dims.N1 < dims.N2)
        throw InternalInconsistency("sym2 dimension ordering violated");
}

// Condition (B1): the one-dimensional (S^2 V_-)^G comes from two
// 1-dimensional subrepresentations. With m_l the multiplicity of the
// linear character l in V_-, the 1-dimensional contribution to
// (S^2 V_-)^G is sum_{l^2=1} m_l (m_l + 1)/2 + sum_{l != mu, l mu = 1}
// m_l m_mu; (B1) holds iff it equals 1.
inline bool check_condition_B1(const PrymDatum& d,
                               const DifferentialCharacter& chim,
                               long long dimS2Vminus) {
    if (dimS2Vminus != 1)
        throw ConditionAPrerequisite(
            "condition (B1) requires dim(S^2 V_-)^G = 1");
    const FiniteGroup& G = *d.G;
    auto chars = linear_characters(G);
    long long M = chars.front().modulus;
    std::vector<long long> mult(chars.size());
    for (size_t i = 0; i < chars.size(); ++i)
        mult[i] = multiplicity(G, chim, chars[i]);
    // index characters by exponent arrays for inverse lookup
    std::map<std::vector<int>, size_t> by_exp;
    for (size_t i = 0; i < chars.size(); ++i)
        by_exp[chars[i].exponent] = i;
    long long dlin = 0;
    for (size_t i = 0; i < chars.size(); ++i) {
        if (!mult[i]) continue;
        std::vector<int> invexp(G.n);
        for (int x = 0; x < G.n; ++x)
            invexp[x] = static_cast<int>((M - chars[i].exponent[x]) % M);
        size_t j = by_exp.at(invexp);
        if (j == i)
            dlin += mult[i] * (mult[i] + 1) / 2;
        else if (j > i)
            dlin += mult[i] * mult[j];
    }
    return dlin == 1;
}

inline std::vector<std::pair<std::string, long long>> abelian_decomposition(
    const PrymDatum& d, const DifferentialCharacter& chim) {
    const FiniteGroup& G = *d.G;
    if (!G.is_abelian()) throw NotAbelian("abelian_decomposition");
    std::vector<std::pair<std::string, long long>> out;
    long long total = 0;
    for (const auto& chi : linear_characters(G)) {
        long long m = multiplicity(G, chim, chi);
        if (m > 0) {
            out.emplace_back(chi.label, m);
            total += m;
        }
    }
    long long dvm = chim.values[0].extract_integer(1, "dim V-");
    if (total != dvm)
        throw InternalInconsistency(
            "abelian decomposition does not sum to dim V-");
    return out;
}

// Mumford reducibility witness: the least involution h outside {1, sigma}
// with C~/<h,sigma> rational and both C~/<h>, C~/<h sigma> of positive
// genus. Etale kinds only.
inline std::optional<int> reducibility_witness(
    const PrymDatum& d, const DifferentialCharacter& chi) {
    if (d.kind != CoverKind::etale) return std::nullopt;
    const FiniteGroup& G = *d.G;
    for (int h = 1; h < G.n; ++h) {
        if (G.order(h) != 2 || h == d.sigma) continue;
        auto hs = G.subgroup({h, d.sigma});
        if (quotient_genus(d, chi, hs) != 0) continue;
        if (quotient_genus(d, chi, G.subgroup({h})) <= 0) continue;
        int hsig = G.mul(h, d.sigma);
        if (quotient_genus(d, chi, G.subgroup({hsig})) <= 0) continue;
        return h;
    }
    return std::nullopt;
}

// Full evaluation of one datum.
inline DatumEval evaluate_datum(const PrymDatum& d) {
    validate_datum(d);
    DatumEval ev;
    DifferentialCharacter chi = chi_V(d);
    DifferentialCharacter chim = chi_minus(d, chi);
    check_condition_A(d, chi, chim, ev.dims);
    ev.flag_A = (ev.dims.dimS2Vminus == 1);
    if (ev.flag_A)
        ev.flag_B1 = check_condition_B1(d, chim, ev.dims.dimS2Vminus);
    if (d.G->is_abelian())
        ev.abelian_decomposition = abelian_decomposition(d, chim);
    if (d.kind == CoverKind::etale) {
        ev.red_witness = reducibility_witness(d, chi);
        ev.red_status = ev.red_witness ? RedStatus::witness
                                       : RedStatus::none_in_group;
    }
    return ev;
}

}  // namespace prym
