#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "prym/group.hpp"
#include "prym/signature.hpp"

namespace prym {

struct GeneratingVector {
    std::array<int, 4> x{};
};

struct PrymDatum {
    const FiniteGroup* G = nullptr;
    GeneratingVector v;
    int sigma = -1;
    CoverKind kind = CoverKind::etale;
    std::array<int, 4> m{};  // orders of the entries, unsorted
    int gtilde = 0;
    int g = 0;
};

// (vector, sigma) pair; the unit of the Hurwitz classification.
struct State {
    std::array<int, 4> x{};
    int sigma = -1;
    bool operator==(const State& o) const {
        return x == o.x && sigma == o.sigma;
    }
    bool operator<(const State& o) const {
        if (x != o.x) return x < o.x;
        return sigma < o.sigma;
    }
    uint64_t key() const {
        return (uint64_t)x[0] | ((uint64_t)x[1] << 12) |
               ((uint64_t)x[2] << 24) | ((uint64_t)x[3] << 36) |
               ((uint64_t)(sigma + 1) << 48);
    }
};

inline int product4(const FiniteGroup& G, const std::array<int, 4>& x) {
    return G.mul(G.mul(G.mul(x[0], x[1]), x[2]), x[3]);
}

inline bool generates(const FiniteGroup& G, const std::array<int, 4>& x) {
    // x4 = (x1 x2 x3)^-1 lies in <x1,x2,x3>, so three entries suffice
    std::vector<char> in(G.n, 0);
    in[0] = 1;
    std::vector<int> frontier{0};
    int count = 1;
    while (!frontier.empty() && count < G.n) {
        std::vector<int> nf;
        for (int e : frontier)
            for (int i = 0; i < 3; ++i) {
                int y = G.mul(e, x[i]);
                if (!in[y]) {
                    in[y] = 1;
                    ++count;
                    nf.push_back(y);
                }
            }
        frontier = std::move(nf);
    }
    return count == G.n;
}

// Braid move on slot i (1-based, i in {1,2,3}):
// (..., x_i, x_{i+1}, ...) -> (..., x_{i+1}, x_{i+1}^-1 x_i x_{i+1}, ...).
inline GeneratingVector braid_move(const FiniteGroup& G,
                                   const GeneratingVector& v, int i) {
    GeneratingVector w = v;
    int a = v.x[i - 1], b = v.x[i];
    w.x[i - 1] = b;
    w.x[i] = G.mul(G.mul(G.inv(b), a), b);
    return w;
}

inline GeneratingVector braid_move_inv(const FiniteGroup& G,
                                       const GeneratingVector& v, int i) {
    GeneratingVector w = v;
    int a = v.x[i - 1], b = v.x[i];
    w.x[i - 1] = G.mul(G.mul(a, b), G.inv(a));
    w.x[i] = a;
    return w;
}

// All vectors with entry-order tuple exactly `m` (unsorted arrangement),
// product one, generating the group.
inline std::vector<GeneratingVector> enumerate_vectors(
    const FiniteGroup& G, const std::array<int, 4>& m) {
    for (int mi : m)
        if (mi < 2 || G.n % mi) return {};
    std::vector<std::vector<int>> bucket(4);
    for (int i = 0; i < 4; ++i)
        for (int e = 1; e < G.n; ++e)
            if (G.order(e) == m[i]) bucket[i].push_back(e);
    std::vector<GeneratingVector> out;
    for (int x1 : bucket[0])
        for (int x2 : bucket[1]) {
            int p12 = G.mul(x1, x2);
            for (int x3 : bucket[2]) {
                int x4 = G.inv(G.mul(p12, x3));
                if (G.order(x4) != m[3]) continue;
                std::array<int, 4> x{x1, x2, x3, x4};
                if (!generates(G, x)) continue;
                out.push_back(GeneratingVector{x});
            }
        }
    return out;
}

// Central involutions compatible with the kind's stabilizer-membership
// conditions against <x_1>, ..., <x_4>.
inline std::vector<int> central_involutions(const FiniteGroup& G,
                                            const GeneratingVector& v,
                                            CoverKind kind) {
    std::vector<int> out;
    auto Z = G.center();
    std::array<std::vector<char>, 4> in_cyc;
    for (int i = 0; i < 4; ++i) {
        in_cyc[i].assign(G.n, 0);
        int e = 0;
        do {
            in_cyc[i][e] = 1;
            e = G.mul(e, v.x[i]);
        } while (e != 0);
    }
    for (int s : Z) {
        if (G.order(s) != 2) continue;
        int cnt = 0;
        bool order_ok = true;
        for (int i = 0; i < 4; ++i)
            if (in_cyc[i][s]) {
                ++cnt;
                int mi = G.order(v.x[i]);
                if (kind == CoverKind::ram1 && 2 * mi != G.n)
                    order_ok = false;
                if (kind == CoverKind::ram2 && mi != G.n) order_ok = false;
            }
        bool ok = false;
        switch (kind) {
            case CoverKind::etale: ok = (cnt == 0); break;
            case CoverKind::ram1: ok = (cnt == 1) && order_ok; break;
            case CoverKind::ram2: ok = (cnt == 2) && order_ok; break;
        }
        if (ok) out.push_back(s);
    }
    return out;
}

inline int genus_from_gtilde(CoverKind kind, int gtilde) {
    if (kind == CoverKind::etale) {
        if (gtilde % 2 == 0)
            throw InternalInconsistency("etale datum with even gtilde");
        return (gtilde + 1) / 2;
    }
    if (gtilde % 2)
        throw InternalInconsistency("ramified datum with odd gtilde");
    return gtilde / 2;
}

inline int gtilde_of_vector(const FiniteGroup& G,
                            const std::array<int, 4>& m) {
    long long val = 2LL * G.n;
    for (int mi : m) val -= G.n / mi;
    if (val % 2 || val < 2)
        throw InternalInconsistency("Riemann-Hurwitz value not admissible");
    return static_cast<int>(val / 2 + 1);
}

inline PrymDatum make_datum(const FiniteGroup& G, const GeneratingVector& v,
                            int sigma, CoverKind kind) {
    PrymDatum d;
    d.G = &G;
    d.v = v;
    d.sigma = sigma;
    d.kind = kind;
    for (int i = 0; i < 4; ++i) d.m[i] = G.order(v.x[i]);
    d.gtilde = gtilde_of_vector(G, d.m);
    d.g = genus_from_gtilde(kind, d.gtilde);
    return d;
}

// Checks all PrymDatum invariants; throws InternalInconsistency on failure.
inline void validate_datum(const PrymDatum& d) {
    const FiniteGroup& G = *d.G;
    if (product4(G, d.v.x) != 0)
        throw InternalInconsistency("vector product is not one");
    if (!generates(G, d.v.x))
        throw InternalInconsistency("vector does not generate");
    if (G.order(d.sigma) != 2)
        throw InternalInconsistency("sigma is not an involution");
    for (int b = 0; b < G.n; ++b)
        if (G.mul(d.sigma, b) != G.mul(b, d.sigma))
            throw InternalInconsistency("sigma is not central");
    auto cands = central_involutions(G, d.v, d.kind);
    if (std::find(cands.begin(), cands.end(), d.sigma) == cands.end())
        throw InternalInconsistency("sigma fails the kind conditions");
    if (d.kind == CoverKind::etale && G.is_cyclic())
        throw InternalInconsistency("etale datum on a cyclic group");
    if (d.gtilde != gtilde_of_vector(G, d.m))
        throw InternalInconsistency("genus bookkeeping mismatch");
}

// ------------------------------------------------------------ Hurwitz orbits

struct HurwitzClass {
    State rep;            // lexicographically minimal orbit member
    long long orbit_size = 0;
    State vec_rep;        // minimal member of the braid+Aut orbit of the
                          // vector alone (sigma ignored); identifies the
                          // paper-style two-stage grouping
    std::string class_id;
};

struct HurwitzOptions {
    size_t state_cap = 8'000'000;
    int aut_cap = 256;
};

// Partition of the given states into orbits under the braid moves combined
// with automorphisms applied to all entries and sigma simultaneously.
inline std::vector<HurwitzClass> hurwitz_classes(
    const FiniteGroup& G, const std::vector<State>& states,
    const std::vector<std::vector<int16_t>>& auts,
    const HurwitzOptions& opt = {}) {
    if (states.size() > opt.state_cap)
        throw OrbitCapExceeded("state count exceeds orbit cap");
    std::unordered_map<uint64_t, int> pos;
    pos.reserve(states.size() * 2);
    for (size_t i = 0; i < states.size(); ++i)
        pos[states[i].key()] = static_cast<int>(i);

    auto lookup = [&](const State& s) {
        auto it = pos.find(s.key());
        if (it == pos.end())
            throw InternalInconsistency(
                "orbit left the enumerated state set");
        return it->second;
    };

    // braid orbits
    std::vector<int> orbit_of(states.size(), -1);
    std::vector<std::vector<int>> orbits;
    for (size_t s0 = 0; s0 < states.size(); ++s0) {
        if (orbit_of[s0] >= 0) continue;
        int oid = static_cast<int>(orbits.size());
        std::vector<int> members{static_cast<int>(s0)};
        orbit_of[s0] = oid;
        for (size_t qi = 0; qi < members.size(); ++qi) {
            State cur = states[members[qi]];
            for (int i = 1; i <= 3; ++i)
                for (int dir = 0; dir < 2; ++dir) {
                    GeneratingVector v{cur.x};
                    GeneratingVector w = dir ? braid_move_inv(G, v, i)
                                             : braid_move(G, v, i);
                    State ns{w.x, cur.sigma};
                    int j = lookup(ns);
                    if (orbit_of[j] < 0) {
                        orbit_of[j] = oid;
                        members.push_back(j);
                    }
                }
        }
        orbits.push_back(std::move(members));
    }

    // merge braid orbits under the automorphism action (union-find)
    std::vector<int> parent(orbits.size());
    for (size_t i = 0; i < parent.size(); ++i) parent[i] = (int)i;
    std::function<int(int)> find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (size_t oid = 0; oid < orbits.size(); ++oid) {
        const State& rep = states[orbits[oid][0]];
        for (const auto& al : auts) {
            State ns;
            for (int i = 0; i < 4; ++i) ns.x[i] = al[rep.x[i]];
            ns.sigma = al[rep.sigma];
            int j = find(orbit_of[lookup(ns)]);
            int a = find(static_cast<int>(oid));
            if (a != j) parent[std::max(a, j)] = std::min(a, j);
        }
    }

    std::unordered_map<int, HurwitzClass> cls;
    for (size_t oid = 0; oid < orbits.size(); ++oid) {
        int root = find(static_cast<int>(oid));
        auto& hc = cls[root];
        for (int si : orbits[oid]) {
            const State& s = states[si];
            if (hc.orbit_size == 0 || s < hc.rep) hc.rep = s;
            ++hc.orbit_size;
        }
    }

    // vector-only orbits for the two-stage (paper-style) grouping
    std::vector<State> vstates;
    {
        std::set<std::array<int, 4>> vs;
        for (const auto& s : states) vs.insert(s.x);
        for (const auto& x : vs) vstates.push_back(State{x, -1});
    }
    std::unordered_map<uint64_t, int> vpos;
    for (size_t i = 0; i < vstates.size(); ++i)
        vpos[vstates[i].key()] = static_cast<int>(i);
    std::vector<int> vorb(vstates.size(), -1);
    std::vector<State> vmin;
    for (size_t s0 = 0; s0 < vstates.size(); ++s0) {
        if (vorb[s0] >= 0) continue;
        int oid = static_cast<int>(vmin.size());
        std::vector<int> members{static_cast<int>(s0)};
        vorb[s0] = oid;
        State mn = vstates[s0];
        for (size_t qi = 0; qi < members.size(); ++qi) {
            State cur = vstates[members[qi]];
            if (cur < mn) mn = cur;
            std::vector<State> nexts;
            for (int i = 1; i <= 3; ++i)
                for (int dir = 0; dir < 2; ++dir) {
                    GeneratingVector v{cur.x};
                    GeneratingVector w = dir ? braid_move_inv(G, v, i)
                                             : braid_move(G, v, i);
                    nexts.push_back(State{w.x, -1});
                }
            for (const auto& al : auts) {
                State ns{{al[cur.x[0]], al[cur.x[1]], al[cur.x[2]],
                          al[cur.x[3]]},
                         -1};
                nexts.push_back(ns);
            }
            for (const auto& ns : nexts) {
                auto it = vpos.find(ns.key());
                if (it == vpos.end())
                    throw InternalInconsistency(
                        "vector orbit left the enumerated set");
                if (vorb[it->second] < 0) {
                    vorb[it->second] = oid;
                    members.push_back(it->second);
                }
            }
        }
        vmin.push_back(mn);
    }

    std::vector<HurwitzClass> out;
    for (auto& [root, hc] : cls) {
        hc.vec_rep = vmin[vorb[vpos.at(State{hc.rep.x, -1}.key())]];
        out.push_back(hc);
    }
    std::sort(out.begin(), out.end(),
              [](const HurwitzClass& a, const HurwitzClass& b) {
                  return a.rep < b.rep;
              });
    return out;
}

// Deterministic sample of up to `count` members of the class containing
// `rep`, used for orbit-invariance rechecks.
inline std::vector<State> orbit_samples(const FiniteGroup& G,
                                        const State& rep,
                                        const std::vector<std::vector<int16_t>>& auts,
                                        int count) {
    std::vector<State> out{rep};
    State cur = rep;
    for (int step = 1; static_cast<int>(out.size()) < count && step <= 12;
         ++step) {
        GeneratingVector v{cur.x};
        GeneratingVector w = braid_move(G, v, 1 + (step % 3));
        cur = State{w.x, cur.sigma};
        if (!auts.empty() && step % 2) {
            const auto& al = auts[step % auts.size()];
            State ns;
            for (int i = 0; i < 4; ++i) ns.x[i] = al[cur.x[i]];
            ns.sigma = al[cur.sigma];
            cur = ns;
        }
        if (std::find(out.begin(), out.end(), cur) == out.end())
            out.push_back(cur);
    }
    return out;
}

// --------------------------------------------------------- quotient by sigma

// G_bar = G/<sigma> with deterministic coset indexing (BFS over the images
// of the construction generators), plus the image vector.
inline std::pair<FiniteGroup, GeneratingVector> quotient_datum(
    const PrymDatum& d) {
    const FiniteGroup& G = *d.G;
    int n = G.n;
    std::vector<int> coset(n, -1);
    std::vector<int> reps;
    for (int x = 0; x < n; ++x) {
        if (coset[x] >= 0) continue;
        int id = static_cast<int>(reps.size());
        coset[x] = id;
        coset[G.mul(x, d.sigma)] = id;
        reps.push_back(x);
    }
    int m = static_cast<int>(reps.size());
    std::vector<int16_t> qtab(static_cast<size_t>(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            qtab[i * m + j] =
                static_cast<int16_t>(coset[G.mul(reps[i], reps[j])]);
    std::vector<int> qgens;
    for (int g : G.gens) qgens.push_back(coset[g]);
    if (qgens.empty())
        for (int i = 0; i < 4; ++i) qgens.push_back(coset[d.v.x[i]]);
    FiniteGroup Q = group_from_table(m, qtab, qgens);
    // group_from_table relabelled; recover the relabelling
    // by rebuilding the coset map through Q's BFS order.
    // group_from_table's bfs[] is internal, so recompute positions:
    // the i-th BFS element of qtab corresponds to Q index i; we need the
    // map qtab-label -> Q-label. Rebuild it the same way.
    std::vector<int> bfs{0};
    std::vector<int> posq(m, -1);
    posq[0] = 0;
    for (size_t qi = 0; qi < bfs.size(); ++qi)
        for (int g : qgens) {
            int y = qtab[bfs[qi] * m + g];
            if (posq[y] < 0) {
                posq[y] = static_cast<int>(bfs.size());
                bfs.push_back(y);
            }
        }
    GeneratingVector img;
    for (int i = 0; i < 4; ++i) img.x[i] = posq[coset[d.v.x[i]]];
    return {std::move(Q), img};
}

// Map from G elements to quotient element indices (matching quotient_datum's
// labelling).
inline std::vector<int> quotient_projection(const PrymDatum& d,
                                            const FiniteGroup& Q) {
    const FiniteGroup& G = *d.G;
    int n = G.n;
    std::vector<int> coset(n, -1);
    std::vector<int> reps;
    for (int x = 0; x < n; ++x) {
        if (coset[x] >= 0) continue;
        int id = static_cast<int>(reps.size());
        coset[x] = id;
        coset[G.mul(x, d.sigma)] = id;
        reps.push_back(x);
    }
    int m = static_cast<int>(reps.size());
    std::vector<int16_t> qtab(static_cast<size_t>(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            qtab[i * m + j] =
                static_cast<int16_t>(coset[G.mul(reps[i], reps[j])]);
    std::vector<int> qgens;
    for (int g : G.gens) qgens.push_back(coset[g]);
    if (qgens.empty())
        for (int i = 0; i < 4; ++i) qgens.push_back(coset[d.v.x[i]]);
    std::vector<int> bfs{0};
    std::vector<int> posq(m, -1);
    posq[0] = 0;
    for (size_t qi = 0; qi < bfs.size(); ++qi)
        for (int g : qgens) {
            int y = qtab[bfs[qi] * m + g];
            if (posq[y] < 0) {
                posq[y] = static_cast<int>(bfs.size());
                bfs.push_back(y);
            }
        }
    std::vector<int> proj(n);
    for (int x = 0; x < n; ++x) proj[x] = posq[coset[x]];
    (void)Q;
    return proj;
}

}  // namespace prym
