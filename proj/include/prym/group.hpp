#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "prym/errors.hpp"
#include "prym/perm.hpp"

namespace prym {

// A finite group as an explicit multiplication table. Index 0 is the
// identity; the remaining indices follow a breadth-first walk from the
// identity over the construction generators, so element numbering is
// reproducible. Immutable after construction.
class FiniteGroup {
public:
    int n = 0;
    std::vector<int16_t> tab;       // n*n, tab[a*n+b] = a*b
    std::vector<int16_t> inv_;
    std::vector<int16_t> ord_;
    std::vector<int> gens;          // generator element indices
    std::vector<Perm> source_perms;
    // word_tree[e] = {parent, generator slot}; identity has {-1,-1}
    std::vector<std::pair<int, int>> word_tree;
    std::optional<std::pair<int, int>> catalog_id;
    std::string name;

    int mul(int a, int b) const { return tab[a * n + b]; }
    int inv(int a) const { return inv_[a]; }
    int order(int a) const { return ord_[a]; }
    int conj(int a, int g) const { return mul(mul(inv(g), a), g); }

    int pow(int a, long long k) const {
        int o = ord_[a];
        k %= o;
        if (k < 0) k += o;
        int r = 0;
        for (long long i = 0; i < k; ++i) r = mul(r, a);
        return r;
    }

    bool is_abelian() const {
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (mul(a, b) != mul(b, a)) return false;
        return true;
    }

    bool is_cyclic() const {
        for (int a = 0; a < n; ++a)
            if (ord_[a] == n) return true;
        return false;
    }

    long long exponent() const {
        long long e = 1;
        for (int a = 0; a < n; ++a) e = std::lcm(e, (long long)ord_[a]);
        return e;
    }

    std::vector<int> center() const {
        std::vector<int> z;
        for (int a = 0; a < n; ++a) {
            bool c = true;
            for (int b = 0; b < n && c; ++b)
                if (mul(a, b) != mul(b, a)) c = false;
            if (c) z.push_back(a);
        }
        return z;
    }

    std::vector<int> subgroup(const std::vector<int>& sgens) const {
        std::vector<char> in(n, 0);
        in[0] = 1;
        std::vector<int> members{0}, frontier{0};
        while (!frontier.empty()) {
            std::vector<int> nf;
            for (int x : frontier)
                for (int g : sgens) {
                    int y = mul(x, g);
                    if (!in[y]) {
                        in[y] = 1;
                        members.push_back(y);
                        nf.push_back(y);
                    }
                }
            frontier = std::move(nf);
        }
        std::sort(members.begin(), members.end());
        return members;
    }

    // {class index per element, list of classes}
    std::pair<std::vector<int>, std::vector<std::vector<int>>>
    conjugacy_classes() const {
        std::vector<int> cls(n, -1);
        std::vector<std::vector<int>> classes;
        for (int x = 0; x < n; ++x) {
            if (cls[x] >= 0) continue;
            std::vector<int> orb{x};
            cls[x] = static_cast<int>(classes.size());
            for (size_t qi = 0; qi < orb.size(); ++qi)
                for (int g = 0; g < n; ++g) {
                    int y = conj(orb[qi], g);
                    if (cls[y] < 0) {
                        cls[y] = cls[x];
                        orb.push_back(y);
                    }
                }
            std::sort(orb.begin(), orb.end());
            classes.push_back(std::move(orb));
        }
        return {cls, classes};
    }

    std::vector<int> derived_subgroup() const {
        std::vector<char> seen(n, 0);
        std::vector<int> cgens;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                int c = mul(mul(inv(a), inv(b)), mul(a, b));
                if (c && !seen[c]) {
                    seen[c] = 1;
                    cgens.push_back(c);
                }
            }
        return subgroup(cgens);
    }

    // Word of element e over the construction generators, as generator
    // slots read left to right (rightmost acts first under composition).
    std::vector<int> word(int e) const {
        std::vector<int> w;
        while (e != 0) {
            auto [par, gi] = word_tree[e];
            w.push_back(gi);
            e = par;
        }
        std::reverse(w.begin(), w.end());
        return w;
    }

    std::string word_str(int e) const {
        if (e == 0) return "1";
        auto w = word(e);
        std::string out;
        size_t i = 0;
        while (i < w.size()) {
            size_t j = i;
            while (j < w.size() && w[j] == w[i]) ++j;
            if (!out.empty()) out += "*";
            out += "g" + std::to_string(w[i] + 1);
            if (j - i > 1) out += "^" + std::to_string(j - i);
            i = j;
        }
        return out;
    }
};

// Closure of permutation generators into a Cayley table, breadth-first
// from the identity with generators in input order.
inline FiniteGroup build_group(const std::vector<Perm>& generators,
                               int order_cap = 1024) {
    if (generators.empty()) throw InvalidPermutation("no generators");
    size_t deg = generators[0].size();
    for (const auto& g : generators) {
        if (g.size() != deg)
            throw InvalidPermutation("mixed permutation degrees");
        check_bijection(g);
    }
    std::vector<Perm> elems{perm_identity(static_cast<int>(deg))};
    std::map<Perm, int> idx;
    idx[elems[0]] = 0;
    std::vector<std::pair<int, int>> tree{{-1, -1}};
    for (size_t qi = 0; qi < elems.size(); ++qi) {
        for (size_t gi = 0; gi < generators.size(); ++gi) {
            Perm ne = perm_compose(elems[qi], generators[gi]);
            if (!idx.count(ne)) {
                if (static_cast<int>(elems.size()) >= order_cap)
                    throw OrderCapExceeded(
                        "group order exceeds cap " + std::to_string(order_cap));
                idx[ne] = static_cast<int>(elems.size());
                elems.push_back(std::move(ne));
                tree.emplace_back(static_cast<int>(qi), static_cast<int>(gi));
            }
        }
    }
    FiniteGroup G;
    G.n = static_cast<int>(elems.size());
    G.tab.resize(static_cast<size_t>(G.n) * G.n);
    for (int a = 0; a < G.n; ++a)
        for (int b = 0; b < G.n; ++b)
            G.tab[a * G.n + b] =
                static_cast<int16_t>(idx.at(perm_compose(elems[a], elems[b])));
    G.word_tree = std::move(tree);
    G.source_perms = generators;
    G.gens.resize(generators.size());
    for (size_t gi = 0; gi < generators.size(); ++gi)
        G.gens[gi] = idx.at(generators[gi]);
    G.inv_.assign(G.n, 0);
    G.ord_.assign(G.n, 0);
    for (int a = 0; a < G.n; ++a) {
        for (int b = 0; b < G.n; ++b)
            if (G.mul(a, b) == 0) {
                G.inv_[a] = static_cast<int16_t>(b);
                break;
            }
        int k = 1, x = a;
        while (x != 0) {
            x = G.mul(x, a);
            ++k;
        }
        G.ord_[a] = static_cast<int16_t>(k);
    }
    return G;
}

// Rebuilds a group from a raw table so that element indexing again follows
// a breadth-first walk over the given generator set.
inline FiniteGroup group_from_table(int n, const std::vector<int16_t>& tab,
                                    const std::vector<int>& seed_gens) {
    std::vector<int> bfs{0};
    std::vector<int> pos(n, -1);
    pos[0] = 0;
    std::vector<std::pair<int, int>> tree{{-1, -1}};
    for (size_t qi = 0; qi < bfs.size(); ++qi)
        for (size_t gi = 0; gi < seed_gens.size(); ++gi) {
            int y = tab[bfs[qi] * n + seed_gens[gi]];
            if (pos[y] < 0) {
                pos[y] = static_cast<int>(bfs.size());
                bfs.push_back(y);
                tree.emplace_back(static_cast<int>(qi),
                                  static_cast<int>(gi));
            }
        }
    if (static_cast<int>(bfs.size()) != n)
        throw InternalInconsistency("seed generators do not generate");
    FiniteGroup G;
    G.n = n;
    G.tab.resize(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            G.tab[a * n + b] =
                static_cast<int16_t>(pos[tab[bfs[a] * n + bfs[b]]]);
    G.word_tree = std::move(tree);
    for (int g : seed_gens) G.gens.push_back(pos[g]);
    G.inv_.assign(n, 0);
    G.ord_.assign(n, 0);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (G.mul(a, b) == 0) {
                G.inv_[a] = static_cast<int16_t>(b);
                break;
            }
        int k = 1, x = a;
        while (x != 0) {
            x = G.mul(x, a);
            ++k;
        }
        G.ord_[a] = static_cast<int16_t>(k);
    }
    return G;
}

// ------------------------------------------------------------- abelianization

// G/[G,G] with invariant factors d1 | d2 | ... (ascending) and the residue
// coordinates of every element of G under the projection.
struct Abelianization {
    std::vector<long long> factors;
    std::vector<std::vector<int>> coords;  // per element of G
    long long modulus = 1;                 // exponent of the abelianization
};

namespace detail {

// Basis of a finite abelian group given by table, orders descending.
// Backtracking over elements whose orders match the invariant factors.
inline bool abelian_basis_rec(const FiniteGroup& Q,
                              const std::vector<long long>& want,
                              size_t k, std::vector<int>& basis,
                              std::vector<int>& span) {
    if (k == want.size()) return true;
    std::vector<char> in(Q.n, 0);
    for (int s : span) in[s] = 1;
    for (int x = 0; x < Q.n; ++x) {
        if (Q.order(x) != want[k]) continue;
        // direct-sum check: <span, x> must have size |span| * want[k]
        std::vector<int> next = Q.subgroup([&] {
            std::vector<int> g(basis.begin(), basis.end());
            g.push_back(x);
            return g;
        }());
        if (next.size() != span.size() * static_cast<size_t>(want[k]))
            continue;
        basis.push_back(x);
        std::vector<int> old = span;
        span = next;
        if (abelian_basis_rec(Q, want, k + 1, basis, span)) return true;
        span = old;
        basis.pop_back();
    }
    return false;
}

inline std::vector<long long> invariant_factors_from_orders(
    const FiniteGroup& Q) {
    // For each prime p, the partition of the p-part is recovered from the
    // counts of solutions of x^{p^k} = 1.
    std::map<long long, std::vector<int>> parts;
    long long n = Q.n;
    std::vector<long long> primes;
    long long m = n, d = 2;
    while (d * d <= m) {
        if (m % d == 0) {
            primes.push_back(d);
            while (m % d == 0) m /= d;
        }
        ++d;
    }
    if (m > 1) primes.push_back(m);
    for (long long p : primes) {
        std::vector<int> conj;
        int prev = 0;
        long long pk = p;
        while (true) {
            long long cnt = 0;
            for (int x = 0; x < Q.n; ++x)
                if (pk % Q.order(x) == 0) ++cnt;
            int e = 0;
            while (cnt > 1) {
                cnt /= p;
                ++e;
            }
            if (e == prev) break;
            conj.push_back(e - prev);
            prev = e;
            pk *= p;
        }
        std::vector<int> lam;
        for (int i = 1;; ++i) {
            int c = 0;
            for (int v : conj)
                if (v >= i) ++c;
            if (!c) break;
            lam.push_back(c);
        }
        std::sort(lam.rbegin(), lam.rend());
        parts[p] = lam;
    }
    size_t maxlen = 0;
    for (auto& [p, lam] : parts) maxlen = std::max(maxlen, lam.size());
    std::vector<long long> factors;
    for (size_t i = 0; i < maxlen; ++i) {
        long long f = 1;
        for (auto& [p, lam] : parts)
            if (i < lam.size()) {
                long long pe = 1;
                for (int j = 0; j < lam[i]; ++j) pe *= p;
                f *= pe;
            }
        factors.push_back(f);
    }
    std::sort(factors.rbegin(), factors.rend());  // descending for search
    return factors;
}

}  // namespace detail

inline Abelianization abelianization(const FiniteGroup& G) {
    auto der = G.derived_subgroup();
    // quotient table on coset representatives
    std::vector<int> cosrep(G.n, -1);
    std::vector<int> reps;
    for (int x = 0; x < G.n; ++x) {
        if (cosrep[x] >= 0) continue;
        int id = static_cast<int>(reps.size());
        for (int h : der) cosrep[G.mul(x, h)] = id;
        reps.push_back(x);
    }
    int m = static_cast<int>(reps.size());
    FiniteGroup Q;
    Q.n = m;
    Q.tab.resize(static_cast<size_t>(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            Q.tab[i * m + j] =
                static_cast<int16_t>(cosrep[G.mul(reps[i], reps[j])]);
    Q.inv_.assign(m, 0);
    Q.ord_.assign(m, 0);
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b)
            if (Q.mul(a, b) == 0) {
                Q.inv_[a] = static_cast<int16_t>(b);
                break;
            }
        int k = 1, x = a;
        while (x != 0) {
            x = Q.mul(x, a);
            ++k;
        }
        Q.ord_[a] = static_cast<int16_t>(k);
    }

    auto want = detail::invariant_factors_from_orders(Q);  // descending
    std::vector<int> basis, span{0};
    if (!want.empty() &&
        !detail::abelian_basis_rec(Q, want, 0, basis, span))
        throw InternalInconsistency("abelian basis search failed");

    Abelianization ab;
    ab.factors.assign(want.rbegin(), want.rend());  // ascending d1 | d2 ...
    ab.modulus = want.empty() ? 1 : want.front();
    std::reverse(basis.begin(), basis.end());  // align with ascending factors

    // coordinates: enumerate all tuples, map to element of Q
    size_t k = ab.factors.size();
    std::vector<std::vector<int>> qcoords(m);
    std::vector<int> tup(k, 0);
    while (true) {
        int e = 0;
        for (size_t i = 0; i < k; ++i) {
            int x = basis[i];
            for (int j = 0; j < tup[i]; ++j) e = Q.mul(e, x);
        }
        qcoords[e] = tup;
        size_t i = 0;
        for (; i < k; ++i) {
            if (++tup[i] < ab.factors[i]) break;
            tup[i] = 0;
        }
        if (i == k) break;
        if (k == 0) break;
    }
    ab.coords.resize(G.n);
    for (int x = 0; x < G.n; ++x) ab.coords[x] = qcoords[cosrep[x]];
    return ab;
}

// ---------------------------------------------------------- linear characters

// chi(x) = zeta_M ^ exponent[x], stored exactly as residues mod M.
struct LinearCharacter {
    long long modulus = 1;
    std::vector<int> exponent;
    std::string label;

    int value_exp(int x) const { return exponent[x]; }
    bool is_trivial() const {
        for (int e : exponent)
            if (e) return false;
        return true;
    }
};

inline std::vector<LinearCharacter> linear_characters(const FiniteGroup& G) {
    Abelianization ab = abelianization(G);
    long long M = ab.modulus;
    size_t k = ab.factors.size();
    std::vector<LinearCharacter> out;
    std::vector<int> a(k, 0);
    while (true) {
        LinearCharacter chi;
        chi.modulus = M;
        chi.exponent.resize(G.n);
        for (int x = 0; x < G.n; ++x) {
            long long e = 0;
            for (size_t i = 0; i < k; ++i)
                e += a[i] * (M / ab.factors[i]) % M * ab.coords[x][i];
            chi.exponent[x] = static_cast<int>(((e % M) + M) % M);
        }
        std::string lab = "chi(";
        for (size_t i = 0; i < k; ++i)
            lab += (i ? "," : "") + std::to_string(a[i]);
        chi.label = lab + ")";
        out.push_back(std::move(chi));
        if (k == 0) break;
        size_t i = 0;
        for (; i < k; ++i) {
            if (++a[i] < ab.factors[i]) break;
            a[i] = 0;
        }
        if (i == k) break;
    }
    return out;
}

// ------------------------------------------------------------- automorphisms

// Backtracking over images of an irredundant generating chain; returns the
// full automorphism group as element-index permutations.
inline std::vector<std::vector<int16_t>> automorphisms(const FiniteGroup& G,
                                                       int search_cap = 256) {
    if (G.n > search_cap)
        throw AutSearchCapExceeded("automorphism search cap exceeded");
    int n = G.n;
    // irredundant generating chain
    std::vector<int> mgens;
    {
        std::vector<char> in(n, 0);
        in[0] = 1;
        int covered = 1;
        while (covered < n) {
            int nxt = -1;
            for (int x = 0; x < n; ++x)
                if (!in[x]) {
                    nxt = x;
                    break;
                }
            mgens.push_back(nxt);
            auto cl = G.subgroup(mgens);
            std::fill(in.begin(), in.end(), 0);
            for (int x : cl) in[x] = 1;
            covered = static_cast<int>(cl.size());
        }
    }
    // closure chains with word trees
    struct Chain {
        std::vector<int> members;
        std::vector<std::pair<int, int>> tree;  // per member: parent elt, gen slot
    };
    std::vector<Chain> chains;
    for (size_t d = 1; d <= mgens.size(); ++d) {
        Chain ch;
        std::vector<int> tmap(n, -1);
        ch.members.push_back(0);
        ch.tree.emplace_back(-1, -1);
        tmap[0] = 0;
        for (size_t qi = 0; qi < ch.members.size(); ++qi)
            for (size_t gi = 0; gi < d; ++gi) {
                int y = G.mul(ch.members[qi], mgens[gi]);
                if (tmap[y] < 0) {
                    tmap[y] = static_cast<int>(ch.members.size());
                    ch.members.push_back(y);
                    ch.tree.emplace_back(ch.members[qi],
                                         static_cast<int>(gi));
                }
            }
        chains.push_back(std::move(ch));
    }
    // element invariants for image filtering
    auto [cls, classes] = G.conjugacy_classes();
    struct EI {
        int o, cs, o2, cs2;
        bool operator==(const EI& b) const {
            return o == b.o && cs == b.cs && o2 == b.o2 && cs2 == b.cs2;
        }
    };
    std::vector<EI> ei(n);
    for (int x = 0; x < n; ++x) {
        int x2 = G.mul(x, x);
        ei[x] = {G.order(x), static_cast<int>(classes[cls[x]].size()),
                 G.order(x2), static_cast<int>(classes[cls[x2]].size())};
    }

    std::vector<std::vector<int16_t>> result;
    std::vector<int> f(n, -1);
    std::vector<char> prevset(n, 0);

    auto extend = [&](size_t d) -> bool {
        const Chain& ch = chains[d];
        std::fill(prevset.begin(), prevset.end(), 0);
        if (d > 0)
            for (int x : chains[d - 1].members) prevset[x] = 1;
        else
            prevset[0] = 1;
        for (size_t i = 0; i < ch.members.size(); ++i) {
            int x = ch.members[i];
            auto [par, gi] = ch.tree[i];
            if (par < 0)
                f[x] = 0;
            else
                f[x] = G.mul(f[par], f[mgens[gi]]);
        }
        std::vector<char> seen(n, 0);
        for (int x : ch.members) {
            if (seen[f[x]]) return false;
            seen[f[x]] = 1;
        }
        for (int x : ch.members) {
            if (prevset[x]) continue;
            for (int y : ch.members) {
                if (f[G.mul(x, y)] != G.mul(f[x], f[y])) return false;
                if (f[G.mul(y, x)] != G.mul(f[y], f[x])) return false;
            }
        }
        return true;
    };

    std::function<void(size_t)> rec = [&](size_t d) {
        if (d == mgens.size()) {
            result.emplace_back(f.begin(), f.end());
            return;
        }
        int g = mgens[d];
        for (int b = 0; b < n; ++b) {
            if (!(ei[b] == ei[g])) continue;
            f[g] = b;
            if (extend(d)) rec(d + 1);
        }
        f[g] = -1;
    };
    rec(0);
    return result;
}

}  // namespace prym
