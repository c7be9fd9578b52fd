#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "prym/errors.hpp"

namespace prym {

namespace cyclo_detail {

inline long long euler_phi(long long n) {
    long long r = n, m = n;
    for (long long p = 2; p * p <= m; ++p)
        if (m % p == 0) {
            r -= r / p;
            while (m % p == 0) m /= p;
        }
    if (m > 1) r -= r / m;
    return r;
}

inline int moebius(long long n) {
    int r = 1;
    for (long long p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            r = -r;
        }
    if (n > 1) r = -r;
    return r;
}

// Ramanujan sum c_N(k) = sum over j coprime to N of zeta_N^{jk}.
inline long long ramanujan(long long N, long long k) {
    long long g = std::gcd(N, k);
    long long q = N / g;
    int mu = moebius(q);
    if (mu == 0) return 0;
    return mu * (euler_phi(N) / euler_phi(q));
}

// Cyclotomic polynomials, integer coefficients, memoized.
inline const std::vector<long long>& cyclotomic_poly(int n) {
    static std::map<int, std::vector<long long>> memo;
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    // x^n - 1 divided by all Phi_d, d | n, d < n
    std::vector<long long> num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d) continue;
        const auto& phi_d = cyclotomic_poly(d);
        // exact division num /= phi_d
        std::vector<long long> q(num.size() - phi_d.size() + 1, 0);
        std::vector<long long> r = num;
        for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
            long long c = r[i + phi_d.size() - 1] / phi_d.back();
            q[i] = c;
            for (size_t j = 0; j < phi_d.size(); ++j)
                r[i + j] -= c * phi_d[j];
        }
        for (long long c : r)
            if (c) throw InternalInconsistency("cyclotomic division inexact");
        num = std::move(q);
    }
    return memo.emplace(n, std::move(num)).first->second;
}

}  // namespace cyclo_detail

// Exact element of Q(zeta_N), carried as an integer vector in
// Z[x]/(x^N - 1) with a positive denominator.
class CycloQ {
public:
    int N = 1;
    std::vector<long long> c;  // length N
    long long den = 1;

    CycloQ() : c(1, 0) {}
    explicit CycloQ(int N_) : N(N_), c(N_, 0) {}

    static CycloQ integer(int N, long long v) {
        CycloQ r(N);
        r.c[0] = v;
        return r;
    }

    // zeta_N^k
    static CycloQ root(int N, long long k) {
        CycloQ r(N);
        k %= N;
        if (k < 0) k += N;
        r.c[static_cast<size_t>(k)] = 1;
        return r;
    }

    // zeta^j / (1 - zeta^j) for zeta = zeta_N, requires j != 0 mod N.
    // With m the order of zeta^j: 1/(1-w) = prod_{i=2}^{m-1} (1-w^i) / m.
    static CycloQ rotation_term(int N, long long j) {
        j %= N;
        if (j < 0) j += N;
        if (j == 0) throw InternalInconsistency("rotation_term at 1");
        long long m = N / std::gcd<long long>(N, j);
        CycloQ r = root(N, j);
        for (long long i = 2; i < m; ++i) {
            CycloQ f = integer(N, 1);
            f = f.sub(root(N, j * i));
            r = r.mul(f);
        }
        r.den *= m;
        r.normalize();
        return r;
    }

    CycloQ add(const CycloQ& o) const {
        CycloQ r(N);
        long long l = std::lcm(den, o.den);
        long long a = l / den, b = l / o.den;
        for (int i = 0; i < N; ++i) r.c[i] = c[i] * a + o.c[i] * b;
        r.den = l;
        r.normalize();
        return r;
    }

    CycloQ sub(const CycloQ& o) const {
        CycloQ t = o;
        for (auto& v : t.c) v = -v;
        return add(t);
    }

    CycloQ mul(const CycloQ& o) const {
        CycloQ r(N);
        std::vector<__int128> acc(N, 0);
        for (int i = 0; i < N; ++i) {
            if (!c[i]) continue;
            for (int j = 0; j < N; ++j) {
                if (!o.c[j]) continue;
                int k = i + j;
                if (k >= N) k -= N;
                acc[k] += static_cast<__int128>(c[i]) * o.c[j];
            }
        }
        for (int i = 0; i < N; ++i) {
            if (acc[i] > INT64_MAX / 2 || acc[i] < INT64_MIN / 2)
                throw InternalInconsistency("cyclotomic overflow");
            r.c[i] = static_cast<long long>(acc[i]);
        }
        r.den = den * o.den;
        r.normalize();
        return r;
    }

    CycloQ scaled(long long num, long long d) const {
        CycloQ r = *this;
        for (auto& v : r.c) v *= num;
        r.den *= d;
        r.normalize();
        return r;
    }

    CycloQ conjugate() const {
        CycloQ r(N);
        for (int i = 0; i < N; ++i) r.c[(N - i) % N] = c[i];
        r.den = den;
        return r;
    }

    // multiply by zeta_N^k
    CycloQ rotated(long long k) const {
        k %= N;
        if (k < 0) k += N;
        CycloQ r(N);
        for (int i = 0; i < N; ++i) r.c[(i + k) % N] = c[i];
        r.den = den;
        return r;
    }

    void normalize() {
        long long g = std::llabs(den);
        for (long long v : c) g = std::gcd(g, std::llabs(v));
        if (g > 1) {
            for (auto& v : c) v /= g;
            den /= g;
        }
        if (den < 0) {
            den = -den;
            for (auto& v : c) v = -v;
        }
    }

    bool is_value_zero() const {
        // zero in Q(zeta_N) <=> Phi_N divides the carrier polynomial
        std::vector<long long> r = c;
        const auto& phi = cyclo_detail::cyclotomic_poly(N);
        for (int i = static_cast<int>(r.size()) - 1;
             i >= static_cast<int>(phi.size()) - 1; --i) {
            long long q = r[i] / phi.back();
            if (r[i] % phi.back())
                return false;  // leading not divisible: nonzero remainder
            for (size_t j = 0; j < phi.size(); ++j)
                r[i - phi.size() + 1 + j] -= q * phi[j];
        }
        for (long long v : r)
            if (v) return false;
        return true;
    }

    double eval_real() const {
        double s = 0;
        for (int i = 0; i < N; ++i)
            if (c[i]) s += c[i] * std::cos(2.0 * M_PI * i / N);
        return s / den;
    }

    // Extracts the rational value (known a priori to be rational) via
    // Ramanujan sums; throws NonIntegralReduction if the value is not a
    // rational integer after applying `extra_den`.
    long long extract_integer(long long extra_den = 1,
                              const char* what = "value") const {
        long long phiN = cyclo_detail::euler_phi(N);
        __int128 s = 0;
        for (int i = 0; i < N; ++i)
            if (c[i])
                s += static_cast<__int128>(c[i]) *
                     cyclo_detail::ramanujan(N, i);
        __int128 d = static_cast<__int128>(phiN) * den * extra_den;
        if (s % d != 0)
            throw NonIntegralReduction(std::string(what) +
                                       ": not an integer");
        long long r = static_cast<long long>(s / d);
        // the Ramanujan average equals the value only if it is rational;
        // verify the residual vanishes in Q(zeta_N)
        CycloQ resid = sub(integer(N, r).scaled(extra_den, 1));
        if (!resid.is_value_zero())
            throw NonIntegralReduction(std::string(what) +
                                       ": not rational");
        double fl = eval_real() / extra_den;
        if (std::fabs(fl - r) > 1e-6)
            throw InternalInconsistency(
                "floating-point cross-check failed");
        return r;
    }
};

}  // namespace prym
