#include "quintic/eisenstein.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "quintic/quintic_theta.hpp"

namespace quintic {

namespace {

long order_terms(const Rational& order) {
    Int q;
    Rational t = order;
    mpz_cdiv_q(q.get_mpz_t(), t.get_num().get_mpz_t(), t.get_den().get_mpz_t());
    return q.get_si();
}

// Bernoulli polynomial B_k(x), k <= 3 (all that weight <= 3 needs).
Rational bernoulli_poly(int k, const Rational& x) {
    switch (k) {
        case 0: return Rational(1);
        case 1: return x - Rational(1, 2);
        case 2: return x * x - x + Rational(1, 6);
        case 3: return x * x * x - Rational(3, 2) * x * x + x / 2;
    }
    throw std::invalid_argument("bernoulli_poly: weight out of range");
}

struct CacheKey {
    int what, k, chi;
    Rational order;
    bool operator<(const CacheKey& o) const {
        return std::tie(what, k, chi, order) < std::tie(o.what, o.k, o.chi, o.order);
    }
};
std::mutex cache_mu;
std::map<CacheKey, QSeries> cache;

template <typename F>
QSeries memoized(CacheKey key, F&& build) {
    {
        std::lock_guard<std::mutex> lk(cache_mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    QSeries s = build();
    std::lock_guard<std::mutex> lk(cache_mu);
    return cache.emplace(std::move(key), std::move(s)).first->second;
}

// Divisor-style sieve: acc[r][N] = sum over pairs n*s = N with the residue
// selector applied; returns per-residue integer tables combined with chi.
std::vector<FieldElement> sieve_chi_on_divisor(int k, int chi, long N) {
    // coefficient of q^N in sum chi(n) n^(k-1) q^n/(1-q^n) is
    // sum_{d | N} chi(d) d^(k-1); bucket the d's by residue class.
    std::vector<std::array<Int, 5>> acc(static_cast<size_t>(N));
    for (long d = 1; d < N; ++d) {
        Int p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d),
                      static_cast<unsigned long>(k - 1));
        int r = static_cast<int>(d % 5);
        for (long m = d; m < N; m += d) acc[static_cast<size_t>(m)][r] += p;
    }
    std::vector<FieldElement> c(static_cast<size_t>(N));
    for (long n = 1; n < N; ++n)
        for (int r = 0; r < 5; ++r) {
            const Int& a = acc[static_cast<size_t>(n)][r];
            if (a != 0) c[static_cast<size_t>(n)] += chi5(chi, r) * FieldElement(Rational(a));
        }
    return c;
}

}  // namespace

FieldElement chi5(int label, long n) {
    long r = n % 5;
    if (r < 0) r += 5;
    if (r == 0) return FieldElement(0);
    static const int tab2[5] = {0, 0, 5, 15, 10};  // chi2 as zeta20 exponent: 1,i,-i,-1
    switch (label) {
        case 1: return FieldElement(1);
        case 2: return zeta_pow(tab2[r]);
        case 3: return FieldElement((r == 1 || r == 4) ? 1 : -1);
        case 4: return zeta_pow((20 - tab2[r]) % 20);
    }
    throw std::invalid_argument("chi5: label must be 1..4");
}

bool chi5_even(int label) { return label == 1 || label == 3; }

FieldElement gen_bernoulli(int k, int chi_label) {
    // B_{k,chi} = f^(k-1) sum_{a=1}^{f} chi(a) B_k(a/f), f = 5
    FieldElement s;
    for (long a = 1; a <= 5; ++a)
        s += chi5(chi_label, a) * FieldElement(bernoulli_poly(k, Rational(a, 5)));
    return FieldElement(rat_pow(Rational(5), k - 1)) * s;
}

FieldElement L_at_one_minus_k(int k, int chi_label) {
    return gen_bernoulli(k, chi_label) * FieldElement(Rational(-1, k));
}

QSeries eisenstein_level1(int k, const Rational& order) {
    long c;
    switch (k) {
        case 2: c = -24; break;
        case 4: c = 240; break;
        case 6: c = -504; break;
        default: throw std::invalid_argument("eisenstein_level1: k must be 2, 4 or 6");
    }
    return memoized({0, k, 0, order}, [&] {
        long N = order_terms(order);
        std::vector<FieldElement> coeffs(static_cast<size_t>(std::max(N, 1L)));
        std::vector<Int> sig(static_cast<size_t>(std::max(N, 1L)));
        for (long d = 1; d < N; ++d) {
            Int p;
            mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d),
                          static_cast<unsigned long>(k - 1));
            for (long m = d; m < N; m += d) sig[static_cast<size_t>(m)] += p;
        }
        coeffs[0] = FieldElement(1);
        for (long n = 1; n < N; ++n)
            coeffs[static_cast<size_t>(n)] = FieldElement(Rational(c * sig[static_cast<size_t>(n)]));
        return QSeries::make(1, 0, std::move(coeffs));
    });
}

QSeries eisenstein_level5(int k, int chi_label, const Rational& order) {
    if (chi5_even(chi_label) != (k % 2 == 0))
        throw std::domain_error("eisenstein_level5: parity condition chi(-1) = (-1)^k violated");
    return memoized({1, k, chi_label, order}, [&] {
        long N = std::max(order_terms(order), 1L);
        FieldElement norm = FieldElement(2) / L_at_one_minus_k(k, chi_label);
        std::vector<FieldElement> c = sieve_chi_on_divisor(k, chi_label, N);
        for (auto& x : c) x *= norm;
        c[0] = FieldElement(1);
        return QSeries::make(1, 0, std::move(c));
    });
}

QSeries lambert_L(int k, int chi_label, const Rational& order) {
    if (k < 2) throw std::invalid_argument("lambert_L: k >= 2 required");
    if (chi5_even(chi_label) != (k % 2 == 0))
        throw std::domain_error("lambert_L: parity condition chi(-1) = (-1)^k violated");
    return memoized({2, k, chi_label, order}, [&] {
        long N = std::max(order_terms(order), 1L);
        // coefficient of q^M: sum over M = n*s with s not = 0 mod 5 of
        // n^(k-1) chi(s); bucket by the residue of s.
        std::vector<std::array<Int, 5>> acc(static_cast<size_t>(N));
        for (long n = 1; n < N; ++n) {
            Int p;
            mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(n),
                          static_cast<unsigned long>(k - 1));
            for (long s = 1; n * s < N; ++s) {
                int r = static_cast<int>(s % 5);
                if (r == 0) continue;
                acc[static_cast<size_t>(n * s)][r] += p;
            }
        }
        std::vector<FieldElement> c(static_cast<size_t>(N));
        for (long m = 1; m < N; ++m)
            for (int r = 1; r < 5; ++r) {
                const Int& a = acc[static_cast<size_t>(m)][r];
                if (a != 0) c[static_cast<size_t>(m)] += chi5(chi_label, r) * FieldElement(Rational(a));
            }
        return QSeries::make(1, 0, std::move(c));
    });
}

QSeries theta_A5(const Rational& order) {
    return memoized({3, 0, 0, order},
                    [&] { return theta_A(order).pow_int(5).coarsened().truncated(order); });
}

QSeries theta_B5(const Rational& order) {
    return memoized({4, 0, 0, order},
                    [&] { return theta_B(order).pow_int(5).coarsened().truncated(order); });
}

QSeries t_series(int index, const Rational& order) {
    return memoized({5, index, 0, order}, [&]() -> QSeries {
        QSeries a = theta_A5(order), b = theta_B5(order);
        auto R = [](long n, long d = 1) { return FieldElement(Rational(n, d)); };
        switch (index) {
            case 1: return a * R(2) + b;
            case 2: return a;
            case 3: {
                QSeries e2q5 = eisenstein_level1(2, order / 5 + 1).subst_power(5).truncated(order);
                return e2q5 * R(25, 24) - b * b * R(1, 24) + a * b * R(11, 4) + a * a * R(11, 24);
            }
            case 4: {
                QSeries e2q5 = eisenstein_level1(2, order / 5 + 1).subst_power(5).truncated(order);
                return e2q5 * R(-5, 24) + b * b * R(5, 24) - a * b * R(11, 4) - a * a * R(7, 24);
            }
            case 5:
                return b * b * b + b * b * a * R(-33, 2) + b * a * a * R(119, 2) +
                       a * a * a * R(11, 2);
            case 6:
                return b * b * a * R(5, 2) + b * a * a * R(-55, 2) + a * a * a * R(-5, 2);
        }
        throw std::invalid_argument("t_series: index must be 1..6");
    });
}

}  // namespace quintic
