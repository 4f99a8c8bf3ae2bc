#include "quintic/products.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace quintic {

namespace {

long ceil_num(const Rational& x) {  // smallest integer >= x
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return q.get_si();
}

long floor_num(const Rational& x) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return q.get_si();
}

// Bucket a finite term list into a QSeries known on [min(v,0), order).
QSeries from_terms(const std::vector<std::pair<Rational, FieldElement>>& terms,
                   const Rational& order) {
    long D = order.get_den().get_si();
    for (const auto& [e, c] : terms) D = std::lcm(D, e.get_den().get_si());
    long kb = ceil_num(order * D);
    long v = 0;
    for (const auto& [e, c] : terms) v = std::min(v, floor_num(e * D));
    if (kb <= v) return QSeries::zero(static_cast<int>(D), kb);
    std::vector<FieldElement> coeffs(static_cast<size_t>(kb - v));
    for (const auto& [e, c] : terms) {
        Rational n = e * D;
        long idx = n.get_num().get_si() - v;
        if (idx >= 0 && idx < kb - v) coeffs[static_cast<size_t>(idx)] += c;
    }
    return QSeries::make(static_cast<int>(D), v, std::move(coeffs));
}

}  // namespace

FieldElement exp_pi_i(const Rational& r) {
    Rational t = r * 10;
    if (t.get_den() != 1)
        throw std::domain_error("exp_pi_i: " + rat_str(r) +
                                " is not representable as a 20th root of unity");
    Int m = t.get_num() % 20;
    return zeta_pow(m.get_si());
}

QSeries pochhammer_inf(const PochhammerSpec& spec, const Rational& order) {
    if (spec.b <= 0 || spec.a < 0 || (spec.a == 0 && spec.z == FieldElement(1)))
        throw std::domain_error("pochhammer_inf: formally divergent specification");
    long D = std::lcm(std::lcm(spec.a.get_den().get_si(), spec.b.get_den().get_si()),
                      order.get_den().get_si());
    long kb = ceil_num(order * D);
    long na = Rational(spec.a * D).get_num().get_si();
    long nb = Rational(spec.b * D).get_num().get_si();
    std::vector<FieldElement> c(static_cast<size_t>(std::max(kb, 1L)));
    c[0] = FieldElement(1);
    // Multiply the factors (1 - z w^k q^(e/D)) in place, highest index first
    // so each factor is applied exactly once per coefficient.
    FieldElement zk = spec.z;
    for (long e = na; e < kb; e += nb, zk *= spec.w) {
        if (e == 0) {  // constant factor (1 - z)
            FieldElement f = FieldElement(1) - zk;
            for (auto& x : c) x *= f;
            continue;
        }
        for (long j = kb - 1; j >= e; --j) {
            if (c[static_cast<size_t>(j - e)].is_zero()) continue;
            c[static_cast<size_t>(j)] -= zk * c[static_cast<size_t>(j - e)];
        }
    }
    return QSeries::make(static_cast<int>(D), 0, std::move(c));
}

QSeries pochhammer_inf(long a, long b, const Rational& order) {
    return pochhammer_inf({FieldElement(1), Rational(a), Rational(b)}, order);
}

QSeries eta_power(long num_exp, long den_exp, long scale, const Rational& order) {
    if (den_exp <= 0) throw std::invalid_argument("eta_power: denominator must be positive");
    QSeries base = pochhammer_inf(scale, scale, order);
    return base.pow_rational(Rational(num_exp, den_exp));
}

QSeries ramanujan_f(const FieldElement& a_coeff, const Rational& a_exp,
                    const FieldElement& b_coeff, const Rational& b_exp, const Rational& order) {
    if (a_exp + b_exp <= 0)
        throw std::domain_error("ramanujan_f: requires a_exp + b_exp > 0 for convergence");
    std::vector<std::pair<Rational, FieldElement>> terms;
    auto exponent = [&](long n) -> Rational {
        return a_exp * (n * (n + 1) / 2) + b_exp * (n * (n - 1) / 2);
    };
    auto emit = [&](long n) {
        Rational e = exponent(n);
        if (e >= order) return false;
        terms.emplace_back(e, a_coeff.pow(n * (n + 1) / 2) * b_coeff.pow(n * (n - 1) / 2));
        return true;
    };
    // The exponent is a positive-definite quadratic in n; walk both tails
    // until clear of the truncation order.
    for (long n = 0; n < 1000000; ++n)
        if (!emit(n) && exponent(n) >= exponent(n - 1) && n > 1) break;
    for (long n = -1; n > -1000000; --n)
        if (!emit(n) && exponent(n) >= exponent(n + 1) && n < -1) break;
    return from_terms(terms, order);
}

QSeries theta_char(const Rational& eps, const Rational& eps_prime, long scale,
                   const Rational& order) {
    FieldElement phase0 = exp_pi_i(eps * eps_prime / 2);
    std::vector<std::pair<Rational, FieldElement>> terms;
    auto exponent = [&](long n) -> Rational {
        Rational h = n + eps / 2;
        return Rational(scale) * h * h / 2;
    };
    auto emit = [&](long n) {
        Rational e = exponent(n);
        if (e >= order) return false;
        terms.emplace_back(e, phase0 * exp_pi_i(eps_prime * n));
        return true;
    };
    for (long n = 0; n < 1000000; ++n)
        if (!emit(n) && exponent(n) >= exponent(n - 1) && n > 1) break;
    for (long n = -1; n > -1000000; --n)
        if (!emit(n) && exponent(n) >= exponent(n + 1) && n < -1) break;
    return from_terms(terms, order);
}

std::tuple<QSeries, QSeries, QSeries> jacobi_null_thetas(const Rational& order) {
    QSeries t2 = theta_char(1, 0, 2, order);
    QSeries t3 = theta_char(0, 0, 2, order).coarsened();
    QSeries t4 = theta_char(0, 1, 2, order).coarsened();
    return {t2, t3, t4};
}

}  // namespace quintic
