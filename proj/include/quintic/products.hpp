#ifndef QUINTIC_PRODUCTS_HPP
#define QUINTIC_PRODUCTS_HPP

#include <tuple>

#include "quintic/qseries.hpp"

namespace quintic {

/// (z*q^a; w*q^b)_inf = Prod_k (1 - z w^k q^(a+kb)).
struct PochhammerSpec {
    FieldElement z;
    Rational a;
    Rational b;
    FieldElement w = FieldElement(1);
};

/// e^(pi*i*r) as an exact 20th root of unity; r must have denominator
/// dividing 10.  Throws std::domain_error otherwise.
FieldElement exp_pi_i(const Rational& r);

/// Truncated Prod_{k>=0} (1 - z q^(a+kb)) with all exponents < order known.
QSeries pochhammer_inf(const PochhammerSpec& spec, const Rational& order);
/// Convenience (q^a; q^b)_inf.
QSeries pochhammer_inf(long a, long b, const Rational& order);

/// (q^scale; q^scale)_inf ^ (num_exp/den_exp).
QSeries eta_power(long num_exp, long den_exp, long scale, const Rational& order);

/// Ramanujan's f(a, b) = sum_{n in Z} a^(n(n+1)/2) b^(n(n-1)/2) with
/// monomial arguments a = a_coeff*q^a_exp, b = b_coeff*q^b_exp.
QSeries ramanujan_f(const FieldElement& a_coeff, const Rational& a_exp,
                    const FieldElement& b_coeff, const Rational& b_exp, const Rational& order);

/// Theta constant with characteristic:
/// theta[eps; eps'](scale*tau) = e^(pi i eps eps'/2)
///     * sum_n e^(pi i n eps') q^(scale (n + eps/2)^2 / 2).
QSeries theta_char(const Rational& eps, const Rational& eps_prime, long scale,
                   const Rational& order);

/// (theta2, theta3, theta4); theta2 on grid 4, the others on the integer grid.
std::tuple<QSeries, QSeries, QSeries> jacobi_null_thetas(const Rational& order);

}  // namespace quintic

#endif
