#ifndef QUINTIC_EISENSTEIN_HPP
#define QUINTIC_EISENSTEIN_HPP

#include "quintic/qseries.hpp"

namespace quintic {

/// Dirichlet characters mod 5, labeled 1..4:
///   chi1 = <0,1,1,1,1>   (principal)
///   chi2 = <0,1,i,-i,-1>
///   chi3 = <0,1,-1,-1,1> (Legendre symbol)
///   chi4 = <0,1,-i,i,-1> (conjugate of chi2)
FieldElement chi5(int label, long n);
/// chi(-1) = +1?
bool chi5_even(int label);

/// Generalized Bernoulli number B_{k,chi} for modulus 5.
FieldElement gen_bernoulli(int k, int chi_label);
/// L(1-k, chi) = -B_{k,chi}/k.
FieldElement L_at_one_minus_k(int k, int chi_label);

/// Level 1: E2, E4, E6 (k in {2,4,6}).
QSeries eisenstein_level1(int k, const Rational& order);

/// E_{k,chi}(q) = 1 + (2/L(1-k,chi)) sum chi(n) n^(k-1) q^n/(1-q^n).
/// Requires the parity condition chi(-1) = (-1)^k.
QSeries eisenstein_level5(int k, int chi_label, const Rational& order);

/// L_{k,chi}(q) = sum_n n^(k-1)/(1-q^(5n)) sum_{m=1}^{4} chi(m) q^(mn),
/// k >= 2, parity condition as above.
QSeries lambert_L(int k, int chi_label, const Rational& order);

/// The auxiliary series t_1..t_6, built from the quintic theta
/// parameterizations (2A^5+B^5, A^5, ..., in A^5, B^5 and E2(q^5)).
QSeries t_series(int index, const Rational& order);

/// Convenience: memoized A^5 and B^5 on the integer grid.
QSeries theta_A5(const Rational& order);
QSeries theta_B5(const Rational& order);

}  // namespace quintic

#endif
