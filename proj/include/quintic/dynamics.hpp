#ifndef QUINTIC_DYNAMICS_HPP
#define QUINTIC_DYNAMICS_HPP

#include <vector>

#include "quintic/qseries.hpp"
#include "quintic/report.hpp"

namespace quintic {

/// Coupled first-order system for A, B and P = E2(q^5):
///   60 q d/dq A = A(-5A^10 - 66A^5B^5 + 7B^10 + 5P)
///   60 q d/dq B = B( 7A^10 + 66A^5B^5 - 5B^10 + 5P)
///   12 q d/dq P = 5(P^2 - B^20 + 12B^15A^5 - 14B^10A^10 - 12B^5A^15 - A^20)
/// including the bracket's identification with P^2 - E4(q^5).
IdentityReport verify_quintic_ode(const Rational& order);

/// The six-function system for t_1..t_6 (with the e-combination sign
/// convention t_2 = -A^5; see the sign note in the eisenstein module),
/// plus the algebraic restatement of the t_2 equation as the A-equation.
IdentityReport verify_t_system(const Rational& order);

/// E2 = A^10 + 66A^5B^5 - 11B^10 + 60 q d/dq log A
///    = B^10 - 66A^5B^5 - 11A^10 + 60 q d/dq log B,
/// and the companion 5E2(q^5) - E2 = 4A^10 + 4B^10.
IdentityReport verify_E2_forms(const Rational& order);

/// Polynomial solution f_n(t) = 1 + sum a_k t^k of the hypergeometric-type
/// coefficient recurrence; exact rationals, a_0 = 1, degree <= n for n <= 8.
struct KanekoSolution {
    long n = 0;
    std::vector<Rational> a;  // a[0] = 1
};

/// Single polynomial; throws std::invalid_argument when n = 4 (mod 5),
/// where the recurrence denominator vanishes.
KanekoSolution kaneko_polynomial(long n);

/// All solutions for n = 0..n_max (n_max <= 8) with the excluded residue
/// class skipped.
std::vector<KanekoSolution> kaneko_polynomials(long n_max);

/// Residual of f'' - ((n+1)/5) E2 f' + ((n+1)(6n+1)/50) E2' f = 0 with
/// ' = q d/dq (the convention fixed empirically on the n = 0 case, where
/// A and B are the two independent solutions); n in 0..3.
IdentityReport verify_kaneko_ode(long n, const Rational& order);

/// Five/ten-step polynomial recursion for n in {10, 11, 12, 13} against
/// the coefficient recurrence, plus the Schwarzian-derivative target
/// A^20 + 12A^15B^5 + 134A^10B^10 - 12A^5B^15 + B^20 for the hauptmodul
/// A^5/B^5 (proportionality constant -1 in q d/dq normalization).
IdentityReport verify_kaneko_recursion(const Rational& order);

}  // namespace quintic

#endif
