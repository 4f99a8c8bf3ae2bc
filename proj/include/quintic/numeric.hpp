#ifndef QUINTIC_NUMERIC_HPP
#define QUINTIC_NUMERIC_HPP

#include <complex>

#include "quintic/qseries.hpp"
#include "quintic/report.hpp"

namespace quintic {

/// Sample point tau in the upper half plane, with q = e^(2 pi i tau).
struct ComplexPoint {
    std::complex<double> tau;

    /// Throws std::domain_error unless Im(tau) > 0.
    explicit ComplexPoint(std::complex<double> t);

    std::complex<double> q() const;
    double abs_q() const;  // e^(-2 pi Im tau)
};

/// Horner evaluation of a truncated series at q(tau); FieldElement
/// coefficients embed via zeta_20 -> e^(pi i/10), and the grid variable is
/// q^(1/D) = e^(2 pi i tau / D).  Requires the truncation tail to satisfy
/// |q|^(known order) < 2^(-precision_bits); otherwise throws
/// std::runtime_error naming an order that would suffice.
std::complex<double> eval_series(const QSeries& f, const ComplexPoint& pt, long precision_bits);

/// Fifth root with argument in [0, 2 pi / 5).
std::complex<double> fifth_root(std::complex<double> z);

/// Residuals of the two W_5 = (tau -> -1/(5 tau)) transformation laws
///   A(-1/(5 tau)) = sqrt((5 - sqrt5)/2) e^(-pi i/10) tau^(1/5) 5^(-3/10) C(tau)
///   B(-1/(5 tau)) = sqrt((5 + sqrt5)/2) e^(-pi i/10) tau^(1/5) 5^(-3/10) D(tau)
/// together with the multiplier constants extracted from the evaluation:
/// gamma1 = A(-1/(5 tau)) / (tau^(1/5) C(tau)) and likewise gamma2 for B, D.
struct FrickeResidual {
    double res_A = 0.0;
    double res_B = 0.0;
    std::complex<double> gamma1;
    std::complex<double> gamma2;
};

/// Evaluates both transformation laws with series truncated at the given
/// order.  Both tau and -1/(5 tau) must give convergent evaluations.
FrickeResidual fricke_check(const ComplexPoint& tau, const Rational& order);

/// |1 + 25 g^10 + 5 g^20| -- the shared minimal polynomial of the two
/// Fricke multiplier constants.
double gamma_minpoly_residual(const std::complex<double>& g);

/// The Fricke image of the continued fraction R = A/B:
///   R(-1/(5 tau)) = -beta C(q)/D(q),
///   C/D = prod_{n>=1} (1 + beta q^n + q^(2n)) / (1 + alpha q^n + q^(2n)),
///   C = B(q^5) - alpha A(q^5),  D = B(q^5) - beta A(q^5),
/// with alpha = (1+sqrt5)/2, beta = (1-sqrt5)/2.  The product and quotient
/// identities are verified exactly as q-series to the given order; the
/// tau-level statement is verified numerically at tau = i and tau = 2i.
IdentityReport fuls_check(const Rational& order);

/// |R(-1/(5 tau)) - s beta (C/D)(q(tau))| where s = beta_sign; the
/// transformation law holds for s = -1 only.
double fuls_numeric_residual(const ComplexPoint& tau, const Rational& order, int beta_sign = -1);

}  // namespace quintic

#endif
