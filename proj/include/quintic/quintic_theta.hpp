#ifndef QUINTIC_QUINTIC_THETA_HPP
#define QUINTIC_QUINTIC_THETA_HPP

#include "quintic/qseries.hpp"

namespace quintic {

enum class Theta { A, B, C, D };
enum class SeriesForm { primary, sum, product };

/// The four quintic theta functions.  A and B live on the q^(1/5) grid with
/// valuations 1/5 and 0; C and D live on the integer grid.  The primary
/// constructors are the infinite products for A, B and the linear
/// combinations C = B(q^5) - alpha*A(q^5), D = B(q^5) - beta*A(q^5); the
/// bilateral-sum and product forms are available as cross-checks.
QSeries theta_series(Theta which, SeriesForm form, const Rational& order);

/// Memoized primary forms.
QSeries theta_A(const Rational& order);
QSeries theta_B(const Rational& order);
QSeries theta_C(const Rational& order);
QSeries theta_D(const Rational& order);

enum class RR { G, H };

/// Rogers-Ramanujan functions; primary/product is the infinite product,
/// sum is sum q^(n^2 (+n)) / (q;q)_n.
QSeries rogers_ramanujan(RR which, SeriesForm form, const Rational& order);

/// Rogers-Ramanujan continued fraction R = A/B as a product on grid 5.
QSeries rr_continued_fraction(const Rational& order);

/// Finite Pochhammer (q;q)_n truncated at order.
QSeries pochhammer_fin(long n, const Rational& order);

}  // namespace quintic

#endif
