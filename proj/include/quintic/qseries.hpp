#ifndef QUINTIC_QSERIES_HPP
#define QUINTIC_QSERIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "quintic/field.hpp"

namespace quintic {

/// Truncated formal series in q^(1/D) with FieldElement coefficients.
///
/// Exponents live on the grid (1/D)*Z.  coeff_[j] is the coefficient of
/// q^((v_+j)/D).  Coefficients below v_/D are zero; coefficients at grid
/// numerators >= v_ + size() are UNKNOWN, not zero.  "Known to order M"
/// means every exponent < M is tracked.  Operations propagate the known
/// range conservatively so a truncated comparison can never silently pass
/// on unknown data.
class QSeries {
  public:
    QSeries() : D_(1), v_(0) {}

    static QSeries zero(int grid = 1, long known_numerators = 1);
    static QSeries one(long order_terms, int grid = 1);
    /// c * q^(num/grid), known through exponent numerator num+known_len.
    static QSeries monomial(const FieldElement& c, long num, int grid, long known_len);
    static QSeries make(int grid, long val, std::vector<FieldElement> coeffs);

    int grid() const { return D_; }
    long val_num() const { return v_; }
    long size() const { return static_cast<long>(c_.size()); }
    long known_bound_num() const { return v_ + size(); }  // exclusive, grid units
    Rational known_order() const { return Rational(known_bound_num(), D_); }
    const FieldElement& at(long j) const { return c_[j]; }

    bool known_zero() const;  // all known coefficients vanish
    /// Lowest exponent with a nonzero known coefficient, if any.
    std::optional<Rational> lowest_nonzero() const;
    FieldElement leading_coeff() const;  // throws if known-zero

    /// Coefficient of q^e; throws std::out_of_range if e is beyond the
    /// known range, returns 0 for off-grid or pre-valuation exponents.
    FieldElement coeff_at(const Rational& e) const;

    // -- grid plumbing -------------------------------------------------
    /// Same series on a finer grid (new_grid must be a multiple of grid()).
    QSeries on_grid(int new_grid) const;
    /// Reduce the grid when every known datum allows it (exponents kept).
    QSeries coarsened() const;
    /// The operator pi: reinterpret f(q) as f(q^(1/m)) -- exponents divide
    /// by m, i.e. the grid denominator multiplies.
    QSeries pi_refine(int m) const;
    /// f(q^k): exponents multiply by k.
    QSeries subst_power(long k) const;
    /// Drop knowledge at exponents >= M (cheap way to bound later work).
    QSeries truncated(const Rational& M) const;

    // -- ring operations ----------------------------------------------
    QSeries operator-() const;
    QSeries operator+(const QSeries& o) const;
    QSeries operator-(const QSeries& o) const;
    QSeries operator*(const QSeries& o) const;
    QSeries operator*(const FieldElement& s) const;
    QSeries operator/(const QSeries& o) const { return *this * o.inverted(); }

    QSeries inverted() const;  // leading known coefficient must be nonzero
    QSeries pow_int(long e) const;
    /// Unit-series rational power (valuation 0, constant term 1).
    QSeries pow_unit(const Rational& r) const;
    /// Principal n-th root: valuation divisible by n on the grid and the
    /// leading coefficient must have an n-th root in the field.
    QSeries nth_root(unsigned long n) const;
    /// f^r for rational r; the valuation times r must stay on the grid and
    /// the leading coefficient must have the required root in the field.
    QSeries pow_rational(const Rational& r) const;
    /// q d/dq.
    QSeries theta_deriv() const;

    // -- multisection --------------------------------------------------
    /// Omega_{k,m}: keep exponents e with D*e = m (mod k), map
    /// e -> (e - m/D)/k.  On the integer grid this is sum a_{kn+m} q^n.
    QSeries multisect(long k, long m) const;
    /// q -> zeta_5^j q on the integer grid.
    QSeries twist(long j) const;

    // -- comparison ----------------------------------------------------
    /// First exponent < M at which the two series differ; nullopt means
    /// equal to order M.  Throws if either side does not know all of [.., M).
    static std::optional<Rational> first_difference(const QSeries& a, const QSeries& b,
                                                    const Rational& M);
    static bool agree_to_order(const QSeries& a, const QSeries& b, const Rational& M) {
        return !first_difference(a, b, M).has_value();
    }

    std::string str(long max_terms = 12) const;

  private:
    void trim();

    int D_;
    long v_;
    std::vector<FieldElement> c_;
};

inline QSeries operator*(const FieldElement& s, const QSeries& f) { return f * s; }

}  // namespace quintic

#endif
