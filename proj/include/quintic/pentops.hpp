#ifndef QUINTIC_PENTOPS_HPP
#define QUINTIC_PENTOPS_HPP

#include <string>
#include <utility>
#include <vector>

#include "quintic/qseries.hpp"
#include "quintic/report.hpp"

namespace quintic {

/// Dense integer matrix with unbounded entries.
struct IntMatrix {
    long rows = 0, cols = 0;
    std::vector<Int> a;

    IntMatrix() = default;
    IntMatrix(long r, long c) : rows(r), cols(c), a(static_cast<size_t>(r * c)) {}
    static IntMatrix identity(long n);

    Int& at(long r, long c) { return a[static_cast<size_t>(r * cols + c)]; }
    const Int& at(long r, long c) const { return a[static_cast<size_t>(r * cols + c)]; }

    IntMatrix operator*(const IntMatrix& o) const;
    std::vector<Int> operator*(const std::vector<Int>& v) const;
    IntMatrix pow(long e) const;  // square matrices, e >= 0
    bool operator==(const IntMatrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

    /// Exact determinant (square matrices) by fraction-free elimination.
    Int det() const;
    /// Solve M x = v exactly over the rationals (square, invertible).
    std::vector<Rational> solve(const std::vector<Rational>& v) const;

    std::string str() const;
};

/// Homogeneous polynomial sum_k c[k] A^(5k) B^(5(d-k)), degree d = c.size()-1.
struct HomPoly {
    std::vector<FieldElement> c;
    long degree() const { return static_cast<long>(c.size()) - 1; }
};

/// Mixed polynomial sum_r b[r] A^r B^(5d-r), 5d+1 coefficients.
struct MixedPoly {
    std::vector<FieldElement> b;
    long degree5() const { return static_cast<long>(b.size()) - 1; }
};

/// Restriction of a mixed polynomial to A-exponents = m (mod 5):
/// q^(-m/5) sum_k b[k] A^(5k+m) B^(5d-5k-m).
struct MixedRestriction {
    long m = 0;
    std::vector<FieldElement> b;  // b[k] multiplies A^(5k+m) B^(5d-5k-m)
    long degree() const { return static_cast<long>(b.size()) - 1; }
};

/// The (5d+1) x (d+1) pentamidiation array by direct enumeration of
/// five-part compositions.
IntMatrix pent_array(long d);
/// The (d+1) x (d+1) multisection matrix: rows 0, 5, ..., 5d of pent_array.
IntMatrix hecke_matrix(long d);

/// Matrix route for the substitution q -> q^(1/5) on homogeneous polynomials.
MixedPoly pentamidiate_poly(const HomPoly& p);
/// Residue-class part of the pentamidiated polynomial (m = 0..4).
MixedRestriction omega_poly(const HomPoly& p, long m);

/// Evaluate as q-series (integer grid for HomPoly, grid 5 for the others).
QSeries hompoly_series(const HomPoly& p, const Rational& order);
QSeries mixedpoly_series(const MixedPoly& p, const Rational& order);
QSeries restriction_series(const MixedRestriction& p, long degree5, const Rational& order);

/// Verify matrix route == direct series route for one polynomial.
IdentityReport pentamidiate_series_check(const HomPoly& p, const Rational& order);

/// (A(q^5), B(q^5)) via the radical formulas with principal fifth roots.
std::pair<QSeries, QSeries> penticate(const QSeries& A_ser, const QSeries& B_ser,
                                      const Rational& order);

/// (C(zeta_5^k q), D(zeta_5^k q)) via the linear change-of-sign formulas.
std::pair<QSeries, QSeries> change_of_sign(long k, const Rational& order);

/// Identity registry ------------------------------------------------------
struct RegistryEntry {
    std::string name;
    std::string anchor;
    Rational default_order;
};

std::vector<RegistryEntry> registry_list();
bool registry_has(const std::string& name);
/// Build both sides and compare; throws std::invalid_argument on unknown name.
IdentityReport verify_registry(const std::string& name, const Rational& order);

}  // namespace quintic

#endif
