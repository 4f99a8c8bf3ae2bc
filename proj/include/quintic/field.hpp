#ifndef QUINTIC_FIELD_HPP
#define QUINTIC_FIELD_HPP

#include <array>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>

#include "quintic/rational.hpp"

namespace quintic {

/// Element of the degree-8 cyclotomic field Q(zeta_20), stored on the power
/// basis 1, z, ..., z^7 with z = e^{2 pi i / 20}, reduced modulo
/// Phi_20(x) = x^8 - x^6 + x^4 - x^2 + 1.  Always kept fully reduced, so
/// equality is componentwise.
class FieldElement {
  public:
    FieldElement() = default;
    FieldElement(const Rational& r) {
        c_[0] = r;
        c_[0].canonicalize();  // mpq invariants require reduced form
    }
    FieldElement(long n) { c_[0] = n; }

    static FieldElement from_coeffs(std::array<Rational, 8> c) {
        FieldElement e;
        e.c_ = std::move(c);
        for (auto& x : e.c_) x.canonicalize();
        return e;
    }

    const Rational& coeff(int k) const { return c_[k]; }

    bool is_zero() const;
    bool is_rational() const;  // only the constant coordinate may be nonzero
    /// Rational part; throws unless is_rational().
    const Rational& as_rational() const;

    FieldElement operator-() const;
    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
    FieldElement& operator/=(const FieldElement& o) { return *this = *this / o; }
    bool operator==(const FieldElement& o) const { return c_ == o.c_; }
    bool operator!=(const FieldElement& o) const { return c_ != o.c_; }

    FieldElement inverse() const;
    FieldElement pow(long e) const;

    /// Complex conjugate (z -> z^-1 = z^19 on the basis).
    FieldElement conj() const;

    std::string str() const;  // "c0 + c1*z + ... + c7*z^7"
    std::complex<double> to_complex() const;

  private:
    std::array<Rational, 8> c_{};  // value-initialized to 0
};

/// Named constants: i, sqrt5, zeta5, zeta10, zeta20, alpha, beta.
/// Throws std::invalid_argument for an unknown name.
FieldElement field_constant(const std::string& name);

/// z^k for any integer k (k reduced mod 20); gives every 20th root of unity,
/// i.e. every e^{pi i k / 10}.
FieldElement zeta_pow(long k);

/// Some x with x^n = a, searched among rational multiples of the unit
/// monomials z^k and of z^k*sqrt5, z^k*2sin(pi/5), z^k*2sin(2pi/5).
/// Returns nullopt when no candidate matches.
std::optional<FieldElement> nth_root_in_field(const FieldElement& a, unsigned long n);

}  // namespace quintic

#endif
