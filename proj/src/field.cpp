#include "quintic/field.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

namespace quintic {

namespace {

// Phi_20 reduction rule: x^8 = x^6 - x^4 + x^2 - 1.
// Reduces a degree-<15 coefficient vector in place onto the first 8 slots.
void reduce_mod_phi20(std::array<Rational, 15>& c) {
    for (int k = 14; k >= 8; --k) {
        if (c[k] == 0) continue;
        c[k - 2] += c[k];
        c[k - 4] -= c[k];
        c[k - 6] += c[k];
        c[k - 8] -= c[k];
        c[k] = 0;
    }
}

using Poly = std::vector<Rational>;  // dense, coefficient of x^i at index i

int pdeg(const Poly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

// p -= q * c * x^shift
void psub_scaled(Poly& p, const Poly& q, const Rational& c, int shift) {
    if (p.size() < q.size() + shift) p.resize(q.size() + shift);
    for (size_t i = 0; i < q.size(); ++i) p[i + shift] -= q[i] * c;
}

}  // namespace

bool FieldElement::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool FieldElement::is_rational() const {
    for (int k = 1; k < 8; ++k)
        if (c_[k] != 0) return false;
    return true;
}

const Rational& FieldElement::as_rational() const {
    if (!is_rational()) throw std::domain_error("FieldElement is not rational: " + str());
    return c_[0];
}

FieldElement FieldElement::operator-() const {
    FieldElement r;
    for (int k = 0; k < 8; ++k) r.c_[k] = -c_[k];
    return r;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    FieldElement r;
    for (int k = 0; k < 8; ++k) r.c_[k] = c_[k] + o.c_[k];
    return r;
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    FieldElement r;
    for (int k = 0; k < 8; ++k) r.c_[k] = c_[k] - o.c_[k];
    return r;
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    // Fast path: rational * anything is coordinatewise.
    if (is_rational()) {
        if (c_[0] == 0) return FieldElement();
        FieldElement r;
        for (int k = 0; k < 8; ++k) r.c_[k] = c_[0] * o.c_[k];
        return r;
    }
    if (o.is_rational()) return o * *this;

    std::array<Rational, 15> prod{};
    for (int i = 0; i < 8; ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; j < 8; ++j) {
            if (o.c_[j] == 0) continue;
            prod[i + j] += c_[i] * o.c_[j];
        }
    }
    reduce_mod_phi20(prod);
    FieldElement r;
    for (int k = 0; k < 8; ++k) r.c_[k] = std::move(prod[k]);
    return r;
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero FieldElement");
    if (o.is_rational()) {
        FieldElement r;
        for (int k = 0; k < 8; ++k) r.c_[k] = c_[k] / o.c_[0];
        return r;
    }
    return *this * o.inverse();
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero FieldElement");
    if (is_rational()) return FieldElement(Rational(1) / c_[0]);

    // Extended Euclid in Q[x] against Phi_20: find u with u*this = 1 (mod Phi).
    Poly a = {1, 0, -1, 0, 1, 0, -1, 0, 1};  // Phi_20, low-to-high
    Poly b(c_.begin(), c_.end());
    Poly ua = {0}, ub = {1};  // track Bezout coefficient w.r.t. b only
    while (true) {
        int db = pdeg(b);
        if (db < 0) throw std::domain_error("inverse: element not invertible");
        if (db == 0) break;
        int da = pdeg(a);
        if (da < db) {
            std::swap(a, b);
            std::swap(ua, ub);
            continue;
        }
        Rational q = a[da] / b[db];
        psub_scaled(a, b, q, da - db);
        psub_scaled(ua, ub, q, da - db);
    }
    // b is a nonzero constant; ub * original == b (mod Phi).
    Rational inv_c = Rational(1) / b[0];
    // Reduce ub mod Phi_20 (same folding rule, arbitrary degree).
    for (int k = static_cast<int>(ub.size()) - 1; k >= 8; --k) {
        if (ub[k] == 0) continue;
        ub[k - 2] += ub[k];
        ub[k - 4] -= ub[k];
        ub[k - 6] += ub[k];
        ub[k - 8] -= ub[k];
        ub[k] = 0;
    }
    ub.resize(8, Rational(0));
    std::array<Rational, 8> out;
    for (int k = 0; k < 8; ++k) out[k] = ub[k] * inv_c;
    return from_coeffs(std::move(out));
}

FieldElement FieldElement::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    FieldElement r(1), b = *this;
    unsigned long n = e;
    while (n) {
        if (n & 1) r = r * b;
        b = b * b;
        n >>= 1;
    }
    return r;
}

FieldElement FieldElement::conj() const {
    // z -> z^19: apply coordinatewise via powers of zeta.
    FieldElement r(c_[0]);
    for (int k = 1; k < 8; ++k) {
        if (c_[k] == 0) continue;
        r += FieldElement(c_[k]) * zeta_pow(-k);
    }
    return r;
}

std::string FieldElement::str() const {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k < 8; ++k) {
        if (c_[k] == 0) continue;
        if (!first) os << " + ";
        os << rat_str(c_[k]);
        if (k >= 1) os << "*z";
        if (k >= 2) os << "^" << k;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::complex<double> FieldElement::to_complex() const {
    std::complex<double> r(0.0, 0.0);
    for (int k = 0; k < 8; ++k) {
        if (c_[k] == 0) continue;
        double theta = std::numbers::pi * k / 10.0;
        r += c_[k].get_d() * std::complex<double>(std::cos(theta), std::sin(theta));
    }
    return r;
}

FieldElement zeta_pow(long k) {
    k %= 20;
    if (k < 0) k += 20;
    // z^10 = -1, so fold into degree < 10 with sign, then reduce 8,9.
    int sign = 1;
    if (k >= 10) {
        k -= 10;
        sign = -1;
    }
    std::array<Rational, 15> c{};
    c[k] = sign;
    reduce_mod_phi20(c);
    std::array<Rational, 8> out;
    for (int j = 0; j < 8; ++j) out[j] = std::move(c[j]);
    return FieldElement::from_coeffs(std::move(out));
}

FieldElement field_constant(const std::string& name) {
    if (name == "zeta20") return zeta_pow(1);
    if (name == "zeta10") return zeta_pow(2);
    if (name == "zeta5") return zeta_pow(4);
    if (name == "i") return zeta_pow(5);
    if (name == "sqrt5") {
        // quadratic Gauss sum: zeta5 - zeta5^2 - zeta5^3 + zeta5^4
        return zeta_pow(4) - zeta_pow(8) - zeta_pow(12) + zeta_pow(16);
    }
    if (name == "alpha") return (FieldElement(1) + field_constant("sqrt5")) / FieldElement(2);
    if (name == "beta") return (FieldElement(1) - field_constant("sqrt5")) / FieldElement(2);
    throw std::invalid_argument("unknown field constant: " + name);
}

std::optional<FieldElement> nth_root_in_field(const FieldElement& a, unsigned long n) {
    if (n == 0) throw std::invalid_argument("nth_root_in_field: n must be positive");
    if (a.is_zero()) return FieldElement(0);
    if (n == 1) return a;
    // 2 sin(pi/5) = z^3 - z^7,  2 sin(2pi/5) = z - z^9; their squares are
    // (5 -+ sqrt5)/2, which covers the theta-constant prefactors.
    const FieldElement mults[4] = {
        FieldElement(1),
        field_constant("sqrt5"),
        zeta_pow(3) - zeta_pow(7),
        zeta_pow(1) - zeta_pow(9),
    };
    for (long j = 0; j < 20; ++j) {
        FieldElement zj = zeta_pow(j);
        for (const auto& m : mults) {
            FieldElement cand_unit = zj * m;
            FieldElement t = a / cand_unit.pow(static_cast<long>(n));
            if (!t.is_rational()) continue;
            auto c = rat_nth_root(t.as_rational(), n);
            if (!c) continue;
            return FieldElement(*c) * cand_unit;
        }
    }
    return std::nullopt;
}

}  // namespace quintic
