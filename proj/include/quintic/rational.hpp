#ifndef QUINTIC_RATIONAL_HPP
#define QUINTIC_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>

namespace quintic {

using Int = mpz_class;
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) { return Rational(num, den); }

Rational rat_pow(const Rational& base, long exp);

// Exact integer nth root: returns r with r^n == a, if it exists.
std::optional<Int> int_nth_root(const Int& a, unsigned long n);

// Exact rational nth root, if one exists.
std::optional<Rational> rat_nth_root(const Rational& a, unsigned long n);

std::string rat_str(const Rational& a);

}  // namespace quintic

#endif
