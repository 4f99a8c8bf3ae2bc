#include "quintic/rational.hpp"

namespace quintic {

Rational rat_pow(const Rational& base, long exp) {
    if (exp == 0) return Rational(1);
    Rational b = exp < 0 ? Rational(1) / base : base;
    unsigned long e = exp < 0 ? -static_cast<unsigned long>(exp) : exp;
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), b.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), b.get_den_mpz_t(), e);
    return r;  // num/den already coprime, no canonicalization needed
}

std::optional<Int> int_nth_root(const Int& a, unsigned long n) {
    if (a < 0) {
        if (n % 2 == 0) return std::nullopt;
        auto r = int_nth_root(-a, n);
        if (!r) return std::nullopt;
        return -*r;
    }
    Int r;
    int exact = mpz_root(r.get_mpz_t(), a.get_mpz_t(), n);
    if (!exact) return std::nullopt;
    return r;
}

std::optional<Rational> rat_nth_root(const Rational& a, unsigned long n) {
    auto p = int_nth_root(Int(a.get_num()), n);
    if (!p) return std::nullopt;
    auto q = int_nth_root(Int(a.get_den()), n);
    if (!q) return std::nullopt;
    return Rational(*p, *q);
}

std::string rat_str(const Rational& a) {
    if (a.get_den() == 1) return a.get_num().get_str();
    return a.get_num().get_str() + "/" + a.get_den().get_str();
}

}  // namespace quintic
