#ifndef QUINTIC_PARTITIONS_HPP
#define QUINTIC_PARTITIONS_HPP

#include <optional>
#include <string>
#include <vector>

#include "quintic/qseries.hpp"
#include "quintic/report.hpp"

namespace quintic {

/// Coefficients a_0..a_{n_max} of (q;q)_inf^(-k) for any integer k.
/// k = 1 is the ordinary partition function; k = -1 the pentagonal signs.
std::vector<Int> partition_coeffs(long k, long n_max);

/// tau(1)..tau(n_max) from Delta = q (q;q)^24.
std::vector<Int> tau_coeffs(long n_max);

/// The five residue-class expansions of (q;q)^5 * sum p(5n+c) q^n as
/// polynomials in the quintic theta functions, plus the eta-quotient form
/// of the 5n+4 class.
IdentityReport verify_dissection_5_1(const Rational& order);

/// The p(25n+24+5m) expansions, m = 0..4, from the multisection-operator
/// pipeline, including the degree-ten polynomial with coefficient vector
/// 25*(63, -3728, 27861, -25404, 21285, 25404, 27861, 3728, 63) and its
/// rewriting in the weight-two Eisenstein pair.
IdentityReport verify_p25(const Rational& order);

/// The recursive tower F_{n,m} behind the p(5^k n + delta_k + 5^{k-1} m)
/// expansions; k = 2 reproduces verify_p25, k = 3 gives the 125-divisible
/// class p(125n+99).
IdentityReport verify_nm1(long k, const Rational& order);

/// All residue-class expansions of (q;q) = sum p_{-1}(n) q^n (including the
/// two identically-zero classes) and the displayed p_{+-k} dissections for
/// k up to 6.
IdentityReport verify_pminus_family(const Rational& order);

/// The degree-five modular equation for q(q^5;q^5)^6/(q;q)^6 in terms of
/// q(q^25;q^25)/(q;q), and the eta-quotient chain it rests on.
IdentityReport verify_watson(const Rational& order);

/// sum tau(5^n m) q^m as 5^n * x^5 y^5 (x^10 - 11 x^5 y^5 - y^10) * P_n
/// with P_n from the 5x5 generating recurrence; n in {0, 1, 2}.
IdentityReport tau_multisection(long n, const Rational& order);

/// Generating identity and congruence for 5-cores along 5^n m - 1; n in {1,2}.
IdentityReport five_core_check(long n, const Rational& order);

/// Exhaustive residue scan of p_k(a n + b) mod M for n = 0..n_max.
struct CongruenceCertificate {
    long family_k = 0;
    Int modulus = 0;
    long prog_a = 1;
    long prog_b = 0;
    long n_max = 0;
    bool pass = false;
    std::optional<long> counterexample;  // first failing n, if any
    std::string label;                   // "theorem-verified" or "conjecture-support"

    std::string to_json() const;
    std::string str() const;
};

CongruenceCertificate congruence_scan(long family_k, const Int& modulus, long prog_a,
                                      long prog_b, long n_max,
                                      bool conjecture_support = false);

}  // namespace quintic

#endif
