#include "doctest.h"

#include <map>

#include "quintic/partitions.hpp"
#include "quintic/products.hpp"

using namespace quintic;

namespace {

// Independent oracle: p(n) by Euler's pentagonal-number recurrence,
// p(n) = sum_{j>=1} (-1)^(j+1) [ p(n - j(3j-1)/2) + p(n - j(3j+1)/2) ].
std::vector<Int> pentagonal_p(long n_max) {
    std::vector<Int> p(static_cast<size_t>(n_max) + 1);
    p[0] = 1;
    for (long n = 1; n <= n_max; ++n) {
        Int s = 0;
        for (long j = 1;; ++j) {
            long g1 = j * (3 * j - 1) / 2, g2 = j * (3 * j + 1) / 2;
            if (g1 > n) break;
            Int t = p[static_cast<size_t>(n - g1)];
            if (g2 <= n) t += p[static_cast<size_t>(n - g2)];
            if (j % 2) s += t; else s -= t;
        }
        p[static_cast<size_t>(n)] = s;
    }
    return p;
}

}  // namespace

TEST_SUITE("partitions") {

TEST_CASE("partition numbers against the pentagonal recurrence") {
    long N = 300;
    std::vector<Int> a = partition_coeffs(1, N);
    std::vector<Int> b = pentagonal_p(N);
    REQUIRE(a.size() == b.size());
    for (long n = 0; n <= N; ++n) CHECK(a[static_cast<size_t>(n)] == b[static_cast<size_t>(n)]);
    CHECK(a[4] == 5);
    CHECK(a[9] == 30);
    CHECK(a[24] == 1575);
    CHECK(a[34] == 12310);
    CHECK(a[99] == 169229875);
}

TEST_CASE("inverse family: pentagonal number theorem") {
    // (q;q) = sum (-1)^j q^(j(3j+-1)/2); all other coefficients vanish
    long N = 200;
    std::vector<Int> e = partition_coeffs(-1, N);
    std::map<long, long> expect;  // exponent -> sign
    expect[0] = 1;
    for (long j = 1;; ++j) {
        long g1 = j * (3 * j - 1) / 2, g2 = j * (3 * j + 1) / 2;
        if (g1 > N) break;
        long s = (j % 2) ? -1 : 1;
        expect[g1] = s;
        if (g2 <= N) expect[g2] = s;
    }
    for (long n = 0; n <= N; ++n) {
        auto it = expect.find(n);
        CHECK(e[static_cast<size_t>(n)] == Int(it == expect.end() ? 0 : it->second));
    }
    // k = 0 gives the constant series 1
    std::vector<Int> one = partition_coeffs(0, 10);
    CHECK(one[0] == 1);
    for (size_t j = 1; j < one.size(); ++j) CHECK(one[j] == 0);
    // product consistency: (q;q)^3 * (q;q)^-3 = 1
    std::vector<Int> u = partition_coeffs(3, 60), v = partition_coeffs(-3, 60);
    for (long n = 0; n <= 60; ++n) {
        Int s = 0;
        for (long j = 0; j <= n; ++j) s += u[static_cast<size_t>(j)] * v[static_cast<size_t>(n - j)];
        CHECK(s == Int(n == 0 ? 1 : 0));
    }
}

TEST_CASE("tau coefficients") {
    std::vector<Int> t = tau_coeffs(30);
    CHECK(t[1] == 1);
    CHECK(t[2] == -24);
    CHECK(t[3] == 252);
    CHECK(t[5] == 4830);
    CHECK(t[25] == -25499225);
    // multiplicativity at coprime arguments
    CHECK(t[6] == t[2] * t[3]);
    CHECK(t[10] == t[2] * t[5]);
    CHECK(t[15] == t[3] * t[5]);
}

TEST_CASE("quintic dissection of the partition generating function") {
    IdentityReport r = verify_dissection_5_1(Rational(18));
    CHECK(r.pass);
}

TEST_CASE("p(25n+5m-1) classes through the multisection pipeline") {
    IdentityReport r = verify_p25(Rational(12));
    CHECK(r.pass);
    CHECK(r.notes.find("1575") != std::string::npos);
}

TEST_CASE("recursive tower, k = 2 and k = 3") {
    CHECK(verify_nm1(2, Rational(10)).pass);
    CHECK(verify_nm1(3, Rational(7)).pass);
    CHECK_THROWS_AS((void)verify_nm1(4, Rational(5)), std::invalid_argument);
}

TEST_CASE("inverse-family dissections and the p_k displays") {
    CHECK(verify_pminus_family(Rational(16)).pass);
}

TEST_CASE("degree-five modular equation") {
    CHECK(verify_watson(Rational(24)).pass);
}

TEST_CASE("tau multisections") {
    CHECK(tau_multisection(0, Rational(16)).pass);
    CHECK(tau_multisection(1, Rational(12)).pass);
    CHECK(tau_multisection(2, Rational(8)).pass);
    CHECK_THROWS_AS((void)tau_multisection(3, Rational(5)), std::invalid_argument);
}

TEST_CASE("five-core generating identity") {
    CHECK(five_core_check(1, Rational(16)).pass);
    CHECK(five_core_check(2, Rational(10)).pass);
}

TEST_CASE("congruence scans: theorem-backed cases") {
    // p(5n+4) = 0 mod 5 and the other omega in {5, 11} cases
    CongruenceCertificate c1 = congruence_scan(1, 5, 5, 4, 100);
    CHECK(c1.pass);
    CHECK(c1.label == "theorem-verified");
    CHECK(!c1.counterexample.has_value());
    CHECK(congruence_scan(6, 5, 5, 4, 100).pass);
    CHECK(congruence_scan(7, 11, 11, 9, 100).pass);
    CHECK(congruence_scan(18, 11, 11, 9, 100).pass);
    // classical higher-power cases
    CHECK(congruence_scan(1, 25, 25, 24, 60).pass);
    CHECK(congruence_scan(1, 125, 125, 99, 15).pass);
}

TEST_CASE("congruence scans: conjectural families") {
    for (long k = 0; k <= 2; ++k) {
        CongruenceCertificate a = congruence_scan(17 + 25 * k, 25, 5, 3, 200, true);
        CHECK(a.pass);
        CHECK(a.label == "conjecture-support");
        CongruenceCertificate b = congruence_scan(11 + 25 * k, 25, 5, 4, 200, true);
        CHECK(b.pass);
        CHECK(b.label == "conjecture-support");
    }
}

TEST_CASE("negative controls") {
    // a false congruence must fail and report its first counterexample
    CongruenceCertificate bad = congruence_scan(1, 5, 5, 1, 50);
    CHECK(!bad.pass);
    REQUIRE(bad.counterexample.has_value());
    CHECK(*bad.counterexample == 0);  // p(1) = 1
    // perturbed comparison: shifting a verified class must fail
    CongruenceCertificate bad2 = congruence_scan(1, 25, 25, 23, 30);
    CHECK(!bad2.pass);
    CHECK_THROWS_AS((void)congruence_scan(1, 5, 0, 4, 10), std::invalid_argument);
}

TEST_CASE("certificate serialization") {
    CongruenceCertificate c = congruence_scan(1, 5, 5, 4, 40);
    std::string j = c.to_json();
    CHECK(j.find("\"verdict\":\"PASS\"") != std::string::npos);
    CHECK(j.find("\"modulus\":\"5\"") != std::string::npos);
    CHECK(j.find("\"progression\":[5,4]") != std::string::npos);
    CHECK(c.str().find("PASS") != std::string::npos);
    CongruenceCertificate f = congruence_scan(1, 7, 7, 0, 20);
    std::string jf = f.to_json();
    CHECK(jf.find("\"verdict\":\"FAIL\"") != std::string::npos);
    CHECK(jf.find("\"counterexample\"") != std::string::npos);
}

}  // TEST_SUITE
