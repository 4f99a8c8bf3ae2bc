#include "doctest.h"

#include <random>

#include "quintic/products.hpp"

using namespace quintic;

TEST_SUITE("products") {

TEST_CASE("Euler product vs pentagonal-number theorem") {
    Rational M(100);
    QSeries euler = pochhammer_inf(1, 1, M);
    // oracle: sum (-1)^k q^(k(3k-1)/2) over all integers k
    std::vector<FieldElement> c(100);
    for (long k = -10; k <= 10; ++k) {
        long g = k * (3 * k - 1) / 2;
        if (g < 100) c[static_cast<size_t>(g)] += FieldElement(k % 2 == 0 ? 1 : -1);
    }
    QSeries pent = QSeries::make(1, 0, std::move(c));
    CHECK(QSeries::agree_to_order(euler, pent, M));
}

TEST_CASE("Rogers-Ramanujan denominator product") {
    Rational M(20);
    QSeries g = (pochhammer_inf(1, 5, M) * pochhammer_inf(4, 5, M)).inverted();
    // partitions into parts = 1, 4 mod 5
    long expect[] = {1, 1, 1, 1, 2, 2, 3, 3, 4, 5, 6, 7, 9, 10, 12, 14, 17, 19, 23, 26};
    for (long n = 0; n < 20; ++n) CHECK(g.coeff_at(Rational(n)) == FieldElement(expect[n]));
}

TEST_CASE("factorization (q;q) = prod_r (q^r;q^5)") {
    Rational M(80);
    QSeries lhs = pochhammer_inf(1, 1, M);
    QSeries rhs = QSeries::one(80);
    for (long r = 1; r <= 5; ++r) rhs = rhs * pochhammer_inf(r, 5, M);
    CHECK(QSeries::agree_to_order(lhs, rhs, M));
}

TEST_CASE("eta powers") {
    Rational M(60);
    // (q;q)^3 = sum (-1)^mu (2mu+1) q^(mu(mu+1)/2)
    QSeries cube = eta_power(3, 1, 1, M);
    std::vector<FieldElement> c(60);
    for (long mu = 0; mu * (mu + 1) / 2 < 60; ++mu)
        c[static_cast<size_t>(mu * (mu + 1) / 2)] =
            FieldElement((mu % 2 ? -1 : 1) * (2 * mu + 1));
    CHECK(QSeries::agree_to_order(cube, QSeries::make(1, 0, std::move(c)), M));

    // fractional power consistency: (f^(m/n))^n = f^m
    QSeries frac = eta_power(-3, 5, 1, M);
    CHECK(QSeries::agree_to_order(frac.pow_int(5), eta_power(-3, 1, 1, M), M));
    QSeries frac2 = eta_power(2, 5, 5, M);
    CHECK(QSeries::agree_to_order(frac2.pow_int(5), eta_power(2, 1, 5, M), M));

    // discriminant: q (q;q)^24 with tau(2) = -24, tau(3) = 252, tau(4) = -1472
    QSeries delta = QSeries::monomial(FieldElement(1), 1, 1, 60) * eta_power(24, 1, 1, M);
    CHECK(delta.coeff_at(Rational(1)) == FieldElement(1));
    CHECK(delta.coeff_at(Rational(2)) == FieldElement(-24));
    CHECK(delta.coeff_at(Rational(3)) == FieldElement(252));
    CHECK(delta.coeff_at(Rational(4)) == FieldElement(-1472));
}

TEST_CASE("ramanujan_f basics") {
    Rational M(60);
    // f(-q^2, -q^3) = sum (-1)^n q^((5n^2-n)/2)
    QSeries f = ramanujan_f(FieldElement(-1), 2, FieldElement(-1), 3, M);
    std::vector<FieldElement> c(60);
    for (long n = -6; n <= 6; ++n) {
        long e = (5 * n * n - n) / 2;
        if (e < 60) c[static_cast<size_t>(e)] += FieldElement(n % 2 == 0 ? 1 : -1);
    }
    CHECK(QSeries::agree_to_order(f, QSeries::make(1, 0, std::move(c)), M));

    // symmetric specialization: f(q^(1/2), q^(1/2)) = theta3 at q^(1/2)
    QSeries s = ramanujan_f(FieldElement(1), Rational(1, 2), FieldElement(1), Rational(1, 2),
                            Rational(10));
    CHECK(s.coeff_at(Rational(0)) == FieldElement(1));
    CHECK(s.coeff_at(Rational(1, 2)) == FieldElement(2));
    CHECK(s.coeff_at(Rational(2)) == FieldElement(2));
    CHECK(s.coeff_at(Rational(9, 2)) == FieldElement(2));
    CHECK(s.coeff_at(Rational(1)) == FieldElement(0));

    CHECK_THROWS_AS(ramanujan_f(FieldElement(1), 1, FieldElement(1), -1, M), std::domain_error);
}

TEST_CASE("Jacobi triple product for random monomial arguments") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> pick(0, 3);
    const FieldElement coeffs[4] = {FieldElement(1), FieldElement(-1), field_constant("i"),
                                    -field_constant("i")};
    const Rational exps[4] = {Rational(1, 2), Rational(1), Rational(3, 2), Rational(2)};
    Rational M(60);
    for (int it = 0; it < 5; ++it) {
        FieldElement ac = coeffs[pick(rng)], bc = coeffs[pick(rng)];
        Rational ae = exps[pick(rng)], be = exps[pick(rng)];
        QSeries sum = ramanujan_f(ac, ae, bc, be, M);
        // f(a,b) = (-a; ab)(-b; ab)(ab; ab)
        FieldElement pc = ac * bc;
        Rational pe = ae + be;
        QSeries prod = pochhammer_inf({-ac, ae, pe, pc}, M) *
                       pochhammer_inf({-bc, be, pe, pc}, M) * pochhammer_inf({pc, pe, pe, pc}, M);
        CHECK(QSeries::agree_to_order(sum, prod, M));
    }
}

TEST_CASE("null thetas") {
    Rational M(100);
    auto [t2, t3, t4] = jacobi_null_thetas(M);
    CHECK(t3.coeff_at(Rational(0)) == FieldElement(1));
    CHECK(t3.coeff_at(Rational(1)) == FieldElement(2));
    CHECK(t3.coeff_at(Rational(4)) == FieldElement(2));
    CHECK(t3.coeff_at(Rational(9)) == FieldElement(2));
    CHECK(t3.coeff_at(Rational(2)) == FieldElement(0));
    CHECK(t2.coeff_at(Rational(1, 4)) == FieldElement(2));
    CHECK(t2.coeff_at(Rational(9, 4)) == FieldElement(2));
    // the abstruse identity
    CHECK(QSeries::agree_to_order(t3.pow_int(4), t4.pow_int(4) + t2.pow_int(4), M));
    // theta4(q) = theta3(-q): sign alternation via twist-like check
    for (long n = 0; n < 30; ++n) {
        FieldElement sign((n % 2) ? -1 : 1);
        CHECK(t4.coeff_at(Rational(n)) == sign * t3.coeff_at(Rational(n)));
    }
}

TEST_CASE("theta_char phases and errors") {
    CHECK(exp_pi_i(Rational(1, 10)) == zeta_pow(1));
    CHECK(exp_pi_i(Rational(1)) == FieldElement(-1));
    CHECK(exp_pi_i(Rational(7, 10)) == zeta_pow(7));
    CHECK_THROWS_AS(exp_pi_i(Rational(1, 3)), std::domain_error);
    CHECK_THROWS_AS(pochhammer_inf({FieldElement(1), Rational(0), Rational(1)}, Rational(5)),
                    std::domain_error);
    CHECK_THROWS_AS(pochhammer_inf({FieldElement(1), Rational(1), Rational(-1)}, Rational(5)),
                    std::domain_error);
    // theta[3/5; 1](5 tau) lives on grid 40 with valuation 9/40
    QSeries t = theta_char(Rational(3, 5), Rational(1), 5, Rational(4));
    CHECK(t.grid() == 40);
    CHECK(*t.lowest_nonzero() == Rational(9, 40));
}

}  // TEST_SUITE
