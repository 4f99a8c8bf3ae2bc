#include "doctest.h"

#include <random>

#include "quintic/qseries.hpp"

using namespace quintic;

namespace {

std::mt19937 rng(424242);

QSeries random_series(long terms, int grid = 1, long val = 0) {
    std::uniform_int_distribution<int> num(-6, 6);
    std::vector<FieldElement> c(static_cast<size_t>(terms));
    for (auto& x : c) x = FieldElement(num(rng));
    return QSeries::make(grid, val, std::move(c));
}

QSeries random_unit(long terms, int grid = 1) {
    QSeries f = random_series(terms, grid);
    std::vector<FieldElement> c(static_cast<size_t>(terms));
    c[0] = FieldElement(1);
    std::uniform_int_distribution<int> num(-6, 6);
    for (size_t j = 1; j < c.size(); ++j) c[j] = FieldElement(num(rng));
    return QSeries::make(grid, 0, std::move(c));
}

}  // namespace

TEST_SUITE("qseries") {

TEST_CASE("basic arithmetic") {
    QSeries one_p_q = QSeries::make(1, 0, {FieldElement(1), FieldElement(1)});
    QSeries one_m_q = QSeries::make(1, 0, {FieldElement(1), FieldElement(-1)});
    QSeries prod = one_p_q * one_m_q;
    CHECK(prod.coeff_at(Rational(0)) == FieldElement(1));
    CHECK(prod.coeff_at(Rational(1)) == FieldElement(0));
    CHECK(prod.known_order() == Rational(2));  // 1 - q^2 truncates before q^2

    QSeries q15 = QSeries::monomial(FieldElement(1), 1, 5, 10);
    QSeries q25 = q15 * q15;
    CHECK(q25.grid() == 5);
    CHECK(*q25.lowest_nonzero() == Rational(2, 5));

    QSeries f = random_series(20);
    CHECK(QSeries::agree_to_order(f + QSeries::zero(1, 40), f, f.known_order()));
}

TEST_CASE("inversion: geometric series and involution") {
    QSeries one_m_q = QSeries::make(1, 0, {FieldElement(1), FieldElement(-1), FieldElement(0),
                                           FieldElement(0), FieldElement(0)});
    QSeries g = one_m_q.inverted();
    for (long n = 0; n < 5; ++n) CHECK(g.coeff_at(Rational(n)) == FieldElement(1));

    for (int it = 0; it < 20; ++it) {
        QSeries f = random_unit(25);
        QSeries h = f.inverted().inverted();
        CHECK(QSeries::agree_to_order(f, h, Rational(25)));
        CHECK(QSeries::agree_to_order(f * f.inverted(), QSeries::one(25), Rational(25)));
    }
    CHECK_THROWS_AS(QSeries::zero(1, 5).inverted(), std::domain_error);
}

TEST_CASE("nth_root round trips") {
    for (int it = 0; it < 25; ++it) {
        QSeries f = random_unit(30);
        QSeries p = f.pow_int(5);
        CHECK(QSeries::agree_to_order(p.nth_root(5), f, Rational(30)));
        QSeries r = f.nth_root(3);
        CHECK(QSeries::agree_to_order(r.pow_int(3), f, Rational(30)));
    }
    // binomial series (1 - 5q)^(1/5) = 1 - q - 2q^2 - ...
    QSeries b = QSeries::make(1, 0, {FieldElement(1), FieldElement(-5), FieldElement(0),
                                     FieldElement(0)});
    QSeries rb = b.nth_root(5);
    CHECK(rb.coeff_at(Rational(1)) == FieldElement(-1));
    CHECK(rb.coeff_at(Rational(2)) == FieldElement(-2));
    // valuation handling: (q^5 u)^(1/5) = q u^(1/5)
    QSeries f = random_unit(20);
    QSeries shifted = QSeries::monomial(FieldElement(1), 5, 1, 20) * f;
    CHECK(*shifted.nth_root(5).lowest_nonzero() == Rational(1));
    // indivisible valuation on the grid errors out
    QSeries q15 = QSeries::monomial(FieldElement(1), 1, 5, 10);
    CHECK_THROWS_AS(q15.nth_root(2), std::domain_error);
    CHECK(*q15.on_grid(10).nth_root(2).lowest_nonzero() == Rational(1, 10));
}

TEST_CASE("pow_rational composes") {
    for (int it = 0; it < 10; ++it) {
        QSeries f = random_unit(25);
        QSeries a = f.pow_rational(Rational(2, 5));
        QSeries b = f.pow_rational(Rational(3, 5));
        CHECK(QSeries::agree_to_order(a * b, f, Rational(25)));
        CHECK(QSeries::agree_to_order(a.pow_int(5), f.pow_int(2), Rational(25)));
    }
}

TEST_CASE("theta derivative is a derivation") {
    QSeries m = QSeries::monomial(FieldElement(1), 3, 5, 10);
    CHECK(m.theta_deriv().coeff_at(Rational(3, 5)) == FieldElement(Rational(3, 5)));
    CHECK(QSeries::one(10).theta_deriv().known_zero());
    for (int it = 0; it < 20; ++it) {
        QSeries f = random_series(20), g = random_series(20);
        QSeries lhs = (f * g).theta_deriv();
        QSeries rhs = f * g.theta_deriv() + g * f.theta_deriv();
        CHECK(QSeries::agree_to_order(lhs, rhs, Rational(20)));
    }
}

TEST_CASE("substitution and regridding") {
    QSeries f = QSeries::make(1, 0, {FieldElement(1), FieldElement(1)});
    QSeries f5 = f.subst_power(5);
    CHECK(f5.coeff_at(Rational(5)) == FieldElement(1));
    CHECK(f5.coeff_at(Rational(3)) == FieldElement(0));

    QSeries g = random_series(12);
    CHECK(QSeries::agree_to_order(g.subst_power(5).subst_power(5), g.subst_power(25),
                                  Rational(12 * 25)));

    QSeries pf = f.pi_refine(5);
    CHECK(pf.grid() == 5);
    CHECK(pf.coeff_at(Rational(1, 5)) == FieldElement(1));
    // operator algebra: refining the grid then taking the residue-0
    // multisection is exactly pi, and substituting q^5 undoes pi.
    QSeries h = random_series(15);
    CHECK(QSeries::agree_to_order(h.on_grid(5).multisect(5, 0), h.pi_refine(5), Rational(3)));
    CHECK(QSeries::agree_to_order(h.pi_refine(5).subst_power(5), h, Rational(15)));
}

TEST_CASE("multisection") {
    // f = sum n q^n, pick n = 2 mod 3
    std::vector<FieldElement> c;
    for (long n = 0; n < 20; ++n) c.emplace_back(n);
    QSeries f = QSeries::make(1, 0, std::move(c));
    QSeries m = f.multisect(3, 2);
    for (long n = 0; n < 6; ++n) CHECK(m.coeff_at(Rational(n)) == FieldElement(3 * n + 2));

    // Simpson-Waring: sum_m q^m (Omega_{5,m} f)(q^5) = f
    for (int it = 0; it < 50; ++it) {
        QSeries g = random_series(60);
        QSeries acc = QSeries::zero(1, 60);
        for (long mm = 0; mm < 5; ++mm)
            acc = acc + QSeries::monomial(FieldElement(1), mm, 1, 60) *
                            g.multisect(5, mm).subst_power(5);
        CHECK(QSeries::agree_to_order(acc, g, Rational(56)));
    }
}

TEST_CASE("twist and multisection via character sums") {
    for (int it = 0; it < 10; ++it) {
        QSeries f = random_series(30);
        for (long m = 0; m < 5; ++m) {
            QSeries acc = QSeries::zero(1, 30);
            for (long j = 0; j < 5; ++j)
                acc = acc + f.twist(j) * zeta_pow(-4 * j * m);  // zeta5^(-jm)
            acc = acc * FieldElement(Rational(1, 5));
            // acc keeps only exponents = m mod 5
            CHECK(QSeries::agree_to_order(acc.multisect(5, m), f.multisect(5, m), Rational(5)));
            for (long r = 0; r < 5; ++r) {
                if (r == m) continue;
                CHECK(acc.multisect(5, r).truncated(Rational(4)).known_zero());
            }
        }
    }
    CHECK_THROWS_AS(QSeries::monomial(FieldElement(1), 1, 5, 4).twist(1), std::domain_error);
}

TEST_CASE("mul commutative and associative") {
    for (int it = 0; it < 30; ++it) {
        QSeries a = random_series(18), b = random_series(18), c = random_series(18);
        CHECK(QSeries::agree_to_order(a * b, b * a, (a * b).known_order()));
        QSeries l = (a * b) * c, r = a * (b * c);
        CHECK(QSeries::agree_to_order(l, r, l.known_order()));
    }
}

TEST_CASE("unknown tails are never compared") {
    QSeries f = QSeries::one(5);
    QSeries g = QSeries::one(10);
    CHECK_THROWS_AS(QSeries::first_difference(f, g, Rational(10)), std::runtime_error);
    CHECK(QSeries::agree_to_order(f, g, Rational(5)));
    CHECK_THROWS_AS(f.coeff_at(Rational(7)), std::out_of_range);
}

TEST_CASE("coarsening keeps content") {
    QSeries f = random_series(12).subst_power(5);  // only multiples of 5
    QSeries g = f.on_grid(10);
    QSeries c = g.coarsened();
    CHECK(c.grid() == 1);
    CHECK(QSeries::agree_to_order(c, f, Rational(50)));
}

}  // TEST_SUITE
