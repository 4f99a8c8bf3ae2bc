#include "doctest.h"

#include "quintic/products.hpp"
#include "quintic/quintic_theta.hpp"

using namespace quintic;

TEST_SUITE("quintic") {

TEST_CASE("valuations and leading coefficients") {
    Rational M(20);
    QSeries A = theta_A(M), B = theta_B(M), C = theta_C(M), D = theta_D(M);
    CHECK(*A.lowest_nonzero() == Rational(1, 5));
    CHECK(A.leading_coeff() == FieldElement(1));
    CHECK(*B.lowest_nonzero() == Rational(0));
    CHECK(B.leading_coeff() == FieldElement(1));
    CHECK(*C.lowest_nonzero() == Rational(0));
    CHECK(*D.lowest_nonzero() == Rational(0));
    CHECK(C.grid() == 1);
    CHECK(D.grid() == 1);
}

TEST_CASE("sum form = product form = primary form") {
    Rational M(100);
    for (Theta t : {Theta::A, Theta::B, Theta::C, Theta::D}) {
        QSeries s = theta_series(t, SeriesForm::sum, M);
        QSeries p = theta_series(t, SeriesForm::product, M);
        QSeries r = theta_series(t, SeriesForm::primary, M);
        CHECK(QSeries::agree_to_order(s, p, M));
        CHECK(QSeries::agree_to_order(p, r, M));
    }
}

TEST_CASE("quintic relation C^5 = B^5 - alpha^5 A^5, D^5 = B^5 - beta^5 A^5") {
    Rational M(100);
    QSeries A5 = theta_A(M).pow_int(5).coarsened();
    QSeries B5 = theta_B(M).pow_int(5).coarsened();
    FieldElement a5 = field_constant("alpha").pow(5), b5 = field_constant("beta").pow(5);
    CHECK(QSeries::agree_to_order(theta_C(M).pow_int(5), B5 - A5 * a5, M));
    CHECK(QSeries::agree_to_order(theta_D(M).pow_int(5), B5 - A5 * b5, M));
}

TEST_CASE("telescoping product of the alpha/beta quadratics") {
    // prod (1 + alpha q^n + q^2n)(1 + beta q^n + q^2n) = (q^5;q^5)/(q;q)
    Rational M(80);
    QSeries p = QSeries::one(80);
    for (int k : {1, -1, 3, -3}) p = p * pochhammer_inf({-exp_pi_i(Rational(k, 5)), 1, 1}, M);
    QSeries rhs = pochhammer_inf(5, 5, M) * pochhammer_inf(1, 1, M).inverted();
    CHECK(QSeries::agree_to_order(p, rhs, M));
}

TEST_CASE("Rogers-Ramanujan functions") {
    Rational M(60);
    QSeries G = rogers_ramanujan(RR::G, SeriesForm::product, M);
    QSeries H = rogers_ramanujan(RR::H, SeriesForm::product, M);
    CHECK(QSeries::agree_to_order(G, rogers_ramanujan(RR::G, SeriesForm::sum, M), M));
    CHECK(QSeries::agree_to_order(H, rogers_ramanujan(RR::H, SeriesForm::sum, M), M));
    long gexp[] = {1, 1, 1, 1, 2, 2, 3};
    for (long n = 0; n < 7; ++n) CHECK(G.coeff_at(Rational(n)) == FieldElement(gexp[n]));
    // G (q;q)^(2/5) = B and q^(1/5) H (q;q)^(2/5) = A
    QSeries e25 = eta_power(2, 5, 1, M);
    CHECK(QSeries::agree_to_order(G * e25, theta_B(M), M));
    CHECK(QSeries::agree_to_order(QSeries::monomial(FieldElement(1), 1, 5, 400) * H * e25,
                                  theta_A(M), M));
}

TEST_CASE("continued fraction R = A/B") {
    Rational M(60);
    QSeries R = rr_continued_fraction(M);
    CHECK(*R.lowest_nonzero() == Rational(1, 5));
    CHECK(R.leading_coeff() == FieldElement(1));
    CHECK(QSeries::agree_to_order(R * theta_B(M), theta_A(M), M));

    // Ramanujan: 1/R(q^5) - 1 - R(q^5) = (q;q) / (q (q^25;q^25))
    Rational M2(40);
    QSeries R5 = rr_continued_fraction(Rational(M2 / 5) + 1).subst_power(5).truncated(M2);
    QSeries lhs = R5.inverted() - QSeries::one(40) - R5;
    QSeries rhs = pochhammer_inf(1, 1, M2) *
                  (QSeries::monomial(FieldElement(1), 1, 1, 60) * pochhammer_inf(25, 25, M2))
                      .inverted();
    CHECK(QSeries::agree_to_order(lhs, rhs, M2 - 2));
}

}  // TEST_SUITE
