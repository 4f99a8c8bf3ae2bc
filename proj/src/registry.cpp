#include <functional>
#include <stdexcept>
#include <utility>

#include "quintic/eisenstein.hpp"
#include "quintic/pentops.hpp"
#include "quintic/products.hpp"
#include "quintic/quintic_theta.hpp"

namespace quintic {

namespace {

Rational ceil_rat(const Rational& x) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return Rational(q);
}

// exact monomial q^(num/D), known well past M
QSeries mono(long num, int D, const Rational& M) {
    Rational kb = ceil_rat(M * D) + 1;
    return QSeries::monomial(FieldElement(1), num, D, kb.get_num().get_si() - num);
}

IdentityReport merge(IdentityReport a, const IdentityReport& b) {
    a.pass = a.pass && b.pass;
    if (b.first_fail && (!a.first_fail || *b.first_fail < *a.first_fail)) a.first_fail = b.first_fail;
    if (!b.notes.empty()) a.notes += (a.notes.empty() ? "" : "; ") + b.notes;
    return a;
}

IdentityReport cmp(const QSeries& lhs, const QSeries& rhs, const Rational& order) {
    return compare_series("", "", lhs, rhs, order);
}

QSeries hompoly_rat(std::vector<long> c, const Rational& order) {
    HomPoly p;
    for (long v : c) p.c.push_back(FieldElement(v));
    return hompoly_series(p, order);
}

// A^i B^j on the q^(1/5) grid
QSeries ab_pow(long i, long j, const Rational& order) {
    QSeries s = QSeries::one(Rational(ceil_rat(order * 5) + 1).get_num().get_si(), 5);
    if (i) s = theta_A(order).pow_int(i);
    if (j) s = s * theta_B(order).pow_int(j);
    return s.truncated(order);
}

// sum over n == m (mod 5), n >= 1, of (sum_{d|n} chi(d) d^w) q^(n/5); grid 5
QSeries sigma_class_series(long m, int weight, int chi_label, const Rational& order) {
    long kb = Rational(ceil_rat(order * 5) + 1).get_num().get_si();
    std::vector<FieldElement> s(static_cast<size_t>(kb));
    for (long d = 1; d < kb; ++d) {
        FieldElement cv = chi_label ? chi5(chi_label, d) : FieldElement(1);
        if (cv.is_zero()) continue;
        Int dw = 1;
        for (int t = 0; t < weight; ++t) dw *= d;
        FieldElement term = cv * FieldElement(Rational(dw));
        for (long n = d; n < kb; n += d)
            if (n % 5 == m) s[static_cast<size_t>(n)] += term;
    }
    std::vector<FieldElement> coeffs(s.begin() + m, s.end());
    return QSeries::make(5, m, std::move(coeffs));
}

// Prod_{n>=1} 1/(1 + c q^(n*step) + q^(2n*step)) via the cyclotomic split
// 1 + 2cos(k pi/5) x + x^2 = (1 + zeta x)(1 + conj(zeta) x)
QSeries trinomial_product_inv(const FieldElement& zeta, const Rational& step, const Rational& order) {
    QSeries p = pochhammer_inf({-zeta, step, step}, order) *
                pochhammer_inf({-zeta.conj(), step, step}, order);
    return p.inverted();
}

// the four series t^(-1/2) - r t^(1/2) = rhs (square-root level)
IdentityReport ramanujan_sqrt(const FieldElement& r, const FieldElement& zeta,
                              const Rational& order) {
    QSeries t = rr_continued_fraction(order + 1).on_grid(10);
    QSeries lhs = t.pow_rational(Rational(-1, 2)) - t.pow_rational(Rational(1, 2)) * r;
    QSeries unit = pochhammer_inf(1, 1, order + 1) * pochhammer_inf(5, 5, order + 1).inverted();
    QSeries rhs = mono(-1, 10, order + 1) * unit.pow_unit(Rational(1, 2)) *
                  trinomial_product_inv(zeta, Rational(1, 5), order + 1);
    return cmp(lhs, rhs, order);
}

// t^(-5/2) - r^5 t^(5/2) = rhs (fifth-power level)
IdentityReport ramanujan_fifth(const FieldElement& r, const FieldElement& zeta,
                               const Rational& order) {
    QSeries t = rr_continued_fraction(order + 1).on_grid(10);
    QSeries lhs = t.pow_rational(Rational(-5, 2)) - t.pow_rational(Rational(5, 2)) * r.pow(5);
    QSeries unit = pochhammer_inf(1, 1, order + 1) * pochhammer_inf(5, 5, order + 1).inverted();
    QSeries rhs = mono(-5, 10, order + 1) * unit.pow_unit(Rational(1, 2)) *
                  trinomial_product_inv(zeta, 1, order + 1).pow_int(5);
    return cmp(lhs, rhs, order);
}

// dissection entries: each class m has a list of (coefficient, A-exponent i, B-exponent j)
struct Term {
    FieldElement c;
    long i, j;
};
IdentityReport dissection(int weight, int chi_label, const std::vector<std::vector<Term>>& classes,
                          const Rational& order) {
    IdentityReport rep;
    rep.pass = true;
    for (size_t idx = 0; idx < classes.size(); ++idx) {
        long m = static_cast<long>(idx) + 1;
        QSeries lhs = sigma_class_series(m, weight, chi_label, order + 1);
        QSeries rhs = QSeries::zero(5, Rational(ceil_rat(order * 5) + 5).get_num().get_si());
        for (const Term& t : classes[idx]) rhs = rhs + ab_pow(t.i, t.j, order + 1) * t.c;
        rep = merge(rep, cmp(lhs, rhs, order));
    }
    return rep;
}

struct Entry {
    std::string name;
    std::string anchor;
    Rational default_order;
    std::function<IdentityReport(const Rational&)> run;
};

FieldElement fc(const char* n) { return field_constant(n); }

std::vector<Entry> build_table() {
    std::vector<Entry> t;
    auto add = [&t](std::string name, std::string anchor, long order,
                    std::function<IdentityReport(const Rational&)> run) {
        t.push_back({std::move(name), std::move(anchor), Rational(order), std::move(run)});
    };

    // ---- the four quintic theta functions -------------------------------
    add("thm1.1-quintic", "fifth powers of C and D equal B^5 minus golden-ratio fifth powers times A^5", 100,
        [](const Rational& M) {
            QSeries a5 = theta_A5(M), b5 = theta_B5(M);
            IdentityReport r = cmp(theta_C(M).pow_int(5), b5 - a5 * fc("alpha").pow(5), M);
            return merge(r, cmp(theta_D(M).pow_int(5), b5 - a5 * fc("beta").pow(5), M));
        });
    add("thm1.1-linear", "product forms of C and D equal the linear combinations of A(q^5), B(q^5)", 100,
        [](const Rational& M) {
            IdentityReport r = cmp(theta_series(Theta::C, SeriesForm::product, M), theta_C(M), M);
            return merge(r, cmp(theta_series(Theta::D, SeriesForm::product, M), theta_D(M), M));
        });
    add("thm1.1-sums", "bilateral theta-sum forms of A, B, C, D match the product forms", 60,
        [](const Rational& M) {
            IdentityReport r = cmp(theta_series(Theta::A, SeriesForm::sum, M), theta_A(M), M);
            r = merge(r, cmp(theta_series(Theta::B, SeriesForm::sum, M), theta_B(M), M));
            r = merge(r, cmp(theta_series(Theta::C, SeriesForm::sum, M), theta_C(M), M));
            return merge(r, cmp(theta_series(Theta::D, SeriesForm::sum, M), theta_D(M), M));
        });

    // ---- Ramanujan's four continued-fraction identities -----------------
    add("ramanujan-sqrt-alpha", "1/sqrt(t) - alpha sqrt(t) as an eta quotient times a trinomial product", 50,
        [](const Rational& M) { return ramanujan_sqrt(fc("alpha"), zeta_pow(2), M); });
    add("ramanujan-sqrt-beta", "1/sqrt(t) - beta sqrt(t) as an eta quotient times a trinomial product", 50,
        [](const Rational& M) { return ramanujan_sqrt(fc("beta"), zeta_pow(6), M); });
    add("ramanujan-fifth-alpha", "fifth powers: 1/t^(5/2) - alpha^5 t^(5/2) product form", 50,
        [](const Rational& M) { return ramanujan_fifth(fc("alpha"), zeta_pow(2), M); });
    add("ramanujan-fifth-beta", "fifth powers: 1/t^(5/2) - beta^5 t^(5/2) product form", 50,
        [](const Rational& M) { return ramanujan_fifth(fc("beta"), zeta_pow(6), M); });

    // ---- classical theta and Rogers-Ramanujan material ------------------
    add("jacobi-quartic", "quartic relation among the three null theta constants", 100,
        [](const Rational& M) {
            auto [t2, t3, t4] = jacobi_null_thetas(M);
            return cmp(t3.pow_int(4), t4.pow_int(4) + t2.pow_int(4), M);
        });
    add("rr-g-forms", "first Rogers-Ramanujan function: sum form equals product form", 80,
        [](const Rational& M) {
            return cmp(rogers_ramanujan(RR::G, SeriesForm::sum, M),
                       rogers_ramanujan(RR::G, SeriesForm::product, M), M);
        });
    add("rr-h-forms", "second Rogers-Ramanujan function: sum form equals product form", 80,
        [](const Rational& M) {
            return cmp(rogers_ramanujan(RR::H, SeriesForm::sum, M),
                       rogers_ramanujan(RR::H, SeriesForm::product, M), M);
        });
    add("rr-continued-fraction", "the continued fraction t equals A/B", 80,
        [](const Rational& M) {
            return cmp(rr_continued_fraction(M), theta_A(M) * theta_B(M).inverted(), M);
        });
    add("famous-formula", "1/t(q^5) - 1 - t(q^5) as an eta quotient", 80, [](const Rational& M) {
        Rational m5 = ceil_rat(M / 5) + 1;
        QSeries R5 = rr_continued_fraction(m5).subst_power(5);
        QSeries one = QSeries::one(Rational(ceil_rat(M) + 2).get_num().get_si(), 1);
        QSeries lhs = R5.inverted() - one - R5;
        QSeries rhs = pochhammer_inf(1, 1, M + 1) * mono(-1, 1, M + 1) *
                      pochhammer_inf(25, 25, M + 1).inverted();
        return cmp(lhs, rhs, M);
    });

    // ---- Eisenstein / Lambert parameterizations -------------------------
    add("eis-e1-chi4", "weight-1 Eisenstein series for the first odd character equals B^5 + i A^5", 100,
        [](const Rational& M) {
            return cmp(eisenstein_level5(1, 4, M), theta_B5(M) + theta_A5(M) * fc("i"), M);
        });
    add("eis-e1-chi2", "weight-1 Eisenstein series for the other odd character equals B^5 - i A^5", 100,
        [](const Rational& M) {
            return cmp(eisenstein_level5(1, 2, M), theta_B5(M) - theta_A5(M) * fc("i"), M);
        });
    add("eis-e2-chi1", "weight-2 principal-character Eisenstein series equals A^10 + B^10", 100,
        [](const Rational& M) { return cmp(eisenstein_level5(2, 1, M), hompoly_rat({1, 0, 1}, M), M); });
    add("eis-e2-chi3", "weight-2 quadratic-character Eisenstein series equals B^10 - 11 A^5 B^5 - A^10", 100,
        [](const Rational& M) {
            return cmp(eisenstein_level5(2, 3, M), hompoly_rat({1, -11, -1}, M), M);
        });
    add("eis-e2-chi3-eta", "weight-2 quadratic-character Eisenstein series as the eta quotient (q;q)^5/(q^5;q^5)", 100,
        [](const Rational& M) {
            QSeries rhs = pochhammer_inf(1, 1, M).pow_int(5) * pochhammer_inf(5, 5, M).inverted();
            return cmp(eisenstein_level5(2, 3, M), rhs, M);
        });
    add("lambert-l2-chi3", "weight-2 quadratic-character Lambert series equals A^5 B^5", 100,
        [](const Rational& M) { return cmp(lambert_L(2, 3, M), hompoly_rat({0, 1, 0}, M), M); });
    add("lambert-l2-chi3-eta", "weight-2 quadratic-character Lambert series as q (q^5;q^5)^5/(q;q)", 100,
        [](const Rational& M) {
            QSeries rhs = mono(1, 1, M) * pochhammer_inf(5, 5, M).pow_int(5) *
                          pochhammer_inf(1, 1, M).inverted();
            return cmp(lambert_L(2, 3, M), rhs, M);
        });
    add("lambert-l4-chi3", "weight-4 quadratic-character Lambert series equals A^5 B^15 + A^15 B^5", 80,
        [](const Rational& M) { return cmp(lambert_L(4, 3, M), hompoly_rat({0, 1, 0, 1, 0}, M), M); });
    add("lambert-l6-chi3", "weight-6 quadratic-character Lambert series as a degree-6 form in A^5, B^5", 60,
        [](const Rational& M) {
            return cmp(lambert_L(6, 3, M), hompoly_rat({0, 1, 18, 14, -18, 1, 0}, M), M);
        });
    add("lambert-l2-chi1", "weight-2 principal-character Lambert series from A^10 + B^10 and E2(q^5)", 80,
        [](const Rational& M) {
            Rational m5 = ceil_rat((M + 1) / 5) + 1;
            QSeries e25 = eisenstein_level1(2, m5).subst_power(5);
            QSeries rhs = (hompoly_rat({1, 0, 1}, M + 1) - e25) * FieldElement(Rational(1, 6));
            return cmp(lambert_L(2, 1, M + 1), rhs, M);
        });
    add("lambert-l4-chi1", "weight-4 principal-character Lambert series as a degree-4 form in A^5, B^5", 80,
        [](const Rational& M) { return cmp(lambert_L(4, 1, M), hompoly_rat({0, 1, 2, -1, 0}, M), M); });
    add("lambert-l6-chi1", "weight-6 principal-character Lambert series as a degree-6 form in A^5, B^5", 60,
        [](const Rational& M) {
            return cmp(lambert_L(6, 1, M), hompoly_rat({0, 1, 20, 0, 20, -1, 0}, M), M);
        });

    // ---- E2, E4, E6, Delta parameterizations ----------------------------
    add("e2-log-derivative-a", "E2 from A^10, B^10 and the logarithmic derivative of A", 60,
        [](const Rational& M) {
            QSeries lhs = eisenstein_level1(2, M + 1);
            QSeries A = theta_A(M + 1);
            QSeries rhs = hompoly_rat({-11, 66, 1}, M + 1) +
                          (A.theta_deriv() * A.inverted()) * FieldElement(60);
            return cmp(lhs, rhs, M);
        });
    add("e2-log-derivative-b", "E2 from A^10, B^10 and the logarithmic derivative of B", 60,
        [](const Rational& M) {
            QSeries lhs = eisenstein_level1(2, M + 1);
            QSeries B = theta_B(M + 1);
            QSeries rhs = hompoly_rat({1, -66, -11}, M + 1) +
                          (B.theta_deriv() * B.inverted()) * FieldElement(60);
            return cmp(lhs, rhs, M);
        });
    add("e2-5q5-combination", "5 E2(q^5) - E2(q) equals 4 A^10 + 4 B^10", 100, [](const Rational& M) {
        Rational m5 = ceil_rat((M + 1) / 5) + 1;
        QSeries lhs = eisenstein_level1(2, m5).subst_power(5) * FieldElement(5) -
                      eisenstein_level1(2, M + 1);
        return cmp(lhs, hompoly_rat({4, 0, 4}, M + 1), M);
    });
    add("e4-hompoly", "E4 as a degree-4 form in A^5, B^5", 100, [](const Rational& M) {
        return cmp(eisenstein_level1(4, M), hompoly_rat({1, 228, 494, -228, 1}, M), M);
    });
    add("e6-hompoly", "E6 as a degree-6 form in A^5, B^5", 80, [](const Rational& M) {
        return cmp(eisenstein_level1(6, M), hompoly_rat({1, -522, -10005, 0, -10005, 522, 1}, M), M);
    });
    add("e4-q5-hompoly", "E4(q^5) as a degree-4 form in A^5, B^5", 100, [](const Rational& M) {
        Rational m5 = ceil_rat(M / 5) + 1;
        return cmp(eisenstein_level1(4, m5).subst_power(5), hompoly_rat({1, -12, 14, 12, 1}, M), M);
    });
    add("e6-q5-hompoly", "E6(q^5) as a degree-6 form in A^5, B^5", 80, [](const Rational& M) {
        Rational m5 = ceil_rat(M / 5) + 1;
        return cmp(eisenstein_level1(6, m5).subst_power(5),
                   hompoly_rat({1, -18, 75, 0, 75, 18, 1}, M), M);
    });
    add("delta-hompoly", "the discriminant q (q;q)^24 equals A^5 B^5 (B^10 - 11 A^5 B^5 - A^10)^5", 80,
        [](const Rational& M) {
            QSeries lhs = mono(1, 1, M) * pochhammer_inf(1, 1, M).pow_int(24);
            QSeries rhs = hompoly_rat({0, 1, 0}, M) * hompoly_rat({1, -11, -1}, M).pow_int(5);
            return cmp(lhs, rhs, M);
        });
    add("delta-q5", "q^5 (q^5;q^5)^24 equals A^25 B^25 (B^10 - 11 A^5 B^5 - A^10)", 80,
        [](const Rational& M) {
            Rational m5 = ceil_rat(M / 5) + 1;
            QSeries lhs = mono(5, 1, M) * pochhammer_inf(5, 5, M).pow_int(24);
            QSeries rhs = hompoly_rat({0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0}, M) *
                          hompoly_rat({1, -11, -1}, M);
            return cmp(lhs, rhs, M);
        });
    add("delta-q15", "q^(1/5) (q^(1/5);q^(1/5))^24 factors through A, B on the refined grid", 16,
        [](const Rational& M) {
            QSeries lhs = mono(1, 5, M) *
                          pochhammer_inf({FieldElement(1), Rational(1, 5), Rational(1, 5)}, M)
                              .pow_int(24);
            QSeries A = theta_A(M), B = theta_B(M);
            QSeries rhs = A * B * hompoly_rat({1, -11, -1}, M).on_grid(5) *
                          (B.pow_int(2) - A * B - A.pow_int(2)).pow_int(24);
            return cmp(lhs, rhs, M);
        });
    add("e2-chi3-fifth-power", "the weight-2 quadratic-character series at q^(1/5) equals (B^2 - AB - A^2)^5", 20,
        [](const Rational& M) {
            QSeries lhs = eisenstein_level5(2, 3, M * 5).pi_refine(5);
            QSeries A = theta_A(M), B = theta_B(M);
            return cmp(lhs, (B.pow_int(2) - A * B - A.pow_int(2)).pow_int(5), M);
        });
    add("l2-chi3-fifth", "the weight-2 quadratic-character Lambert series at q^(1/5) as a mixed form in A, B", 20,
        [](const Rational& M) {
            QSeries lhs = lambert_L(2, 3, M * 5).pi_refine(5);
            MixedPoly p;
            for (long v : {0L, 1L, 1L, 2L, 3L, 5L, -3L, 2L, -1L, 1L, 0L})
                p.b.push_back(FieldElement(v));
            return cmp(lhs, mixedpoly_series(p, M), M);
        });

    // ---- divisor-sum dissections ----------------------------------------
    add("weight1-dissection", "residue classes of the twisted divisor-sum series match monomials in A, B", 40,
        [](const Rational& M) {
            FieldElement i = fc("i"), one(1);
            return dissection(0, 4,
                              {{{one, 1, 4}},
                               {{one - i, 2, 3}},
                               {{one + i, 3, 2}},
                               {{FieldElement(0) - i, 4, 1}}},
                              M);
        });
    add("sigma1-dissection", "residue classes of the divisor-sum series as binomials in A, B", 40,
        [](const Rational& M) {
            FieldElement c1(1);
            return dissection(1, 0,
                              {{{c1, 1, 9}, {FieldElement(7), 6, 4}},
                               {{FieldElement(3), 2, 8}, {FieldElement(-4), 7, 3}},
                               {{FieldElement(4), 3, 7}, {FieldElement(3), 8, 2}},
                               {{FieldElement(7), 4, 6}, {FieldElement(-1), 9, 1}}},
                              M);
        });
    add("chi3-sigma1-dissection", "residue classes of the quadratically twisted divisor-sum series", 40,
        [](const Rational& M) {
            return dissection(1, 3,
                              {{{FieldElement(1), 1, 9}, {FieldElement(-3), 6, 4}},
                               {{FieldElement(-1), 2, 8}, {FieldElement(-2), 7, 3}},
                               {{FieldElement(-2), 3, 7}, {FieldElement(1), 8, 2}},
                               {{FieldElement(3), 4, 6}, {FieldElement(1), 9, 1}}},
                              M);
        });

    // ---- quintic operators ----------------------------------------------
    add("penticate-a", "radical formula recovers A(q^5) from A and B", 60, [](const Rational& M) {
        Rational m5 = ceil_rat(M / 5) + 1;
        auto [C, D] = penticate(theta_A(M), theta_B(M), M);
        (void)D;
        return cmp(C, theta_A(m5).subst_power(5), M);
    });
    add("penticate-b", "radical formula recovers B(q^5) from A and B", 60, [](const Rational& M) {
        Rational m5 = ceil_rat(M / 5) + 1;
        auto [C, D] = penticate(theta_A(M), theta_B(M), M);
        (void)C;
        return cmp(D, theta_B(m5).subst_power(5), M);
    });
    add("pentamidiate-e4", "matrix route for E4 at q^(1/5) equals the direct series route", 60,
        [](const Rational& M) {
            HomPoly p;
            for (long v : {1L, 228L, 494L, -228L, 1L}) p.c.push_back(FieldElement(v));
            return pentamidiate_series_check(p, M);
        });
    add("change-of-sign-norm", "product of C over the five twisted arguments equals B^5(q^5) - alpha^5 A^5(q^5)", 40,
        [](const Rational& M) {
            Rational m5 = ceil_rat(M / 5) + 1;
            QSeries prod = QSeries::one(Rational(ceil_rat(M) + 2).get_num().get_si(), 1);
            for (long k = 0; k < 5; ++k) prod = (prod * change_of_sign(k, M).first).truncated(M);
            QSeries rhs = theta_B5(m5).subst_power(5) -
                          theta_A5(m5).subst_power(5) * fc("alpha").pow(5);
            return cmp(prod, rhs, M);
        });
    add("change-of-sign-mean", "average of C over the five twisted arguments equals B(q^5)", 60,
        [](const Rational& M) {
            Rational m5 = ceil_rat(M / 5) + 1;
            QSeries acc = QSeries::zero(1, Rational(ceil_rat(M) + 2).get_num().get_si());
            for (long k = 0; k < 5; ++k) acc = acc + change_of_sign(k, M).first;
            return cmp(acc * FieldElement(Rational(1, 5)), theta_B(m5).subst_power(5), M);
        });

    // ---- modular equations and partition multisections ------------------
    add("watson-modular-eq", "degree-5 modular equation between the two eta quotients", 100,
        [](const Rational& M) {
            QSeries p1i = pochhammer_inf(1, 1, M).inverted();
            QSeries W = mono(1, 1, M) * pochhammer_inf(25, 25, M) * p1i;
            QSeries lhs = mono(1, 1, M) * pochhammer_inf(5, 5, M).pow_int(6) * p1i.pow_int(6);
            QSeries W2 = W * W, W3 = W2 * W;
            QSeries rhs = W3 * W2 * FieldElement(25) + W3 * W * FieldElement(25) +
                          W3 * FieldElement(15) + W2 * FieldElement(5) + W;
            return cmp(lhs, rhs, M);
        });
    add("eta-quotient-chain", "A^5 B^5 over the quadratic-character form equals q (q^5;q^5)^6/(q;q)^6", 100,
        [](const Rational& M) {
            QSeries lhs = hompoly_rat({0, 1, 0}, M) * hompoly_rat({1, -11, -1}, M).inverted();
            QSeries rhs = mono(1, 1, M) * pochhammer_inf(5, 5, M).pow_int(6) *
                          pochhammer_inf(1, 1, M).inverted().pow_int(6);
            return cmp(lhs, rhs, M);
        });
    add("ramanujan-5n4", "partition counts in the class 4 mod 5 generate 5 q (q^5;q^5)^5/(q;q)^6", 80,
        [](const Rational& M) {
            QSeries P = pochhammer_inf(1, 1, M * 5 + 5).inverted();
            QSeries lhs = mono(1, 1, M) * P.multisect(5, 4).truncated(M);
            QSeries rhs = mono(1, 1, M) * pochhammer_inf(5, 5, M).pow_int(5) *
                          pochhammer_inf(1, 1, M).inverted().pow_int(6) * FieldElement(5);
            return cmp(lhs, rhs, M);
        });
    add("five-core", "5-core counts in the class 4 mod 5 generate 5 q (q^5;q^5)^5/(q;q)", 80,
        [](const Rational& M) {
            QSeries gen = pochhammer_inf(5, 5, M * 5 + 5).pow_int(5) *
                          pochhammer_inf(1, 1, M * 5 + 5).inverted();
            QSeries lhs = mono(1, 1, M) * gen.multisect(5, 4).truncated(M);
            QSeries rhs = mono(1, 1, M) * pochhammer_inf(5, 5, M).pow_int(5) *
                          pochhammer_inf(1, 1, M).inverted() * FieldElement(5);
            return cmp(lhs, rhs, M);
        });

    return t;
}

const std::vector<Entry>& table() {
    static const std::vector<Entry> t = build_table();
    return t;
}

}  // namespace

std::vector<RegistryEntry> registry_list() {
    std::vector<RegistryEntry> out;
    for (const Entry& e : table()) out.push_back({e.name, e.anchor, e.default_order});
    return out;
}

bool registry_has(const std::string& name) {
    for (const Entry& e : table())
        if (e.name == name) return true;
    return false;
}

IdentityReport verify_registry(const std::string& name, const Rational& order) {
    for (const Entry& e : table()) {
        if (e.name != name) continue;
        Rational M = order > 0 ? order : e.default_order;
        IdentityReport r = e.run(M);
        r.name = e.name;
        r.anchor = e.anchor;
        r.order = M;
        return r;
    }
    throw std::invalid_argument("unknown identity: " + name);
}

}  // namespace quintic
