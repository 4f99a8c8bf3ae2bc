#include "doctest.h"

#include <random>

#include "quintic/field.hpp"

using namespace quintic;

namespace {

std::mt19937 rng(20260823);

FieldElement random_element(int bound = 9) {
    std::uniform_int_distribution<int> num(-bound, bound);
    std::uniform_int_distribution<int> den(1, 4);
    std::array<Rational, 8> c;
    for (auto& x : c) x = Rational(num(rng), den(rng));
    return FieldElement::from_coeffs(std::move(c));
}

}  // namespace

TEST_SUITE("field") {

TEST_CASE("basis reduction: z^8 = z^6 - z^4 + z^2 - 1") {
    FieldElement z = zeta_pow(1);
    CHECK(z.pow(8) == zeta_pow(6) - zeta_pow(4) + zeta_pow(2) - FieldElement(1));
    // direct product of two basis monomials
    CHECK(zeta_pow(4) * zeta_pow(4) == z.pow(8));
}

TEST_CASE("roots of unity land where expected") {
    FieldElement z = zeta_pow(1);
    CHECK(z.pow(20) == FieldElement(1));
    CHECK(z.pow(10) == FieldElement(-1));
    // Phi_20(z) = 0
    FieldElement phi = z.pow(8) - z.pow(6) + z.pow(4) - z.pow(2) + FieldElement(1);
    CHECK(phi.is_zero());
    CHECK(field_constant("i") == zeta_pow(5));
    CHECK(field_constant("i") * field_constant("i") == FieldElement(-1));
    CHECK(field_constant("zeta5") == zeta_pow(4));
    CHECK(field_constant("zeta5").pow(5) == FieldElement(1));
    CHECK(field_constant("zeta10").pow(10) == FieldElement(1));
    CHECK(field_constant("zeta10").pow(5) == FieldElement(-1));
}

TEST_CASE("sqrt5, alpha, beta algebra") {
    FieldElement s = field_constant("sqrt5");
    FieldElement a = field_constant("alpha");
    FieldElement b = field_constant("beta");
    CHECK(s * s == FieldElement(5));
    CHECK(a * a == a + FieldElement(1));  // golden ratio
    CHECK(b * b == b + FieldElement(1));
    CHECK(a * b == FieldElement(-1));
    CHECK(a + b == FieldElement(1));
    // Lucas/Fibonacci oracle via binomial expansion:
    // (1+s)^5 - (1-s)^5 = 2(5s + 10 s^3 + s^5) = 2(5s + 50s + 25s) = 160s; /2^5 = 5s
    // (1+s)^5 + (1-s)^5 = 2(1 + 10 s^2 + 5 s^4) = 2(1 + 50 + 125) = 352; /2^5 = 11
    CHECK(a.pow(5) - b.pow(5) == FieldElement(5) * s);
    CHECK(a.pow(5) + b.pow(5) == FieldElement(11));
    // 2 sin(pi/5) and 2 sin(2 pi/5) squares
    FieldElement s1 = zeta_pow(3) - zeta_pow(7);
    FieldElement s2 = zeta_pow(1) - zeta_pow(9);
    CHECK(s1 * s1 == (FieldElement(5) - s) / FieldElement(2));
    CHECK(s2 * s2 == (FieldElement(5) + s) / FieldElement(2));
}

TEST_CASE("field axioms and inverse on random elements") {
    for (int it = 0; it < 60; ++it) {
        FieldElement x = random_element(), y = random_element(), z = random_element();
        CHECK((x + y) * z == x * z + y * z);
        CHECK(x * y == y * x);
        CHECK((x * y) * z == x * (y * z));
        if (!x.is_zero()) {
            CHECK(x * x.inverse() == FieldElement(1));
            CHECK(x / x == FieldElement(1));
        }
    }
}

TEST_CASE("conjugation") {
    FieldElement z = zeta_pow(1);
    CHECK(z.conj() == zeta_pow(-1));
    for (int it = 0; it < 20; ++it) {
        FieldElement x = random_element();
        CHECK(x.conj().conj() == x);
        // norm-like product z * conj(z) is fixed by conjugation
        FieldElement n = x * x.conj();
        CHECK(n.conj() == n);
    }
    CHECK(field_constant("sqrt5").conj() == field_constant("sqrt5"));
    CHECK(field_constant("i").conj() == -field_constant("i"));
}

TEST_CASE("rational detection and errors") {
    CHECK(FieldElement(Rational(3, 7)).is_rational());
    CHECK(!field_constant("i").is_rational());
    CHECK_THROWS_AS(field_constant("i").as_rational(), std::domain_error);
    CHECK_THROWS_AS(FieldElement(0).inverse(), std::domain_error);
    CHECK_THROWS_AS(field_constant("nope"), std::invalid_argument);
}

TEST_CASE("nth_root_in_field") {
    auto r1 = nth_root_in_field(FieldElement(1), 5);
    REQUIRE(r1.has_value());
    CHECK(r1->pow(5) == FieldElement(1));

    auto r2 = nth_root_in_field(FieldElement(-1), 2);
    REQUIRE(r2.has_value());
    CHECK(*r2 * *r2 == FieldElement(-1));

    auto r3 = nth_root_in_field(FieldElement(5), 2);
    REQUIRE(r3.has_value());
    CHECK(*r3 * *r3 == FieldElement(5));

    // (5 - sqrt5)/2 = (2 sin(pi/5))^2 has a square root in the field
    FieldElement t = (FieldElement(5) - field_constant("sqrt5")) / FieldElement(2);
    auto r4 = nth_root_in_field(t, 2);
    REQUIRE(r4.has_value());
    CHECK(*r4 * *r4 == t);

    CHECK(!nth_root_in_field(FieldElement(2), 2).has_value());  // sqrt2 not in Q(zeta20)

    for (int it = 0; it < 10; ++it) {
        FieldElement x = random_element(3);
        if (x.is_zero()) continue;
        FieldElement x5 = x.pow(5);
        auto r = nth_root_in_field(x5, 5);
        if (r) CHECK(r->pow(5) == x5);
    }
}

TEST_CASE("complex embedding") {
    auto z = zeta_pow(1).to_complex();
    CHECK(std::abs(std::pow(z, 20) - 1.0) < 1e-12);
    CHECK(std::abs(field_constant("sqrt5").to_complex() - std::sqrt(5.0)) < 1e-12);
    CHECK(std::abs(field_constant("alpha").to_complex() - (1 + std::sqrt(5.0)) / 2) < 1e-12);
}

}  // TEST_SUITE
