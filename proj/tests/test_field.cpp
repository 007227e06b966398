#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qalg/field.hpp"

using qalg::Fp;
using qalg::Rational;

TEST_CASE("rational normalization and arithmetic") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(0, 7).den() == 1);

    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(2, 3) / Rational(4, 3) == Rational(1, 2));
    CHECK((-Rational(3, 5)).num() == -3);
    CHECK(Rational(7).str() == "7");
    CHECK(Rational(-1, 3).str() == "-1/3");
}

TEST_CASE("rational field laws on a small sample") {
    std::vector<Rational> xs;
    for (int n = -3; n <= 3; ++n)
        for (int d = 1; d <= 3; ++d) xs.emplace_back(n, d);
    for (const auto& a : xs)
        for (const auto& b : xs) {
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            if (!b.is_zero()) CHECK((a / b) * b == a);
            for (const auto& c : xs) {
                CHECK((a + b) + c == a + (b + c));
                CHECK((a * b) * c == a * (b * c));
                CHECK(a * (b + c) == a * b + a * c);
            }
        }
}

TEST_CASE("rational errors") {
    CHECK_THROWS_AS(Rational(1, 0), qalg::validation_error);
    CHECK_THROWS_AS(Rational(0).inverse(), qalg::validation_error);
    CHECK_THROWS_AS(Rational(INT64_MAX) + Rational(1), qalg::overflow_error);
    CHECK_THROWS_AS(Rational(INT64_MAX) * Rational(2), qalg::overflow_error);
}

TEST_CASE("prime field arithmetic and inverses") {
    const std::int64_t p = 7;
    for (std::int64_t v = 1; v < p; ++v) {
        Fp x(v, p);
        CHECK(x * x.inverse() == Fp(1, p));
        CHECK((x / x).is_one());
    }
    CHECK(Fp(3, 7) + Fp(5, 7) == Fp(1, 7));
    CHECK(Fp(3, 7) * Fp(5, 7) == Fp(1, 7));
    CHECK((-Fp(3, 7)) == Fp(4, 7));
    CHECK(Fp(-1, 7) == Fp(6, 7));
    CHECK_THROWS_AS(Fp(0, 7).inverse(), qalg::validation_error);
}

TEST_CASE("prime field literals bind on contact") {
    Fp lit(1);  // unbound, like Eigen's Scalar(1)
    CHECK(lit.modulus() == 0);
    Fp bound = lit + Fp(4, 5);
    CHECK(bound.modulus() == 5);
    CHECK(bound == Fp(0, 5));
    CHECK(Fp(0) == Fp(0, 3));
    CHECK(Fp(7) == Fp(2, 5));
    CHECK(Fp(1) * Fp(2, 3) == Fp(2, 3));
}

TEST_CASE("prime field modulus mismatch is loud") {
    CHECK_THROWS_AS(Fp(1, 3) + Fp(1, 5), qalg::internal_error);
}
