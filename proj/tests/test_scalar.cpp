#include <doctest.h>

#include <cmath>
#include <complex>

#include "cobalt/scalar.hpp"
#include "support.hpp"

using namespace cobalt;
using cobalt::testing::Rng;

namespace {

// Floating oracle for embed checks.
std::complex<double> float_root(long n, long k) {
    double angle = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(n);
    return {std::cos(angle), std::sin(angle)};
}

bool close(std::complex<double> a, std::complex<double> b, double tol) {
    return std::abs(a - b) <= tol;
}

}  // namespace

TEST_CASE("rational arithmetic") {
    Scalar half(Rational(1, 2)), third(Rational(1, 3));
    CHECK((half + third) == Scalar(Rational(5, 6)));
    CHECK(parse_scalar("1/2 + 1/3") == Scalar(Rational(5, 6)));
    CHECK(parse_scalar("1/2 + 1/3").to_string() == "5/6");
}

TEST_CASE("defining relation of small cyclotomics") {
    Scalar i = Scalar::root_of_unity(4);
    CHECK(i * i == Scalar(-1));
    CHECK(Scalar::root_of_unity(2, 1) == Scalar(-1));
    CHECK(Scalar::root_of_unity(1, 0) == Scalar(1));
}

TEST_CASE("conductor reduction of root powers") {
    // zeta_8^2 has order 4, so it lands in Q(zeta_4) on the nose.
    Scalar z = Scalar::root_of_unity(8, 2);
    CHECK(z.conductor() == 4);
    CHECK(z == Scalar::root_of_unity(4));
    CHECK(z * z == Scalar(-1));
}

TEST_CASE("inverse by multiplying back") {
    Scalar s = Scalar(1) + Scalar::root_of_unity(3);
    Scalar inv = s.inverse();
    CHECK(s * inv == Scalar(1));
    // 1 + zeta_3 is a unit norm element; its inverse is -zeta_3, since
    // (1 + zeta_3)(-zeta_3) = -zeta_3 - zeta_3^2 = 1.
    CHECK(inv == -Scalar::root_of_unity(3));

    CHECK_THROWS_AS(Scalar(0).inverse(), DivisionByZero);
    Scalar zero_sum = Scalar::root_of_unity(3, 0) + Scalar::root_of_unity(3, 1) +
                      Scalar::root_of_unity(3, 2);
    CHECK(zero_sum.is_zero());
    CHECK_THROWS_AS(zero_sum.inverse(), DivisionByZero);
}

TEST_CASE("conjugation") {
    CHECK(Scalar(Rational(3, 4)).conjugate() == Scalar(Rational(3, 4)));
    CHECK(Scalar::root_of_unity(8).conjugate() == Scalar::root_of_unity(8, 7));
    Scalar s = Scalar::root_of_unity(3) + Scalar::root_of_unity(3, 2);
    CHECK(s == Scalar(-1));  // reduction oracle: the sum is rational
    CHECK(s.conjugate() == s);
    Rng rng(7);
    for (int t = 0; t < 50; ++t) {
        Scalar x = cobalt::testing::random_scalar(rng, 12);
        CHECK(x.conjugate().conjugate() == x);
    }
}

TEST_CASE("complex embedding against the trigonometric oracle") {
    CHECK(close(Scalar(-1).to_complex(), {-1.0, 0.0}, 1e-12));
    Scalar z8 = Scalar::root_of_unity(8);
    CHECK(close((z8 + z8.conjugate()).to_complex(), {std::sqrt(2.0), 0.0}, 1e-10));
    CHECK(close(Scalar::root_of_unity(3).to_complex(), float_root(3, 1), 1e-10));
    CHECK(close(Scalar::root_of_unity(120, 7).to_complex(), float_root(120, 7), 1e-10));
}

TEST_CASE("field axioms on random samples") {
    Rng rng(11);
    for (int t = 0; t < 1000; ++t) {
        long n = 1 + static_cast<long>(rng() % 24);
        Scalar a = cobalt::testing::random_scalar(rng, n);
        Scalar b = cobalt::testing::random_scalar(rng, n);
        Scalar c = cobalt::testing::random_scalar(rng, n);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == Scalar(0));
        if (!a.is_zero()) CHECK(a * a.inverse() == Scalar(1));
    }
}

TEST_CASE("embedding is a ring homomorphism up to 1e-9") {
    Rng rng(13);
    for (int t = 0; t < 200; ++t) {
        Scalar a = cobalt::testing::random_scalar(rng, 24);
        Scalar b = cobalt::testing::random_scalar(rng, 8);
        CHECK(close((a + b).to_complex(), a.to_complex() + b.to_complex(), 1e-9));
        CHECK(close((a * b).to_complex(), a.to_complex() * b.to_complex(), 1e-9));
    }
}

TEST_CASE("literal grammar round trips") {
    CHECK(parse_scalar("1/2*q8^3 + -1/2*q8") ==
          Scalar(Rational(1, 2)) * Scalar::root_of_unity(8, 3) -
              Scalar(Rational(1, 2)) * Scalar::root_of_unity(8));
    const char* cases[] = {"0", "-1", "5/6", "q3", "1/2*q8^3 + -1/2*q8", "2*q5^4 + 1/3"};
    for (const char* text : cases) {
        Scalar s = parse_scalar(text);
        std::string canon = s.to_string();
        CHECK(parse_scalar(canon) == s);
        CHECK(parse_scalar(canon).to_string() == canon);  // serialize is a fixed point
    }
    Rng rng(17);
    for (int t = 0; t < 200; ++t) {
        Scalar s = cobalt::testing::random_scalar(rng, 20);
        std::string canon = s.to_string();
        CHECK(parse_scalar(canon) == s);
        CHECK(parse_scalar(canon).to_string() == canon);
    }
    CHECK(parse_scalar("(1 + q4) * (1 - q4)") == Scalar(2));
    CHECK(parse_scalar("-q4 * -q4") == Scalar(-1));
    CHECK_THROWS_AS(parse_scalar("1 +"), ParseError);
    CHECK_THROWS_AS(parse_scalar("q"), ParseError);
    CHECK_THROWS_AS(parse_scalar("3/0"), ParseError);
}

TEST_CASE("arith_eval expression trees") {
    // inv node against the defining oracle
    ScalarExpr e = ScalarExpr::inv(
        ScalarExpr::add({ScalarExpr::rat(Rational(1)), ScalarExpr::root(3, 1)}));
    Scalar v = arith_eval(e);
    CHECK(v * (Scalar(1) + Scalar::root_of_unity(3)) == Scalar(1));
    CHECK_THROWS_AS(arith_eval(ScalarExpr::inv(ScalarExpr::rat(Rational(0)))), DivisionByZero);
    CHECK(arith_eval(ScalarExpr::neg(ScalarExpr::root(2, 1))) == Scalar(1));
}

TEST_CASE("conductor cap") {
    CHECK(conductor_cap() == 120);
    CHECK_THROWS_AS(Scalar::root_of_unity(7) * Scalar::root_of_unity(11) *
                        Scalar::root_of_unity(5),
                    ConductorOverflow);
    CHECK_THROWS_AS(Scalar::root_of_unity(121), ConductorOverflow);
    set_conductor_cap(11);
    CHECK_THROWS_AS(Scalar::root_of_unity(3) * Scalar::root_of_unity(4), ConductorOverflow);
    set_conductor_cap(120);
    CHECK(Scalar::root_of_unity(3) * Scalar::root_of_unity(4) == Scalar::root_of_unity(12, 7));
}

TEST_CASE("mixed conductor equality uses the common embedding") {
    CHECK(Scalar::root_of_unity(8, 2) == Scalar::root_of_unity(4));
    CHECK(Scalar::root_of_unity(6) == Scalar(1) + Scalar::root_of_unity(3));
    CHECK(Scalar::root_of_unity(12, 4) == Scalar::root_of_unity(3));
    CHECK(Scalar::root_of_unity(5) != Scalar::root_of_unity(7));
}
