#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include "cobalt/errors.hpp"

namespace cobalt {

using Rational = boost::multiprecision::cpp_rational;

// Largest conductor the arithmetic is willing to work in. Mixed-conductor
// operations embed both operands into Q(zeta_lcm) and throw ConductorOverflow
// when the lcm exceeds the cap.
long conductor_cap();
void set_conductor_cap(long cap);

// An exact element of the cyclotomic field Q(zeta_N), stored as the reduced
// residue of a rational polynomial modulo the N-th cyclotomic polynomial.
// coeffs()[i] is the coefficient of zeta_N^i, 0 <= i < phi(N). Purely
// rational values are normalised to conductor 1, so printing stays readable;
// equality compares embeddings into the common cyclotomic field, which does
// not depend on the representative conductor.
class Scalar {
public:
    Scalar() : n_(1), c_(1, Rational(0)) {}
    Scalar(long v) : n_(1), c_(1, Rational(v)) {}
    Scalar(const Rational& v) : n_(1), c_(1, v) {}

    // zeta_n^k, reduced to its exact multiplicative order n/gcd(n,k).
    static Scalar root_of_unity(long n, long k = 1);
    static Scalar from_string(std::string_view text);

    long conductor() const { return n_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const { return *this == Scalar(1); }
    bool is_rational() const { return n_ == 1; }
    const Rational& rational() const;  // requires is_rational()

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    // Extended Euclid against Phi_N; throws DivisionByZero on zero.
    Scalar inverse() const;
    Scalar pow(long e) const;

    // Image under zeta_N -> zeta_N^{-1} (complex conjugation).
    Scalar conjugate() const;

    // Numeric embedding zeta_N -> exp(2*pi*i/N); for display only.
    std::complex<double> to_complex() const;

    // Canonical literal, e.g. "1/2*q8^3 + -1/2*q8". Parseable by from_string.
    std::string to_string() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

private:
    long n_;
    std::vector<Rational> c_;

    Scalar(long n, std::vector<Rational> c) : n_(n), c_(std::move(c)) {}
    void normalize();
    static Scalar make(long n, std::vector<Rational> c);
    friend Scalar embed_into(const Scalar& s, long n);
};

// Expression tree accepted by arith_eval. Subtraction is Add(x, Neg(y)).
struct ScalarExpr {
    enum class Kind { Add, Mul, Neg, Inv, Rat, Root };
    Kind kind = Kind::Rat;
    std::vector<ScalarExpr> children;
    Rational value;    // Kind::Rat
    long root_n = 1;   // Kind::Root
    long root_k = 1;

    static ScalarExpr rat(Rational v);
    static ScalarExpr root(long n, long k);
    static ScalarExpr add(std::vector<ScalarExpr> xs);
    static ScalarExpr mul(std::vector<ScalarExpr> xs);
    static ScalarExpr neg(ScalarExpr x);
    static ScalarExpr inv(ScalarExpr x);
};

// Exact evaluation; throws DivisionByZero or ConductorOverflow.
Scalar arith_eval(const ScalarExpr& expr);

// Recursive-descent parser for the scalar literal grammar:
//   rat  := INT ("/" POSINT)?
//   root := "q" POSINT ("^" INT)?
//   term := factor ("*" factor)*
//   factor := rat | root | "(" expr ")"
//   expr := ("+"|"-")? term (("+"|"-") term)*
ScalarExpr parse_scalar_expr(std::string_view text);
inline Scalar parse_scalar(std::string_view text) { return arith_eval(parse_scalar_expr(text)); }

// Number theory helpers shared across the library.
long euler_phi(long n);
std::vector<long> divisors(long n);
const std::vector<Rational>& cyclotomic_polynomial(long n);  // monic, degree phi(n)

}  // namespace cobalt
