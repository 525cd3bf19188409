#include <doctest.h>

#include <complex>
#include <vector>

#include "cobalt/modular.hpp"
#include "support.hpp"

using namespace cobalt;

namespace {

// Independent floating-point oracle: dense complex matrices with their own
// product and Gaussian inverse.
using CMat = std::vector<std::vector<std::complex<double>>>;

CMat cmul(const CMat& a, const CMat& b) {
    size_t n = a.size();
    CMat out(n, std::vector<std::complex<double>>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k)
            for (size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
    return out;
}

CMat cinv(CMat a) {
    size_t n = a.size();
    CMat inv(n, std::vector<std::complex<double>>(n));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1.0;
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        for (size_t r = col + 1; r < n; ++r)
            if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        std::complex<double> p = a[col][col];
        for (size_t j = 0; j < n; ++j) {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            std::complex<double> f = a[r][col];
            for (size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

CMat to_cmat(const Matrix& m) {
    CMat out(m.rows(), std::vector<std::complex<double>>(m.cols()));
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) out[i][j] = m.at(i, j).to_complex();
    return out;
}

// (S T)^3 S^-2 computed purely in floating point.
std::complex<double> float_defect_st3(const ModularData& m) {
    CMat s = to_cmat(m.S), t = to_cmat(m.T);
    CMat st = cmul(s, t);
    CMat word = cmul(cmul(st, st), st);
    CMat sinv = cinv(s);
    word = cmul(word, cmul(sinv, sinv));
    // must be lambda * identity
    std::complex<double> lambda = word[0][0];
    for (size_t i = 0; i < word.size(); ++i)
        for (size_t j = 0; j < word.size(); ++j) {
            std::complex<double> expect = i == j ? lambda : 0.0;
            REQUIRE(std::abs(word[i][j] - expect) < 1e-9);
        }
    return lambda;
}

ModularData toric_code() {
    ModularData m;
    m.dim = 4;
    Scalar half(Rational(1, 2));
    int signs[4][4] = {{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}};
    m.S = Matrix(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m.S.at(i, j) = half * Scalar(signs[i][j]);
    m.T = Matrix::identity(4);
    m.T.at(3, 3) = Scalar(-1);
    return m;
}

ModularData semion() {
    ModularData m;
    m.dim = 2;
    Scalar inv_sqrt2 =
        (Scalar::root_of_unity(8) + Scalar::root_of_unity(8, 7)) * Scalar(Rational(1, 2));
    m.S = Matrix(2, 2);
    m.S.at(0, 0) = inv_sqrt2;
    m.S.at(0, 1) = inv_sqrt2;
    m.S.at(1, 0) = inv_sqrt2;
    m.S.at(1, 1) = -inv_sqrt2;
    m.T = Matrix::identity(2);
    m.T.at(1, 1) = Scalar::root_of_unity(4);
    return m;
}

}  // namespace

TEST_CASE("verify_modular") {
    CHECK(verify_modular(toric_code()).ok);
    CHECK(verify_modular(semion()).ok);

    ModularData bad = semion();
    bad.T.at(0, 1) = Scalar(1);
    CHECK_FALSE(verify_modular(bad).ok);

    ModularData sing = semion();
    sing.S.at(1, 0) = sing.S.at(0, 0);
    sing.S.at(1, 1) = sing.S.at(0, 1);
    CHECK_FALSE(verify_modular(sing).ok);
}

TEST_CASE("identity relator") {
    CHECK(modular_defect(toric_code(), "") == Scalar(1));
    CHECK(modular_defect(semion(), "S S^-1") == Scalar(1));
}

TEST_CASE("toric code: (ST)^3 S^-2 has trivial defect") {
    ModularData m = toric_code();
    Scalar d = modular_defect(m, "(S*T)^3*S^-2");
    CHECK(d == Scalar(1));
    std::complex<double> oracle = float_defect_st3(m);
    CHECK(std::abs(oracle - d.to_complex()) < 1e-9);
}

TEST_CASE("semion: (ST)^3 S^-2 has defect zeta_8") {
    ModularData m = semion();
    Scalar d = modular_defect(m, "(S*T)^3*S^-2");
    CHECK(d == Scalar::root_of_unity(8));
    std::complex<double> oracle = float_defect_st3(m);
    CHECK(std::abs(oracle - d.to_complex()) < 1e-9);
}

TEST_CASE("defect multiplicativity on relator products") {
    ModularData m = semion();
    const char* pool[] = {"(S*T)^3*S^-2", "S^2", "S^-2", "((S*T)^3*S^-2)^2",
                          "T (S^2) T^-1"};
    for (const char* r1 : pool)
        for (const char* r2 : pool) {
            Scalar d1 = modular_defect(m, r1);
            Scalar d2 = modular_defect(m, r2);
            std::string prod = std::string("(") + r1 + ")(" + r2 + ")";
            CHECK(modular_defect(m, prod) == d1 * d2);
        }
}

TEST_CASE("non-scalar relators are rejected") {
    CHECK_THROWS_AS(modular_defect(semion(), "S"), NotProjectivelyTrivial);
    CHECK_THROWS_AS(modular_defect(toric_code(), "S*T"), NotProjectivelyTrivial);
    CHECK_THROWS_AS(modular_defect(semion(), "S^"), ParseError);
    CHECK_THROWS_AS(modular_defect(semion(), "Q"), ParseError);
}
