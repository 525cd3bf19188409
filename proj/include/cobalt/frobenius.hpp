#pragma once

#include "cobalt/group.hpp"
#include "cobalt/matrix.hpp"

namespace cobalt {

// Finite dimensional algebra with a counit whose induced pairing
// eps(x y) is nondegenerate. Structure constants: e_i e_j = sum_k m(i,j,k) e_k.
struct FrobeniusAlgebra {
    int dim = 1;
    std::vector<Scalar> mult;    // dim^3, index (i*dim + j)*dim + k
    std::vector<Scalar> unit;    // coefficients of 1
    std::vector<Scalar> counit;  // eps as a covector

    const Scalar& m(int i, int j, int k) const { return mult[(i * dim + j) * dim + k]; }
    Scalar& m(int i, int j, int k) { return mult[(i * dim + j) * dim + k]; }

    std::vector<Scalar> multiply(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const;
    Scalar apply_counit(const std::vector<Scalar>& x) const;
    Matrix left_mult_matrix(int i) const;  // L_{e_i}
    Matrix gram() const;                   // G_{ij} = eps(e_i e_j)
};

// K[G] with eps = coefficient of the identity element.
FrobeniusAlgebra make_group_algebra(const FiniteGroup& g);

// The base field with eps(1) = lambda.
FrobeniusAlgebra field_algebra(const Scalar& lambda);

struct FrobeniusReport {
    Verdict verdict;
    bool commutative = false;
    bool symmetric = false;
};

// Associativity, unitality, Gram nondegeneracy; reports the two flags.
FrobeniusReport verify_frobenius(const FrobeniusAlgebra& a);

// Exact solution space of xz = zx for all basis z, as coefficient vectors.
std::vector<std::vector<Scalar>> center(const FrobeniusAlgebra& a);

// H = sum_i e_i e^i with {e^i} the Gram-dual basis; throws NotCommutative.
std::vector<Scalar> handle_element(const FrobeniusAlgebra& a);

// Regular trace form nondegeneracy (valid in characteristic zero).
bool is_semisimple(const FrobeniusAlgebra& a);

// Left module given by explicit action matrices per basis element.
struct AlgModule {
    FrobeniusAlgebra algebra;
    int dim = 0;
    std::vector<Matrix> action;  // action[i] = rho(e_i), dim x dim

    Matrix act(const std::vector<Scalar>& x) const;
};

Verdict verify_module(const AlgModule& m);

AlgModule regular_module(const FrobeniusAlgebra& a);

struct HomBasis {
    int dim = 0;
    std::vector<Matrix> basis;  // intertwiners T with T rho_a(x) = rho_b(x) T
};

HomBasis hom_modules(const AlgModule& ra, const AlgModule& rb);  // throws AlgebraMismatch

}  // namespace cobalt
