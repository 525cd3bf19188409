#pragma once

#include "cobalt/cobword.hpp"
#include "cobalt/frobenius.hpp"
#include "cobalt/matrix.hpp"
#include "cobalt/projrep.hpp"

namespace cobalt {

// Evaluation of a closed 2d word on a commutative Frobenius algebra:
// cup -> unit, cap -> counit, mul -> multiplication, comul -> the Gram-dual
// comultiplication, swap -> factor exchange; sequential composition is
// matrix composition (leftmost applied first), parallel is Kronecker.
Matrix eval_closed_2d(const CobWord& w, const FrobeniusAlgebra& a);  // throws NotCommutative

// eps(H^g), the closed genus-g invariant; the normal form backend that
// eval_closed_2d is tested against.
Scalar genus_invariant(int genus, const FrobeniusAlgebra& a);

// Boundary condition for the 1d sector: pt+ -> K^dim, lbnd -> v, rbnd -> phi.
struct BoundaryCondition {
    int dim = 1;
    std::vector<Scalar> v;    // column for lbnd
    std::vector<Scalar> phi;  // row for rbnd

    static BoundaryCondition basis_vector(int dim, int index);
};

Matrix eval_1d(const CobWord& w, const BoundaryCondition& bc);

// Word realizing the mapping cylinder of the sign-preserving bijection
// source position i -> target position perm[i]; evaluates to the tensor
// factor permutation operator. Throws SignMismatch.
CobWord mapping_cylinder(const std::vector<int>& src_signs, const std::vector<int>& tgt_signs,
                         const std::vector<int>& perm);

// Value of the transmission defect cylinder decorated by an honest
// representation: the character of rho as a class-function vector, ordered
// by class (classes sorted by minimal element). Throws TwistedInput.
std::vector<Scalar> transmission(const FiniteGroup& g, const ProjRep& rho);

}  // namespace cobalt
