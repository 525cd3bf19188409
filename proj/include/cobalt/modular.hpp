#pragma once

#include "cobalt/matrix.hpp"

namespace cobalt {

// Finite shadow of a torus-level anomaly: candidate S and T matrices for a
// projective representation of the torus mapping class group.
struct ModularData {
    int dim = 1;
    Matrix S, T;
};

Verdict verify_modular(const ModularData& m);  // S invertible, T diagonal

// Relator word grammar: factors are S, T or a parenthesised word, each with
// an optional integer power ("(S*T)^3*S^-2"; '*' and whitespace optional).
Matrix evaluate_relator(const ModularData& m, std::string_view relator);

// The scalar lambda with relator(S,T) = lambda * id: the projective-defect
// cocycle value. Throws NotProjectivelyTrivial when the relator does not
// evaluate to a scalar multiple of the identity.
Scalar modular_defect(const ModularData& m, std::string_view relator);

}  // namespace cobalt
