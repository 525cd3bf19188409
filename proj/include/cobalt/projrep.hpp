#pragma once

#include "cobalt/character.hpp"
#include "cobalt/matrix.hpp"

namespace cobalt {

// Projective representation: invertible matrices with the twisted
// multiplicativity phi_{gh} = alpha(g,h) phi_g phi_h.
struct ProjRep {
    FiniteGroup group;
    Cocycle cocycle;
    int dim = 0;
    std::vector<Matrix> mats;  // per element
};

Verdict verify_projrep(const ProjRep& r);

// Homotopy fixed point for a 2-character with trivialized lines: matrices
// phi_g with psi_{g,h} phi_{gh} = phi_g phi_h, and over a 2-group
// additionally phi_g = psi_{a,g} phi_{delta(a) g} for every (a, g).
struct HomotopyFixedPoint {
    TwoCharacter character;
    int dim = 0;
    std::vector<Matrix> maps;
};

Verdict verify_fixed_point(const HomotopyFixedPoint& p);

// The realization equivalence, both directions faithful on data.
HomotopyFixedPoint to_fixed_point(const ProjRep& r);
ProjRep from_fixed_point(const HomotopyFixedPoint& p);  // throws CharacterNotCocycleForm

// The unique lambda with phi_{delta(a)g}^{-1} phi_g = lambda * id; throws
// NotScalarMultiple when the left side is not scalar. Requires dim >= 1.
Scalar extract_holonomy(const HomotopyFixedPoint& p, int a, int g);

// Twisted regular representation on the basis {e_h}: phi_g e_h =
// alpha(g,h)^{-1} e_{gh}. The inverse power is the convention that makes
// phi_{gh} = alpha(g,h) phi_g phi_h hold on the nose (fixed against the
// brute-force verifier before freezing).
ProjRep twisted_regular_rep(const Cocycle& alpha);

// Reads off alpha(g,h) from phi_{gh} = alpha(g,h) phi_g phi_h for a family
// of invertible matrices; throws NotScalarMultiple if some ratio is not
// scalar. Test utility promoted to the API for the CLI's fixture tooling.
Cocycle extract_cocycle(const FiniteGroup& g, const std::vector<Matrix>& mats);

}  // namespace cobalt
