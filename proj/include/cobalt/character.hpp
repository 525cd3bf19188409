#pragma once

#include <array>
#include <optional>

#include "cobalt/group.hpp"
#include "cobalt/scalar.hpp"

namespace cobalt {

// Group 2-cocycle with values in the unit group of the scalar field,
// stored as an order x order table. Verified cocycles are normalized:
// alpha(e,g) = alpha(g,e) = 1.
struct Cocycle {
    FiniteGroup group;
    std::vector<Scalar> values;  // row-major, values[g * order + h] = alpha(g, h)

    const Scalar& at(int g, int h) const { return values[g * group.order + h]; }
    Scalar& at(int g, int h) { return values[g * group.order + h]; }

    static Cocycle trivial(const FiniteGroup& g);
};

// The 2-cocycle identity alone: alpha(g,h) alpha(gh,j) = alpha(h,j) alpha(g,hj).
// Returns the first violating triple, scanning indices in ascending order.
std::optional<std::array<int, 3>> cocycle_identity_violation(const Cocycle& a);

// Full invariant bundle: nonzero entries, 2-cocycle identity, normalization.
Verdict verify_cocycle(const Cocycle& a);

// 1-cochain coboundary (d beta)(g,h) = beta(g) beta(h) / beta(gh).
Cocycle coboundary(const FiniteGroup& g, const std::vector<Scalar>& beta);
Cocycle multiply_cocycles(const Cocycle& a, const Cocycle& b);

// A 2-character with all lines W_g carried in a chosen trivialization, so
// the composition isomorphisms psi_{g,h} are scalars. When two_group is
// present the character lives over that strict 2-group: holonomy[a][g] is
// the scalar psi_{a,g}: W_g -> W_{delta(a) g}.
struct TwoCharacter {
    FiniteGroup group;
    std::optional<CrossedModule> two_group;
    std::vector<std::string> line_labels;  // per element, display only
    std::vector<Scalar> psi;               // row-major order x order
    std::vector<Scalar> holonomy;          // |A| x |G| when two_group is set

    const Scalar& psi_at(int g, int h) const { return psi[g * group.order + h]; }
    Scalar& psi_at(int g, int h) { return psi[g * group.order + h]; }
    const Scalar& hol_at(int a, int g) const { return holonomy[a * group.order + g]; }
    Scalar& hol_at(int a, int g) { return holonomy[a * group.order + g]; }
    bool is_two_group() const { return two_group.has_value(); }
};

// Checks, exactly:
//  - psi_{g,h} psi_{gh,j} = psi_{h,j} psi_{g,hj} for all triples;
//  - all psi (and holonomy) entries nonzero;
//  - 2-group case: psi_{e_A,g} = 1, the vertical composition law
//    psi_{a'a,g} = psi_{a',delta(a)g} psi_{a,g}, and the interchange law
//    psi_{a,g} psi_{b,h} psi_{delta(a)g,delta(b)h} = psi_{g,h} psi_{a(g.b),gh}.
Verdict verify_two_character(const TwoCharacter& c);

// T(alpha): all lines trivial, psi = the cocycle table (copied verbatim,
// without verifying alpha; callers owning unverified tables compare the two
// verifiers instead).
TwoCharacter from_cocycle(const Cocycle& alpha);

// Lift of a discrete character to a 2-group character with the given
// holonomy table (identity holonomy when the table is empty).
TwoCharacter character_over(const CrossedModule& x, std::vector<Scalar> psi,
                            std::vector<Scalar> holonomy = {});

// alpha(g,h)/alpha(h,g) for commuting g, h; a coboundary invariant.
Scalar commutator_pairing(const Cocycle& alpha, int g, int h);

struct CharacterMorphism {
    TwoCharacter source;
    TwoCharacter target;
    std::vector<Scalar> xi;  // per element
};

// xi_{gh} psi_{g,h} = psi'_{g,h} xi_g xi_h, all entries nonzero.
Verdict verify_character_morphism(const CharacterMorphism& m);

struct HolonomyReport {
    std::vector<Scalar> table;  // |A| x |G|
    bool trivial = true;        // true iff every entry is 1
};

HolonomyReport holonomy_table(const TwoCharacter& c);  // throws NotTwoGroup

// Searches for a morphism between verified characters with each xi_g ranging
// over roots of unity of order dividing root_bound. Used by the catalog
// equivalence tests; the commutator pairing provides bound-independent
// nontriviality certificates.
std::optional<std::vector<Scalar>> find_character_morphism(const TwoCharacter& source,
                                                           const TwoCharacter& target,
                                                           long root_bound = 24);

}  // namespace cobalt
