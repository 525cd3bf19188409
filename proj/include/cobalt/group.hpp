#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cobalt/errors.hpp"

namespace cobalt {

// A finite group given by its full multiplication table. Element ordering is
// fixed by the catalog constructors (see each builder) so that all reports
// and serialisations are deterministic.
struct FiniteGroup {
    int order = 1;
    std::vector<int> table;  // row-major: table[a * order + b] = a*b
    int identity = 0;
    std::vector<int> inverses;
    std::vector<std::string> names;

    int mul(int a, int b) const { return table[a * order + b]; }
    int inv(int a) const { return inverses[a]; }
    const std::string& name(int a) const { return names[a]; }

    // Structural comparison on order and table; display names are ignored.
    bool same_as(const FiniteGroup& o) const { return order == o.order && table == o.table; }
};

// Derives identity/inverses from a bare table and checks they exist.
FiniteGroup group_from_table(int order, std::vector<int> table, std::vector<std::string> names = {});

FiniteGroup trivial_group();
FiniteGroup cyclic_group(int n);
FiniteGroup dihedral_group(int n);   // order 2n, n >= 1
FiniteGroup symmetric_group(int n);  // n <= 5
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

// Catalog spec mini-language: cyclic(4), dihedral(3), symmetric(3),
// product(cyclic(2),cyclic(2)). Total order capped at 120.
FiniteGroup parse_group_spec(std::string_view spec);

// Associativity is exhaustive for order <= 64 and seeded-random sampled
// above; identity and inverse laws are always exhaustive.
Verdict verify_group(const FiniteGroup& g, uint64_t seed = 0);

// Classes sorted by minimal element; elements sorted within each class.
std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g);

struct GroupHom {
    FiniteGroup source;
    FiniteGroup target;
    std::vector<int> images;

    int apply(int a) const { return images[a]; }
};

Verdict verify_hom(const GroupHom& f);

// Finite model of a strict 2-group: morphisms g -> boundary(a)*g are labeled
// by a in the fiber; the base acts on the fiber by automorphisms.
struct CrossedModule {
    FiniteGroup base;   // G
    FiniteGroup fiber;  // A
    std::vector<int> boundary;            // delta: A -> G, by element index
    std::vector<std::vector<int>> action; // action[g][a] = g . a

    int delta(int a) const { return boundary[a]; }
    int act(int g, int a) const { return action[g][a]; }
};

Verdict verify_crossed_module(const CrossedModule& x);

// The quotient G / im(delta); the image is normal by equivariance. Cosets
// are ordered by minimal element.
FiniteGroup pi0(const CrossedModule& x);

}  // namespace cobalt
