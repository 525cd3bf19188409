#include "cobalt/projrep.hpp"

namespace cobalt {

namespace {

Verdict check_shapes(const FiniteGroup& g, int dim, const std::vector<Matrix>& mats,
                     const char* what) {
    if (static_cast<int>(mats.size()) != g.order)
        return Verdict::fail(std::string(what) + ": matrix count differs from group order");
    for (const Matrix& m : mats)
        if (m.rows() != static_cast<size_t>(dim) || m.cols() != static_cast<size_t>(dim))
            return Verdict::fail(std::string(what) + ": matrix shape differs from dim");
    return Verdict::pass();
}

}  // namespace

Verdict verify_projrep(const ProjRep& r) {
    if (!r.group.same_as(r.cocycle.group)) return Verdict::fail("cocycle group mismatch");
    if (Verdict v = check_shapes(r.group, r.dim, r.mats, "projrep"); !v) return v;
    for (const Matrix& m : r.mats)
        if (r.dim > 0 && m.determinant().is_zero()) return Verdict::fail("non-invertible matrix");
    for (int g = 0; g < r.group.order; ++g)
        for (int h = 0; h < r.group.order; ++h) {
            int gh = r.group.mul(g, h);
            if (r.mats[gh] != (r.mats[g] * r.mats[h]).scaled(r.cocycle.at(g, h)))
                return Verdict::fail("projective relation fails at (" + r.group.name(g) + ", " +
                                     r.group.name(h) + ")");
        }
    return Verdict::pass();
}

Verdict verify_fixed_point(const HomotopyFixedPoint& p) {
    const TwoCharacter& c = p.character;
    if (Verdict v = check_shapes(c.group, p.dim, p.maps, "fixed point"); !v) return v;
    for (const Matrix& m : p.maps)
        if (p.dim > 0 && m.determinant().is_zero()) return Verdict::fail("non-invertible map");
    for (int g = 0; g < c.group.order; ++g)
        for (int h = 0; h < c.group.order; ++h) {
            int gh = c.group.mul(g, h);
            if (p.maps[gh].scaled(c.psi_at(g, h)) != p.maps[g] * p.maps[h])
                return Verdict::fail("compatibility fails at (" + c.group.name(g) + ", " +
                                     c.group.name(h) + ")");
        }
    if (c.is_two_group()) {
        const CrossedModule& x = *c.two_group;
        for (int a = 0; a < x.fiber.order; ++a)
            for (int g = 0; g < c.group.order; ++g) {
                int dg = c.group.mul(x.delta(a), g);
                if (p.maps[g] != p.maps[dg].scaled(c.hol_at(a, g)))
                    return Verdict::fail("holonomy diagram fails at (a=" + x.fiber.name(a) +
                                         ", g=" + c.group.name(g) + ")");
            }
    }
    return Verdict::pass();
}

// The realization equivalence keeps the matrices on the nose. With the
// twisted multiplicativity phi_{gh} = alpha(g,h) phi_g phi_h and the fixed
// point compatibility psi_{g,h} phi_{gh} = phi_g phi_h, the same matrices
// are a fixed point exactly over T(alpha^{-1}); inverting the cocycle is an
// isomorphism of the cocycle groupoid, so the equivalence is intact.
HomotopyFixedPoint to_fixed_point(const ProjRep& r) {
    Cocycle inv;
    inv.group = r.cocycle.group;
    for (const Scalar& v : r.cocycle.values) inv.values.push_back(v.inverse());
    HomotopyFixedPoint p;
    p.character = from_cocycle(inv);
    p.dim = r.dim;
    p.maps = r.mats;
    return p;
}

ProjRep from_fixed_point(const HomotopyFixedPoint& p) {
    if (p.character.is_two_group())
        throw CharacterNotCocycleForm("character lives over a 2-group");
    Cocycle alpha;
    alpha.group = p.character.group;
    for (const Scalar& v : p.character.psi) {
        if (v.is_zero()) throw CharacterNotCocycleForm("psi has a zero entry");
        alpha.values.push_back(v.inverse());
    }
    if (Verdict v = verify_cocycle(alpha); !v) throw CharacterNotCocycleForm(v.detail);
    ProjRep r;
    r.group = p.character.group;
    r.cocycle = std::move(alpha);
    r.dim = p.dim;
    r.mats = p.maps;
    return r;
}

Scalar extract_holonomy(const HomotopyFixedPoint& p, int a, int g) {
    if (!p.character.is_two_group()) throw NotTwoGroup();
    if (p.dim < 1) throw NotScalarMultiple("zero-dimensional fixed point has no holonomy");
    const CrossedModule& x = *p.character.two_group;
    int dg = p.character.group.mul(x.delta(a), g);
    auto inv = p.maps[dg].inverse();
    if (!inv) throw NotScalarMultiple("map is not invertible");
    auto lambda = (*inv * p.maps[g]).scalar_multiple_of_identity();
    if (!lambda)
        throw NotScalarMultiple("phi_{delta(a)g}^{-1} phi_g is not a scalar multiple of identity");
    return *lambda;
}

ProjRep twisted_regular_rep(const Cocycle& alpha) {
    const FiniteGroup& G = alpha.group;
    int n = G.order;
    ProjRep r;
    r.group = G;
    r.cocycle = alpha;
    r.dim = n;
    for (int g = 0; g < n; ++g) {
        Matrix m(n, n);
        for (int h = 0; h < n; ++h) m.at(G.mul(g, h), h) = alpha.at(g, h).inverse();
        r.mats.push_back(std::move(m));
    }
    return r;
}

Cocycle extract_cocycle(const FiniteGroup& g, const std::vector<Matrix>& mats) {
    if (static_cast<int>(mats.size()) != g.order)
        throw Error("extract_cocycle: matrix count differs from group order");
    Cocycle alpha;
    alpha.group = g;
    alpha.values.resize(static_cast<size_t>(g.order) * g.order);
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b) {
            auto inv = (mats[a] * mats[b]).inverse();
            if (!inv) throw NotScalarMultiple("product is not invertible");
            auto lambda = (mats[g.mul(a, b)] * *inv).scalar_multiple_of_identity();
            if (!lambda) throw NotScalarMultiple("phi_{gh} (phi_g phi_h)^{-1} is not scalar");
            alpha.at(a, b) = *lambda;
        }
    return alpha;
}

}  // namespace cobalt
