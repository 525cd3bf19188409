#include "cobalt/character.hpp"

#include <sstream>

namespace cobalt {

namespace {

std::string triple_str(const FiniteGroup& g, int a, int b, int c) {
    std::ostringstream os;
    os << "(" << g.name(a) << ", " << g.name(b) << ", " << g.name(c) << ")";
    return os.str();
}

}  // namespace

Cocycle Cocycle::trivial(const FiniteGroup& g) {
    Cocycle a;
    a.group = g;
    a.values.assign(static_cast<size_t>(g.order) * g.order, Scalar(1));
    return a;
}

std::optional<std::array<int, 3>> cocycle_identity_violation(const Cocycle& a) {
    int n = a.group.order;
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            for (int j = 0; j < n; ++j) {
                int gh = a.group.mul(g, h);
                int hj = a.group.mul(h, j);
                if (a.at(g, h) * a.at(gh, j) != a.at(h, j) * a.at(g, hj))
                    return std::array<int, 3>{g, h, j};
            }
    return std::nullopt;
}

Verdict verify_cocycle(const Cocycle& a) {
    int n = a.group.order;
    if (static_cast<int>(a.values.size()) != n * n) return Verdict::fail("table size mismatch");
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            if (a.at(g, h).is_zero())
                return Verdict::fail("zero entry at (" + a.group.name(g) + ", " + a.group.name(h) +
                                     ")");
    if (auto bad = cocycle_identity_violation(a))
        return Verdict::fail("cocycle identity fails at " +
                             triple_str(a.group, (*bad)[0], (*bad)[1], (*bad)[2]));
    int e = a.group.identity;
    for (int g = 0; g < n; ++g)
        if (!a.at(e, g).is_one() || !a.at(g, e).is_one())
            return Verdict::fail("not normalized at " + a.group.name(g));
    return Verdict::pass();
}

Cocycle coboundary(const FiniteGroup& g, const std::vector<Scalar>& beta) {
    if (static_cast<int>(beta.size()) != g.order) throw Error("coboundary: cochain size mismatch");
    Cocycle out;
    out.group = g;
    out.values.resize(static_cast<size_t>(g.order) * g.order);
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b)
            out.at(a, b) = beta[a] * beta[b] / beta[g.mul(a, b)];
    return out;
}

Cocycle multiply_cocycles(const Cocycle& a, const Cocycle& b) {
    if (!a.group.same_as(b.group)) throw GroupMismatch();
    Cocycle out = a;
    for (size_t i = 0; i < out.values.size(); ++i) out.values[i] = a.values[i] * b.values[i];
    return out;
}

Verdict verify_two_character(const TwoCharacter& c) {
    int n = c.group.order;
    if (static_cast<int>(c.psi.size()) != n * n) return Verdict::fail("psi table size mismatch");
    for (const Scalar& s : c.psi)
        if (s.is_zero()) return Verdict::fail("psi has a zero entry (lines must be invertible)");
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            for (int j = 0; j < n; ++j) {
                int gh = c.group.mul(g, h);
                int hj = c.group.mul(h, j);
                if (c.psi_at(g, h) * c.psi_at(gh, j) != c.psi_at(h, j) * c.psi_at(g, hj))
                    return Verdict::fail("associativity fails at " + triple_str(c.group, g, h, j));
            }
    if (!c.is_two_group()) return Verdict::pass();

    const CrossedModule& x = *c.two_group;
    if (!x.base.same_as(c.group)) return Verdict::fail("crossed module base differs from group");
    int m = x.fiber.order;
    if (static_cast<int>(c.holonomy.size()) != m * n)
        return Verdict::fail("holonomy table size mismatch");
    for (const Scalar& s : c.holonomy)
        if (s.is_zero()) return Verdict::fail("holonomy has a zero entry");
    int eA = x.fiber.identity;
    for (int g = 0; g < n; ++g)
        if (!c.hol_at(eA, g).is_one())
            return Verdict::fail("identity 2-morphism does not act trivially at " + c.group.name(g));
    // Vertical composition: psi_{a'a,g} = psi_{a',delta(a)g} psi_{a,g}.
    for (int a2 = 0; a2 < m; ++a2)
        for (int a1 = 0; a1 < m; ++a1)
            for (int g = 0; g < n; ++g) {
                int mid = c.group.mul(x.delta(a1), g);
                if (c.hol_at(x.fiber.mul(a2, a1), g) != c.hol_at(a2, mid) * c.hol_at(a1, g))
                    return Verdict::fail("vertical composition fails at (a'=" + x.fiber.name(a2) +
                                         ", a=" + x.fiber.name(a1) + ", g=" + c.group.name(g) + ")");
            }
    // Interchange with the compositor: for 2-morphisms (a,g) and (b,h),
    // psi_{a,g} psi_{b,h} psi_{delta(a)g, delta(b)h} = psi_{g,h} psi_{a (g.b), gh}.
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int g = 0; g < n; ++g)
                for (int h = 0; h < n; ++h) {
                    int dg = c.group.mul(x.delta(a), g);
                    int dh = c.group.mul(x.delta(b), h);
                    int gh = c.group.mul(g, h);
                    int hcomp = x.fiber.mul(a, x.act(g, b));
                    Scalar lhs = c.hol_at(a, g) * c.hol_at(b, h) * c.psi_at(dg, dh);
                    Scalar rhs = c.psi_at(g, h) * c.hol_at(hcomp, gh);
                    if (lhs != rhs)
                        return Verdict::fail("interchange fails at (a=" + x.fiber.name(a) + ", b=" +
                                             x.fiber.name(b) + ", g=" + c.group.name(g) + ", h=" +
                                             c.group.name(h) + ")");
                }
    return Verdict::pass();
}

TwoCharacter from_cocycle(const Cocycle& alpha) {
    TwoCharacter c;
    c.group = alpha.group;
    c.line_labels.assign(alpha.group.order, "K");
    c.psi = alpha.values;
    return c;
}

TwoCharacter character_over(const CrossedModule& x, std::vector<Scalar> psi,
                            std::vector<Scalar> holonomy) {
    TwoCharacter c;
    c.group = x.base;
    c.two_group = x;
    c.line_labels.assign(x.base.order, "K");
    c.psi = std::move(psi);
    if (holonomy.empty())
        holonomy.assign(static_cast<size_t>(x.fiber.order) * x.base.order, Scalar(1));
    c.holonomy = std::move(holonomy);
    return c;
}

Scalar commutator_pairing(const Cocycle& alpha, int g, int h) {
    if (alpha.group.mul(g, h) != alpha.group.mul(h, g)) throw NotCommuting();
    return alpha.at(g, h) / alpha.at(h, g);
}

Verdict verify_character_morphism(const CharacterMorphism& m) {
    if (!m.source.group.same_as(m.target.group)) throw GroupMismatch();
    int n = m.source.group.order;
    if (static_cast<int>(m.xi.size()) != n) return Verdict::fail("xi size mismatch");
    for (const Scalar& s : m.xi)
        if (s.is_zero()) return Verdict::fail("xi has a zero entry");
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            int gh = m.source.group.mul(g, h);
            if (m.xi[gh] * m.source.psi_at(g, h) != m.target.psi_at(g, h) * m.xi[g] * m.xi[h])
                return Verdict::fail("morphism condition fails at (" + m.source.group.name(g) +
                                     ", " + m.source.group.name(h) + ")");
        }
    if (m.source.is_two_group() && m.target.is_two_group()) {
        // Naturality against the 2-morphism action: xi_{delta(a)g} psi_{a,g} = psi'_{a,g} xi_g.
        const CrossedModule& x = *m.source.two_group;
        for (int a = 0; a < x.fiber.order; ++a)
            for (int g = 0; g < n; ++g) {
                int dg = m.source.group.mul(x.delta(a), g);
                if (m.xi[dg] * m.source.hol_at(a, g) != m.target.hol_at(a, g) * m.xi[g])
                    return Verdict::fail("holonomy naturality fails at (a=" + x.fiber.name(a) +
                                         ", g=" + m.source.group.name(g) + ")");
            }
    }
    return Verdict::pass();
}

HolonomyReport holonomy_table(const TwoCharacter& c) {
    if (!c.is_two_group()) throw NotTwoGroup();
    HolonomyReport r;
    r.table = c.holonomy;
    for (const Scalar& s : r.table)
        if (!s.is_one()) {
            r.trivial = false;
            break;
        }
    return r;
}

std::optional<std::vector<Scalar>> find_character_morphism(const TwoCharacter& source,
                                                           const TwoCharacter& target,
                                                           long root_bound) {
    if (!source.group.same_as(target.group)) throw GroupMismatch();
    int n = source.group.order;
    std::vector<Scalar> roots;
    for (long j = 0; j < root_bound; ++j) roots.push_back(Scalar::root_of_unity(root_bound, j));
    // xi_e = 1 for normalized characters; scan the remaining coordinates.
    std::vector<Scalar> xi(n, Scalar(1));
    std::vector<int> free;
    for (int g = 0; g < n; ++g)
        if (g != source.group.identity) free.push_back(g);
    std::vector<size_t> choice(free.size(), 0);
    while (true) {
        for (size_t i = 0; i < free.size(); ++i) xi[free[i]] = roots[choice[i]];
        CharacterMorphism m{source, target, xi};
        if (verify_character_morphism(m)) return xi;
        size_t i = 0;
        while (i < choice.size()) {
            if (++choice[i] < roots.size()) break;
            choice[i] = 0;
            ++i;
        }
        if (i == choice.size()) return std::nullopt;
    }
}

}  // namespace cobalt
