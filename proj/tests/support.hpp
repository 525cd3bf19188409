#pragma once

#include <random>
#include <string>
#include <vector>

#include "cobalt/cobword.hpp"
#include "cobalt/frobenius.hpp"
#include "cobalt/matrix.hpp"
#include "cobalt/scalar.hpp"

namespace cobalt::testing {

inline std::string fixture_path(const std::string& name) {
    return std::string(COBALT_FIXTURE_DIR) + "/" + name;
}

using Rng = std::mt19937_64;

inline long rand_range(Rng& rng, long lo, long hi) {  // inclusive
    return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

// Random exact scalar: small rational combination of roots of unity with
// conductor dividing `conductor`.
inline Scalar random_scalar(Rng& rng, long conductor = 12, bool allow_zero = true) {
    Scalar s(0);
    int terms = static_cast<int>(rand_range(rng, allow_zero ? 0 : 1, 2));
    for (int t = 0; t < terms; ++t) {
        Rational coeff(rand_range(rng, -3, 3), rand_range(rng, 1, 3));
        s += Scalar(coeff) * Scalar::root_of_unity(conductor, rand_range(rng, 0, conductor - 1));
    }
    if (!allow_zero && s.is_zero()) s = Scalar(1);
    return s;
}

inline Scalar random_root(Rng& rng, long order) {
    return Scalar::root_of_unity(order, rand_range(rng, 0, order - 1));
}

inline Matrix random_invertible_matrix(Rng& rng, int dim, long conductor = 4) {
    while (true) {
        Matrix m(dim, dim);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                m.at(i, j) = Scalar(rand_range(rng, -2, 2)) *
                             Scalar::root_of_unity(conductor, rand_range(rng, 0, conductor - 1));
        if (!m.determinant().is_zero()) return m;
    }
}

// Change of basis of a Frobenius algebra along an invertible matrix P:
// new basis f_j = sum_i P_{ij} e_i. Exact; preserves all the axioms.
inline FrobeniusAlgebra transport_algebra(const FrobeniusAlgebra& a, const Matrix& p) {
    int d = a.dim;
    Matrix pinv = *p.inverse();
    FrobeniusAlgebra out;
    out.dim = d;
    out.mult.assign(static_cast<size_t>(d) * d * d, Scalar(0));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            // f_i f_j in the old basis
            std::vector<Scalar> x(d, Scalar(0)), y(d, Scalar(0));
            for (int k = 0; k < d; ++k) {
                x[k] = p.at(k, i);
                y[k] = p.at(k, j);
            }
            std::vector<Scalar> prod = a.multiply(x, y);
            for (int k = 0; k < d; ++k) {
                Scalar v(0);
                for (int l = 0; l < d; ++l) v += pinv.at(k, l) * prod[l];
                out.m(i, j, k) = v;
            }
        }
    out.unit.assign(d, Scalar(0));
    out.counit.assign(d, Scalar(0));
    for (int k = 0; k < d; ++k) {
        Scalar u(0), c(0);
        for (int l = 0; l < d; ++l) {
            u += pinv.at(k, l) * a.unit[l];
            c += a.counit[l] * p.at(l, k);
        }
        out.unit[k] = u;
        out.counit[k] = c;
    }
    return out;
}

// Multiplies the counit by an invertible element u: eps_u(x) = eps(u x).
inline FrobeniusAlgebra twist_counit(const FrobeniusAlgebra& a, const std::vector<Scalar>& u) {
    FrobeniusAlgebra out = a;
    for (int k = 0; k < a.dim; ++k) {
        std::vector<Scalar> ek(a.dim, Scalar(0));
        ek[k] = Scalar(1);
        out.counit[k] = a.apply_counit(a.multiply(u, ek));
    }
    return out;
}

// K[x]/x^n truncated polynomial algebra with eps = coefficient of x^{n-1};
// Frobenius, commutative, not semisimple for n >= 2.
inline FrobeniusAlgebra nilpotent_algebra(int n) {
    FrobeniusAlgebra a;
    a.dim = n;
    a.mult.assign(static_cast<size_t>(n) * n * n, Scalar(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i + j < n) a.m(i, j, i + j) = Scalar(1);
    a.unit.assign(n, Scalar(0));
    a.unit[0] = Scalar(1);
    a.counit.assign(n, Scalar(0));
    a.counit[n - 1] = Scalar(1);
    return a;
}

// Split algebra K^n with eps weights (all nonzero).
inline FrobeniusAlgebra split_algebra(const std::vector<Scalar>& weights) {
    int n = static_cast<int>(weights.size());
    FrobeniusAlgebra a;
    a.dim = n;
    a.mult.assign(static_cast<size_t>(n) * n * n, Scalar(0));
    for (int i = 0; i < n; ++i) a.m(i, i, i) = Scalar(1);
    a.unit.assign(n, Scalar(1));
    a.counit = weights;
    return a;
}

// Random well-typed cobordism word, built layerwise so typechecking always
// succeeds; nesting is injected by grouping runs of layers/atoms, so the
// tree depth varies up to ~6.
inline CobWord random_word(Rng& rng, Sector sector, int max_layers = 5) {
    using Comp = Boundary::Comp;
    auto gen_node = [](GenKind g, int width = 1) {
        WordNode n;
        n.kind = WordNode::Kind::Gen;
        n.gen = g;
        n.width = width;
        return n;
    };
    bool closed2d = sector == Sector::TwoClosed;
    Comp plus = closed2d ? Comp::Circle
                         : (sector == Sector::OneD ? Comp::PointPlus : Comp::CylPlus);
    Comp minus = closed2d ? Comp::Circle
                          : (sector == Sector::OneD ? Comp::PointMinus : Comp::CylMinus);

    std::vector<Comp> current;
    for (long i = rand_range(rng, 0, 3); i > 0; --i)
        current.push_back(rng() % 2 ? plus : minus);

    std::vector<WordNode> layers;
    int nlayers = static_cast<int>(rand_range(rng, 1, max_layers));
    for (int l = 0; l < nlayers; ++l) {
        std::vector<WordNode> atoms;
        std::vector<Comp> next;
        size_t i = 0;
        while (i < current.size() || atoms.empty()) {
            int roll = static_cast<int>(rng() % 10);
            if (roll == 0 && closed2d) {  // insert cup
                atoms.push_back(gen_node(GenKind::Cup));
                next.push_back(plus);
                continue;
            }
            if (roll == 1 && !closed2d) {  // insert coev or lbnd
                if (rng() % 2) {
                    atoms.push_back(gen_node(GenKind::Coev));
                    next.push_back(minus);
                    next.push_back(plus);
                } else {
                    atoms.push_back(gen_node(GenKind::Lbnd));
                    next.push_back(plus);
                }
                continue;
            }
            if (i >= current.size()) {
                if (atoms.empty()) atoms.push_back(gen_node(GenKind::Id, 0));
                break;
            }
            bool have_pair = i + 1 < current.size();
            if (have_pair && roll <= 3) {
                atoms.push_back(gen_node(GenKind::Swap));
                next.push_back(current[i + 1]);
                next.push_back(current[i]);
                i += 2;
                continue;
            }
            if (have_pair && roll == 4 && closed2d) {
                atoms.push_back(gen_node(GenKind::Mul));
                next.push_back(plus);
                i += 2;
                continue;
            }
            if (have_pair && roll == 4 && !closed2d && current[i] == plus &&
                current[i + 1] == minus) {
                atoms.push_back(gen_node(GenKind::Ev));
                i += 2;
                continue;
            }
            if (roll == 5 && closed2d) {
                atoms.push_back(gen_node(GenKind::Cap));
                i += 1;
                continue;
            }
            if (roll == 5 && closed2d) {
                atoms.push_back(gen_node(GenKind::Comul));
                next.push_back(plus);
                next.push_back(plus);
                i += 1;
                continue;
            }
            if (roll == 6 && !closed2d && current[i] == plus) {
                atoms.push_back(gen_node(GenKind::Rbnd));
                i += 1;
                continue;
            }
            if (roll == 7 && closed2d) {
                atoms.push_back(gen_node(GenKind::Comul));
                next.push_back(plus);
                next.push_back(plus);
                i += 1;
                continue;
            }
            // default: pass the strand through
            int width = 1;
            while (width < 3 && i + width < current.size() && rng() % 2) ++width;
            atoms.push_back(gen_node(GenKind::Id, width));
            for (int k = 0; k < width; ++k) next.push_back(current[i + k]);
            i += width;
        }
        WordNode layer;
        if (atoms.size() == 1) {
            layer = std::move(atoms[0]);
        } else {
            layer.kind = WordNode::Kind::Par;
            // occasionally nest a run of atoms into an inner Par
            if (atoms.size() >= 3 && rng() % 3 == 0) {
                WordNode inner;
                inner.kind = WordNode::Kind::Par;
                inner.children.assign(atoms.begin(), atoms.begin() + 2);
                std::vector<WordNode> rest(atoms.begin() + 2, atoms.end());
                layer.children.push_back(std::move(inner));
                for (auto& a : rest) layer.children.push_back(std::move(a));
            } else {
                layer.children = std::move(atoms);
            }
        }
        layers.push_back(std::move(layer));
        current = std::move(next);
    }
    CobWord w;
    w.sector = sector;
    if (layers.size() == 1) {
        w.root = std::move(layers[0]);
    } else {
        w.root.kind = WordNode::Kind::Seq;
        // occasionally nest a run of layers into an inner Seq
        if (layers.size() >= 3 && rng() % 3 == 0) {
            WordNode inner;
            inner.kind = WordNode::Kind::Seq;
            inner.children.assign(layers.begin(), layers.begin() + 2);
            std::vector<WordNode> rest(layers.begin() + 2, layers.end());
            w.root.children.push_back(std::move(inner));
            for (auto& l : rest) w.root.children.push_back(std::move(l));
        } else {
            w.root.children = std::move(layers);
        }
    }
    typecheck(w);
    return w;
}

// Random verified commutative Frobenius algebra of dim <= 3: a catalog base
// twisted by a random invertible counit factor and a random change of basis.
inline FrobeniusAlgebra random_commutative_frobenius(Rng& rng, int max_dim = 3) {
    std::vector<FrobeniusAlgebra> bases;
    bases.push_back(field_algebra(Scalar(1)));
    bases.push_back(make_group_algebra(cyclic_group(2)));
    bases.push_back(split_algebra({Scalar(1), Scalar(2)}));
    bases.push_back(nilpotent_algebra(2));
    if (max_dim >= 3) {
        bases.push_back(make_group_algebra(cyclic_group(3)));
        bases.push_back(split_algebra({Scalar(1), Scalar(2), Scalar(Rational(1, 2))}));
        bases.push_back(nilpotent_algebra(3));
    }
    while (true) {
        FrobeniusAlgebra a = bases[rng() % bases.size()];
        // random invertible counit twist
        std::vector<Scalar> u(a.dim);
        for (int i = 0; i < a.dim; ++i) u[i] = random_scalar(rng, 4);
        FrobeniusAlgebra twisted = twist_counit(a, u);
        Matrix p = random_invertible_matrix(rng, a.dim);
        FrobeniusAlgebra out = transport_algebra(twisted, p);
        FrobeniusReport rep = verify_frobenius(out);
        if (rep.verdict.ok && rep.commutative) return out;
    }
}

}  // namespace cobalt::testing
