#include "cobalt/evaluate.hpp"

#include <numeric>

namespace cobalt {

namespace {

size_t ipow(size_t base, size_t e) {
    size_t out = 1;
    while (e--) out *= base;
    return out;
}

Matrix swap_matrix(size_t d) {
    Matrix m(d * d, d * d);
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) m.at(j * d + i, i * d + j) = Scalar(1);
    return m;
}

struct Closed2dOps {
    const FrobeniusAlgebra& a;
    Matrix ginv;

    explicit Closed2dOps(const FrobeniusAlgebra& alg) : a(alg) {
        FrobeniusReport rep = verify_frobenius(a);
        if (!rep.verdict) throw Error("eval_closed_2d: " + rep.verdict.detail);
        if (!rep.commutative) throw NotCommutative();
        ginv = *a.gram().inverse();
    }

    Matrix generator(const WordNode& n) const {
        size_t d = a.dim;
        switch (n.gen) {
            case GenKind::Id: return Matrix::identity(ipow(d, n.width));
            case GenKind::Swap: return swap_matrix(d);
            case GenKind::Cup: {
                Matrix m(d, 1);
                for (size_t i = 0; i < d; ++i) m.at(i, 0) = a.unit[i];
                return m;
            }
            case GenKind::Cap: {
                Matrix m(1, d);
                for (size_t i = 0; i < d; ++i) m.at(0, i) = a.counit[i];
                return m;
            }
            case GenKind::Mul: {
                Matrix m(d, d * d);
                for (size_t i = 0; i < d; ++i)
                    for (size_t j = 0; j < d; ++j)
                        for (size_t k = 0; k < d; ++k) m.at(k, i * d + j) = a.m(i, j, k);
                return m;
            }
            case GenKind::Comul: {
                // Delta(e_k) = sum_i (e_k e^i) (x) e_i with e^i the Gram-dual basis.
                Matrix m(d * d, d);
                for (size_t k = 0; k < d; ++k)
                    for (size_t b = 0; b < d; ++b) {
                        // coefficient of e_x (x) e_b: (e_k e^b)_x
                        for (size_t x = 0; x < d; ++x) {
                            Scalar v(0);
                            for (size_t j = 0; j < d; ++j)
                                v += ginv.at(j, b) * a.m(k, j, x);
                            m.at(x * d + b, k) = v;
                        }
                    }
                return m;
            }
            default:
                throw WordTypeError("generator not valid in the closed 2d sector", n.pos);
        }
    }
};

struct OneDOps {
    const BoundaryCondition& bc;

    Matrix generator(const WordNode& n) const {
        size_t d = bc.dim;
        switch (n.gen) {
            case GenKind::Id: return Matrix::identity(ipow(d, n.width));
            case GenKind::Swap: return swap_matrix(d);
            case GenKind::Ev: {
                Matrix m(1, d * d);
                for (size_t i = 0; i < d; ++i) m.at(0, i * d + i) = Scalar(1);
                return m;
            }
            case GenKind::Coev: {
                Matrix m(d * d, 1);
                for (size_t i = 0; i < d; ++i) m.at(i * d + i, 0) = Scalar(1);
                return m;
            }
            case GenKind::Lbnd: {
                Matrix m(d, 1);
                for (size_t i = 0; i < d; ++i) m.at(i, 0) = bc.v[i];
                return m;
            }
            case GenKind::Rbnd: {
                Matrix m(1, d);
                for (size_t i = 0; i < d; ++i) m.at(0, i) = bc.phi[i];
                return m;
            }
            default:
                throw WordTypeError("generator not valid in the 1d sector", n.pos);
        }
    }
};

template <typename Ops>
Matrix eval_node(const WordNode& n, const Ops& ops) {
    switch (n.kind) {
        case WordNode::Kind::Gen:
            return ops.generator(n);
        case WordNode::Kind::Seq: {
            Matrix acc = eval_node(n.children.front(), ops);
            for (size_t i = 1; i < n.children.size(); ++i)
                acc = eval_node(n.children[i], ops) * acc;  // apply-first order
            return acc;
        }
        case WordNode::Kind::Par: {
            Matrix acc = eval_node(n.children.front(), ops);
            for (size_t i = 1; i < n.children.size(); ++i)
                acc = acc.tensor(eval_node(n.children[i], ops));
            return acc;
        }
    }
    throw Error("eval: corrupt word");
}

}  // namespace

Matrix eval_closed_2d(const CobWord& w, const FrobeniusAlgebra& a) {
    if (w.sector != Sector::TwoClosed) throw WordTypeError("expected a closed 2d word", 0);
    Closed2dOps ops(a);
    return eval_node(w.root, ops);
}

Scalar genus_invariant(int genus, const FrobeniusAlgebra& a) {
    std::vector<Scalar> h = handle_element(a);
    std::vector<Scalar> acc = a.unit;
    for (int i = 0; i < genus; ++i) acc = a.multiply(acc, h);
    return a.apply_counit(acc);
}

BoundaryCondition BoundaryCondition::basis_vector(int dim, int index) {
    BoundaryCondition bc;
    bc.dim = dim;
    bc.v.assign(dim, Scalar(0));
    bc.phi.assign(dim, Scalar(0));
    bc.v[index] = Scalar(1);
    bc.phi[index] = Scalar(1);
    return bc;
}

Matrix eval_1d(const CobWord& w, const BoundaryCondition& bc) {
    if (w.sector != Sector::OneD) throw WordTypeError("expected a 1d word", 0);
    if (static_cast<int>(bc.v.size()) != bc.dim || static_cast<int>(bc.phi.size()) != bc.dim)
        throw Error("boundary condition vectors do not match dim");
    OneDOps ops{bc};
    return eval_node(w.root, ops);
}

CobWord mapping_cylinder(const std::vector<int>& src_signs, const std::vector<int>& tgt_signs,
                         const std::vector<int>& perm) {
    size_t n = src_signs.size();
    if (perm.size() != n || tgt_signs.size() != n)
        throw SignMismatch("bijection must cover all points");
    std::vector<char> hit(n, 0);
    for (size_t i = 0; i < n; ++i) {
        if (perm[i] < 0 || static_cast<size_t>(perm[i]) >= n || hit[perm[i]])
            throw SignMismatch("not a bijection");
        hit[perm[i]] = 1;
        if (tgt_signs[perm[i]] != src_signs[i])
            throw SignMismatch("orientation not preserved at point " + std::to_string(i));
    }
    // Realize the permutation as a network of adjacent transpositions via
    // bubble sort on the target positions.
    std::vector<int> where(n);  // target position of the strand currently at slot p
    for (size_t i = 0; i < n; ++i) where[i] = perm[i];
    std::vector<int> swaps;  // positions of adjacent swaps, in order
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t p = 0; p + 1 < n; ++p)
            if (where[p] > where[p + 1]) {
                std::swap(where[p], where[p + 1]);
                swaps.push_back(static_cast<int>(p));
                changed = true;
            }
    }
    auto gen = [](GenKind g, int width = 1) {
        WordNode node;
        node.kind = WordNode::Kind::Gen;
        node.gen = g;
        node.width = width;
        return node;
    };
    CobWord w;
    w.sector = Sector::OneD;
    if (swaps.empty()) {
        w.root = gen(GenKind::Id, static_cast<int>(n));
    } else {
        std::vector<WordNode> layers;
        for (int p : swaps) {
            std::vector<WordNode> row;
            if (p > 0) row.push_back(gen(GenKind::Id, p));
            row.push_back(gen(GenKind::Swap));
            int rest = static_cast<int>(n) - p - 2;
            if (rest > 0) row.push_back(gen(GenKind::Id, rest));
            if (row.size() == 1) {
                layers.push_back(std::move(row[0]));
            } else {
                WordNode par;
                par.kind = WordNode::Kind::Par;
                par.children = std::move(row);
                layers.push_back(std::move(par));
            }
        }
        if (layers.size() == 1) {
            w.root = std::move(layers[0]);
        } else {
            w.root.kind = WordNode::Kind::Seq;
            w.root.children = std::move(layers);
        }
    }
    typecheck(w);
    // Pin the inferred strand kinds to the requested signs by re-deriving
    // the source object; polymorphic ids default to '+', so fix manually.
    w.root.src.comps.clear();
    w.root.tgt.comps.clear();
    for (size_t i = 0; i < n; ++i)
        w.root.src.comps.push_back(src_signs[i] >= 0 ? Boundary::Comp::PointPlus
                                                     : Boundary::Comp::PointMinus);
    for (size_t i = 0; i < n; ++i)
        w.root.tgt.comps.push_back(tgt_signs[i] >= 0 ? Boundary::Comp::PointPlus
                                                     : Boundary::Comp::PointMinus);
    return w;
}

std::vector<Scalar> transmission(const FiniteGroup& g, const ProjRep& rho) {
    for (const Scalar& s : rho.cocycle.values)
        if (!s.is_one()) throw TwistedInput();
    if (!g.same_as(rho.group)) throw GroupMismatch();
    std::vector<Scalar> out;
    for (const auto& cls : conjugacy_classes(g)) {
        const Matrix& m = rho.mats[cls.front()];
        Scalar tr(0);
        for (size_t i = 0; i < m.rows(); ++i) tr += m.at(i, i);
        out.push_back(tr);
    }
    return out;
}

}  // namespace cobalt
