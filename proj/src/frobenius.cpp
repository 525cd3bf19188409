#include "cobalt/frobenius.hpp"

namespace cobalt {

std::vector<Scalar> FrobeniusAlgebra::multiply(const std::vector<Scalar>& x,
                                               const std::vector<Scalar>& y) const {
    std::vector<Scalar> out(dim, Scalar(0));
    for (int i = 0; i < dim; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < dim; ++j) {
            if (y[j].is_zero()) continue;
            Scalar f = x[i] * y[j];
            for (int k = 0; k < dim; ++k) {
                if (m(i, j, k).is_zero()) continue;
                out[k] += f * m(i, j, k);
            }
        }
    }
    return out;
}

Scalar FrobeniusAlgebra::apply_counit(const std::vector<Scalar>& x) const {
    Scalar out(0);
    for (int i = 0; i < dim; ++i) out += counit[i] * x[i];
    return out;
}

Matrix FrobeniusAlgebra::left_mult_matrix(int i) const {
    Matrix out(dim, dim);
    for (int j = 0; j < dim; ++j)
        for (int k = 0; k < dim; ++k) out.at(k, j) = m(i, j, k);
    return out;
}

Matrix FrobeniusAlgebra::gram() const {
    Matrix g(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            Scalar v(0);
            for (int k = 0; k < dim; ++k) v += m(i, j, k) * counit[k];
            g.at(i, j) = v;
        }
    return g;
}

FrobeniusAlgebra make_group_algebra(const FiniteGroup& g) {
    FrobeniusAlgebra a;
    a.dim = g.order;
    a.mult.assign(static_cast<size_t>(g.order) * g.order * g.order, Scalar(0));
    for (int i = 0; i < g.order; ++i)
        for (int j = 0; j < g.order; ++j) a.m(i, j, g.mul(i, j)) = Scalar(1);
    a.unit.assign(g.order, Scalar(0));
    a.unit[g.identity] = Scalar(1);
    a.counit.assign(g.order, Scalar(0));
    a.counit[g.identity] = Scalar(1);
    return a;
}

FrobeniusAlgebra field_algebra(const Scalar& lambda) {
    FrobeniusAlgebra a;
    a.dim = 1;
    a.mult = {Scalar(1)};
    a.unit = {Scalar(1)};
    a.counit = {lambda};
    return a;
}

FrobeniusReport verify_frobenius(const FrobeniusAlgebra& a) {
    FrobeniusReport rep;
    int d = a.dim;
    if (static_cast<int>(a.mult.size()) != d * d * d || static_cast<int>(a.unit.size()) != d ||
        static_cast<int>(a.counit.size()) != d) {
        rep.verdict = Verdict::fail("tensor shapes do not match dim");
        return rep;
    }
    // Associativity on basis triples.
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                std::vector<Scalar> ei(d, Scalar(0)), ej(d, Scalar(0)), ek(d, Scalar(0));
                ei[i] = Scalar(1);
                ej[j] = Scalar(1);
                ek[k] = Scalar(1);
                auto lhs = a.multiply(a.multiply(ei, ej), ek);
                auto rhs = a.multiply(ei, a.multiply(ej, ek));
                if (lhs != rhs) {
                    rep.verdict = Verdict::fail("associativity fails at basis (" +
                                                std::to_string(i) + "," + std::to_string(j) + "," +
                                                std::to_string(k) + ")");
                    return rep;
                }
            }
    // Unitality.
    for (int i = 0; i < d; ++i) {
        std::vector<Scalar> ei(d, Scalar(0));
        ei[i] = Scalar(1);
        if (a.multiply(a.unit, ei) != ei || a.multiply(ei, a.unit) != ei) {
            rep.verdict = Verdict::fail("unit fails at basis " + std::to_string(i));
            return rep;
        }
    }
    if (a.gram().determinant().is_zero()) {
        rep.verdict = Verdict::fail("counit pairing is degenerate");
        return rep;
    }
    rep.verdict = Verdict::pass();
    rep.commutative = true;
    for (int i = 0; i < d && rep.commutative; ++i)
        for (int j = 0; j < d && rep.commutative; ++j)
            for (int k = 0; k < d; ++k)
                if (a.m(i, j, k) != a.m(j, i, k)) {
                    rep.commutative = false;
                    break;
                }
    Matrix g = a.gram();
    rep.symmetric = g == g.transpose();
    return rep;
}

std::vector<std::vector<Scalar>> center(const FrobeniusAlgebra& a) {
    int d = a.dim;
    // Rows: one equation per (z, k): sum_i x_i (m(i,z,k) - m(z,i,k)) = 0.
    Matrix sys(d * d, d);
    for (int z = 0; z < d; ++z)
        for (int k = 0; k < d; ++k)
            for (int i = 0; i < d; ++i)
                sys.at(z * d + k, i) = a.m(i, z, k) - a.m(z, i, k);
    return nullspace(sys);
}

std::vector<Scalar> handle_element(const FrobeniusAlgebra& a) {
    FrobeniusReport rep = verify_frobenius(a);
    if (!rep.verdict) throw Error("handle_element: " + rep.verdict.detail);
    if (!rep.commutative) throw NotCommutative();
    Matrix ginv = *a.gram().inverse();
    int d = a.dim;
    std::vector<Scalar> h(d, Scalar(0));
    // e^i = sum_j (G^{-1})_{ji} e_j satisfies eps(e^i e_j) = delta_ij.
    for (int i = 0; i < d; ++i) {
        std::vector<Scalar> dual(d, Scalar(0));
        for (int j = 0; j < d; ++j) dual[j] = ginv.at(j, i);
        std::vector<Scalar> ei(d, Scalar(0));
        ei[i] = Scalar(1);
        auto prod = a.multiply(ei, dual);
        for (int k = 0; k < d; ++k) h[k] += prod[k];
    }
    return h;
}

bool is_semisimple(const FrobeniusAlgebra& a) {
    int d = a.dim;
    std::vector<Matrix> left;
    for (int i = 0; i < d; ++i) left.push_back(a.left_mult_matrix(i));
    Matrix trace_form(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Matrix p = left[i] * left[j];
            Scalar tr(0);
            for (int k = 0; k < d; ++k) tr += p.at(k, k);
            trace_form.at(i, j) = tr;
        }
    return !trace_form.determinant().is_zero();
}

Matrix AlgModule::act(const std::vector<Scalar>& x) const {
    Matrix out(dim, dim);
    for (int i = 0; i < algebra.dim; ++i) {
        if (x[i].is_zero()) continue;
        out = out + action[i].scaled(x[i]);
    }
    return out;
}

Verdict verify_module(const AlgModule& mod) {
    const FrobeniusAlgebra& a = mod.algebra;
    if (static_cast<int>(mod.action.size()) != a.dim)
        return Verdict::fail("action matrix count differs from algebra dim");
    for (const Matrix& m : mod.action)
        if (m.rows() != static_cast<size_t>(mod.dim) || m.cols() != static_cast<size_t>(mod.dim))
            return Verdict::fail("action matrix shape differs from module dim");
    if (!mod.act(a.unit).is_identity()) return Verdict::fail("unit does not act as identity");
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) {
            Matrix rhs(mod.dim, mod.dim);
            for (int k = 0; k < a.dim; ++k) {
                if (a.m(i, j, k).is_zero()) continue;
                rhs = rhs + mod.action[k].scaled(a.m(i, j, k));
            }
            if (mod.action[i] * mod.action[j] != rhs)
                return Verdict::fail("action fails multiplicativity at basis (" +
                                     std::to_string(i) + "," + std::to_string(j) + ")");
        }
    return Verdict::pass();
}

AlgModule regular_module(const FrobeniusAlgebra& a) {
    AlgModule m;
    m.algebra = a;
    m.dim = a.dim;
    for (int i = 0; i < a.dim; ++i) m.action.push_back(a.left_mult_matrix(i));
    return m;
}

HomBasis hom_modules(const AlgModule& ra, const AlgModule& rb) {
    if (ra.algebra.dim != rb.algebra.dim || ra.algebra.mult != rb.algebra.mult ||
        ra.algebra.unit != rb.algebra.unit || ra.algebra.counit != rb.algebra.counit)
        throw AlgebraMismatch();
    int da = ra.dim, db = rb.dim, n = ra.algebra.dim;
    // Unknown T is db x da; equations T rho_a(e_x) - rho_b(e_x) T = 0.
    Matrix sys(n * db * da, db * da);
    for (int x = 0; x < n; ++x) {
        const Matrix& A = ra.action[x];
        const Matrix& B = rb.action[x];
        for (int i = 0; i < db; ++i)
            for (int j = 0; j < da; ++j) {
                size_t row = (static_cast<size_t>(x) * db + i) * da + j;
                // (T A)_{ij} = sum_k T_{ik} A_{kj}; (B T)_{ij} = sum_k B_{ik} T_{kj}.
                for (int k = 0; k < da; ++k) sys.at(row, i * da + k) += A.at(k, j);
                for (int k = 0; k < db; ++k) sys.at(row, k * da + j) -= B.at(i, k);
            }
    }
    HomBasis out;
    for (auto& vec : nullspace(sys)) {
        Matrix t(db, da, std::move(vec));
        out.basis.push_back(std::move(t));
    }
    out.dim = static_cast<int>(out.basis.size());
    return out;
}

}  // namespace cobalt
