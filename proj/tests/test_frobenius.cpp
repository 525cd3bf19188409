#include <doctest.h>

#include "cobalt/frobenius.hpp"
#include "support.hpp"

using namespace cobalt;
using cobalt::testing::Rng;

TEST_CASE("group algebras") {
    FrobeniusAlgebra kz2 = make_group_algebra(cyclic_group(2));
    FrobeniusReport rep = verify_frobenius(kz2);
    CHECK(rep.verdict.ok);
    CHECK(rep.commutative);
    CHECK(rep.symmetric);
    // Gram matrix <g,h> = 1 iff gh = e; for Z2 that is the identity matrix
    CHECK(kz2.gram() == Matrix::identity(2));

    FrobeniusAlgebra k1 = make_group_algebra(trivial_group());
    CHECK(k1.dim == 1);
    CHECK(k1.apply_counit(k1.unit).is_one());

    FrobeniusAlgebra ks3 = make_group_algebra(symmetric_group(3));
    FrobeniusReport rep3 = verify_frobenius(ks3);
    CHECK(rep3.verdict.ok);
    CHECK_FALSE(rep3.commutative);
    CHECK(rep3.symmetric);
    CHECK_FALSE(ks3.gram().determinant().is_zero());
}

TEST_CASE("verify_frobenius flags and failures") {
    FrobeniusReport f = verify_frobenius(field_algebra(Scalar(Rational(7, 2))));
    CHECK(f.verdict.ok);
    CHECK(f.commutative);

    FrobeniusAlgebra kz3 = make_group_algebra(cyclic_group(3));
    CHECK(verify_frobenius(kz3).verdict.ok);
    CHECK(verify_frobenius(kz3).commutative);

    // counit = coefficient of the non-identity element of K[Z2]: the Gram
    // matrix is the swap, still invertible
    FrobeniusAlgebra twisted = make_group_algebra(cyclic_group(2));
    twisted.counit = {Scalar(0), Scalar(1)};
    CHECK(verify_frobenius(twisted).verdict.ok);

    // zero counit kills the pairing
    FrobeniusAlgebra broken = make_group_algebra(cyclic_group(2));
    broken.counit = {Scalar(0), Scalar(0)};
    Verdict v = verify_frobenius(broken).verdict;
    CHECK_FALSE(v.ok);
    CHECK(v.detail.find("degenerate") != std::string::npos);

    // corrupt associativity
    FrobeniusAlgebra assoc = make_group_algebra(cyclic_group(3));
    assoc.m(1, 1, 0) = Scalar(1);
    CHECK_FALSE(verify_frobenius(assoc).verdict.ok);
}

TEST_CASE("center dimensions match conjugacy class counts") {
    for (const char* spec : {"cyclic(1)", "cyclic(4)", "symmetric(3)", "dihedral(4)",
                             "product(cyclic(2),cyclic(3))"}) {
        FiniteGroup g = parse_group_spec(spec);
        FrobeniusAlgebra a = make_group_algebra(g);
        CHECK(center(a).size() == conjugacy_classes(g).size());
    }
    // commutative algebra: full space
    CHECK(center(make_group_algebra(cyclic_group(3))).size() == 3);
    CHECK(center(field_algebra(Scalar(2))).size() == 1);
}

TEST_CASE("handle element") {
    // K with eps(1) = lambda: H = 1/lambda
    Scalar lambda(Rational(3, 5));
    auto h = handle_element(field_algebra(lambda));
    CHECK(h[0] == lambda.inverse());

    // K[Z2]: H = 2e
    auto h2 = handle_element(make_group_algebra(cyclic_group(2)));
    CHECK(h2[0] == Scalar(2));
    CHECK(h2[1] == Scalar(0));

    CHECK_THROWS_AS(handle_element(make_group_algebra(symmetric_group(3))), NotCommutative);

    // basis-change invariance: transported handle equals handle of transported algebra
    Rng rng(47);
    for (int t = 0; t < 10; ++t) {
        FrobeniusAlgebra a = cobalt::testing::random_commutative_frobenius(rng);
        Matrix p = cobalt::testing::random_invertible_matrix(rng, a.dim);
        FrobeniusAlgebra b = cobalt::testing::transport_algebra(a, p);
        auto ha = handle_element(a);
        auto hb = handle_element(b);
        // map hb back along p: e'_j = sum_i p_{ij} e_i
        std::vector<Scalar> back(a.dim, Scalar(0));
        for (int i = 0; i < a.dim; ++i)
            for (int j = 0; j < a.dim; ++j) back[i] += p.at(i, j) * hb[j];
        CHECK(back == ha);
    }
}

TEST_CASE("semisimplicity via the regular trace form") {
    for (const char* spec : {"cyclic(2)", "cyclic(3)", "symmetric(3)", "dihedral(4)"})
        CHECK(is_semisimple(make_group_algebra(parse_group_spec(spec))));
    CHECK(is_semisimple(field_algebra(Scalar(1))));
    // K[x]/x^2 is Frobenius but not semisimple
    FrobeniusAlgebra nil = cobalt::testing::nilpotent_algebra(2);
    CHECK(verify_frobenius(nil).verdict.ok);
    CHECK_FALSE(is_semisimple(nil));
}

TEST_CASE("torus value equals dim for semisimple group algebras") {
    for (const char* spec : {"cyclic(2)", "cyclic(3)", "cyclic(6)", "symmetric(3)"}) {
        FiniteGroup g = parse_group_spec(spec);
        FrobeniusAlgebra a = make_group_algebra(g);
        if (!verify_frobenius(a).commutative) continue;
        std::vector<Scalar> h = handle_element(a);
        CHECK(a.apply_counit(h) == Scalar(g.order));
    }
}

TEST_CASE("modules and intertwiners") {
    FrobeniusAlgebra kz2 = make_group_algebra(cyclic_group(2));
    AlgModule reg = regular_module(kz2);
    CHECK(verify_module(reg).ok);
    HomBasis endo = hom_modules(reg, reg);
    CHECK(endo.dim == 2);
    // the identity lies in the span: solve id = sum c_i B_i by checking the
    // span dimension does not grow
    bool contains_identity = false;
    for (int i = 0; i < endo.dim && !contains_identity; ++i)
        contains_identity = endo.basis[i] == Matrix::identity(2);
    if (!contains_identity) {
        // generic check: append identity and confirm the solution space of
        // the intertwiner equations still has dimension 2 (identity is an
        // intertwiner always)
        Matrix id = Matrix::identity(2);
        bool intertwines = true;
        for (int x = 0; x < kz2.dim; ++x)
            intertwines = intertwines && (id * reg.action[x] == reg.action[x] * id);
        CHECK(intertwines);
    }

    // trivial vs sign module of K[Z2]
    AlgModule triv{kz2, 1, {Matrix::identity(1), Matrix::identity(1)}};
    AlgModule sign{kz2, 1, {Matrix::identity(1), Matrix::identity(1).scaled(Scalar(-1))}};
    CHECK(verify_module(triv).ok);
    CHECK(verify_module(sign).ok);
    CHECK(hom_modules(triv, sign).dim == 0);
    CHECK(hom_modules(triv, triv).dim == 1);

    // dimensions are symmetric for the semisimple catalog
    CHECK(hom_modules(sign, triv).dim == hom_modules(triv, sign).dim);
    CHECK(hom_modules(reg, triv).dim == hom_modules(triv, reg).dim);

    AlgModule other{make_group_algebra(cyclic_group(3)), 1,
                    {Matrix::identity(1), Matrix::identity(1), Matrix::identity(1)}};
    CHECK_THROWS_AS(hom_modules(triv, other), AlgebraMismatch);

    // broken action caught
    AlgModule bad = sign;
    bad.action[0] = Matrix::identity(1).scaled(Scalar(2));
    CHECK_FALSE(verify_module(bad).ok);
}

TEST_CASE("random commutative Frobenius generator is sound") {
    Rng rng(53);
    for (int t = 0; t < 10; ++t) {
        FrobeniusAlgebra a = cobalt::testing::random_commutative_frobenius(rng);
        FrobeniusReport rep = verify_frobenius(a);
        CHECK(rep.verdict.ok);
        CHECK(rep.commutative);
        CHECK(a.dim <= 3);
    }
}
