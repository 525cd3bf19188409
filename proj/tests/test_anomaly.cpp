#include <doctest.h>

#include "cobalt/anomaly.hpp"
#include "support.hpp"

using namespace cobalt;
using cobalt::testing::Rng;

namespace {

int find_morphism(const LineModel& lm, const std::string& src, const std::string& tgt,
                  const std::string& display) {
    for (size_t i = 0; i < lm.model.morphisms.size(); ++i) {
        const auto& m = lm.model.morphisms[i];
        if (lm.model.objects[m.src] == src && lm.model.objects[m.tgt] == tgt &&
            lm.matchings[i].display() == display)
            return static_cast<int>(i);
    }
    REQUIRE(false);
    return -1;
}

BoundaryCondition random_bc(Rng& rng, int dim) {
    BoundaryCondition bc;
    bc.dim = dim;
    for (int i = 0; i < dim; ++i) {
        bc.v.push_back(cobalt::testing::random_scalar(rng, 4));
        bc.phi.push_back(cobalt::testing::random_scalar(rng, 4));
    }
    return bc;
}

// The strict 2-group with base = fiber = Z2, identity boundary, and the
// psi_{1,g} = -1 holonomy character.
CrossedModule z2_id_module() {
    CrossedModule x;
    x.base = cyclic_group(2);
    x.fiber = cyclic_group(2);
    x.boundary = {0, 1};
    x.action = {{0, 1}, {0, 1}};
    return x;
}

TwoCharacter minus_holonomy_character(const CrossedModule& x) {
    std::vector<Scalar> hol = {Scalar(1), Scalar(1), Scalar(-1), Scalar(-1)};
    return character_over(x, std::vector<Scalar>(4, Scalar(1)), hol);
}

}  // namespace

TEST_CASE("line model shape") {
    LineModel lm = build_line_model({1, 1});
    // objects: "", "+", "-"
    CHECK(lm.model.objects.size() == 3);
    CHECK(lm.model.identities.size() == 3);
    for (size_t o = 0; o < lm.model.objects.size(); ++o) {
        int id = lm.model.identities[o];
        CHECK(lm.model.morphisms[id].src == static_cast<int>(o));
        CHECK(lm.model.morphisms[id].tgt == static_cast<int>(o));
        CHECK(lm.matchings[id].circles == 0);
        CHECK(lm.matchings[id].arcs == 0);
    }
    // the circle and the fully constrained arc are endomorphisms of the unit
    find_morphism(lm, "0", "0", "empty;c=1");
    find_morphism(lm, "0", "0", "empty;a=1");
    find_morphism(lm, "0", "+", "t0-cap");   // lbnd
    find_morphism(lm, "+", "0", "s0-cap");   // rbnd

    LineModel lm2 = build_line_model({2, 1});
    CHECK(lm2.model.objects.size() == 7);
    find_morphism(lm2, "+-", "0", "s0-s1");  // ev
    find_morphism(lm2, "0", "-+", "t0-t1");  // coev
}

TEST_CASE("euler anomaly passes coherence for all lambda in the catalog") {
    LineModel lm = build_line_model({2, 1});
    for (const char* lam : {"1", "2", "1/2", "q4"}) {
        SemitrivializedAnomaly w = euler_anomaly(lm, parse_scalar(lam));
        CHECK(verify_anomaly(w).ok);
    }
}

TEST_CASE("perturbed psi entries are caught with a witness") {
    LineModel lm = build_line_model({1, 1});
    SemitrivializedAnomaly w = euler_anomaly(lm, Scalar(2));

    int lbnd = find_morphism(lm, "0", "+", "t0-cap");
    int rbnd = find_morphism(lm, "+", "0", "s0-cap");
    int empty_id = lm.model.identities[0];

    // unit condition: psi against the trivial cobordism
    SemitrivializedAnomaly bad = w;
    bad.psi[{empty_id, rbnd}] = Scalar(7);
    Verdict v1 = verify_anomaly(bad);
    CHECK_FALSE(v1.ok);
    CHECK(v1.detail.find("trivial cobordism") != std::string::npos);

    // associativity: perturb the arc-forming pair rbnd after lbnd
    SemitrivializedAnomaly bad2 = w;
    bad2.psi[{rbnd, lbnd}] *= Scalar(3);
    Verdict v2 = verify_anomaly(bad2);
    CHECK_FALSE(v2.ok);
    CHECK(v2.detail.find("psi associativity fails") != std::string::npos);
}

TEST_CASE("reduce_boundary: honest boundary pair at lambda = 1") {
    BoundaryCondition bc;
    bc.dim = 3;
    bc.v = {Scalar(1), Scalar(0), Scalar(0)};
    bc.phi = {Scalar(1), Scalar(0), Scalar(0)};
    AnomalousTheory z = reduce_boundary(Scalar(1), bc, {1, 1});
    CHECK(verify_anomalous_theory(z).ok);

    LineModel lm = build_line_model({1, 1});
    int circle = find_morphism(lm, "0", "0", "empty;c=1");
    int arc = find_morphism(lm, "0", "0", "empty;a=1");
    CHECK(z.maps[circle].at(0, 0) == Scalar(3));  // dim V
    CHECK(z.maps[arc].at(0, 0) == Scalar(1));     // phi(v)

    // generator maps agree with 1d word evaluation
    int lbnd = find_morphism(lm, "0", "+", "t0-cap");
    CHECK(z.maps[lbnd] == eval_1d(parse_word("lbnd", Sector::OneD), bc));
    int idp = lm.model.identities[1];
    CHECK(z.maps[idp].is_identity());
}

TEST_CASE("reduce_boundary passes coherence for random tables and all lambdas") {
    Rng rng(73);
    for (const char* lam : {"1", "2", "1/2", "q4"}) {
        Scalar lambda = parse_scalar(lam);
        for (int t = 0; t < 5; ++t) {
            BoundaryCondition bc = random_bc(rng, 1 + static_cast<int>(rng() % 3));
            AnomalousTheory z = reduce_boundary(lambda, bc, {2, 1});
            CHECK(verify_anomalous_theory(z).ok);
        }
    }
}

TEST_CASE("euler lines scale closed pieces by lambda powers") {
    BoundaryCondition bc;
    bc.dim = 2;
    bc.v = {Scalar(1), Scalar(2)};
    bc.phi = {Scalar(3), Scalar(1)};
    Scalar lambda(Rational(5, 7));
    AnomalousTheory z = reduce_boundary(lambda, bc, {1, 1});
    LineModel lm = build_line_model({1, 1});
    int arc = find_morphism(lm, "0", "0", "empty;a=1");
    int circle = find_morphism(lm, "0", "0", "empty;c=1");
    Scalar pairing = bc.phi[0] * bc.v[0] + bc.phi[1] * bc.v[1];
    CHECK(z.maps[arc].at(0, 0) == lambda * pairing);  // disk weight lambda
    CHECK(z.maps[circle].at(0, 0) == Scalar(2));      // annulus weight 1
    CHECK(z.anomaly.lines[arc] == "lambda^1");
    CHECK(z.anomaly.lines[circle] == "1");
}

TEST_CASE("perturbed theory maps fail anom2 with the pair named") {
    BoundaryCondition bc = BoundaryCondition::basis_vector(2, 0);
    AnomalousTheory z = reduce_boundary(Scalar(2), bc, {1, 1});
    LineModel lm = build_line_model({1, 1});
    int lbnd = find_morphism(lm, "0", "+", "t0-cap");
    z.maps[lbnd] = z.maps[lbnd].scaled(Scalar(5));
    Verdict v = verify_anomalous_theory(z);
    CHECK_FALSE(v.ok);
    CHECK(v.detail.find("anom2") != std::string::npos);
}

TEST_CASE("reduce_boundary rejects inconsistent input") {
    BoundaryCondition bc = BoundaryCondition::basis_vector(2, 0);
    CHECK_THROWS_AS(reduce_boundary(Scalar(0), bc, {1, 1}), InconsistentBoundaryData);
    BoundaryCondition bad = bc;
    bad.phi.pop_back();
    CHECK_THROWS_AS(reduce_boundary(Scalar(1), bad, {1, 1}), InconsistentBoundaryData);
}

TEST_CASE("trivial anomaly collapse: coherent maps = functor") {
    // with psi identically 1 (lambda = 1) anom2 says the maps compose
    // strictly, i.e. they define a functor on the model
    BoundaryCondition bc = BoundaryCondition::basis_vector(2, 1);
    AnomalousTheory z = reduce_boundary(Scalar(1), bc, {1, 1});
    for (const auto& [pair, s] : z.anomaly.psi) CHECK(s.is_one());
    for (const auto& [pair, comp] : z.anomaly.model.composition)
        CHECK(z.maps[pair.first] * z.maps[pair.second] == z.maps[comp]);
}

TEST_CASE("two-group anomaly bridge") {
    CrossedModule x = z2_id_module();
    TwoCharacter c = minus_holonomy_character(x);
    REQUIRE(verify_two_character(c).ok);

    SemitrivializedAnomaly w = two_group_anomaly(x, c);
    CHECK(verify_anomaly(w).ok);

    TwoCharacter back = anomaly_character(w, 0, x);
    CHECK(verify_two_character(back).ok);
    CHECK(back.psi == c.psi);
    CHECK(back.holonomy == c.holonomy);

    // anomalous theory over the bridge model: the (I, -I) fixed point
    AnomalousTheory z;
    z.anomaly = w;
    z.dims = {2};
    z.maps = {Matrix::identity(2), Matrix::identity(2).scaled(Scalar(-1))};
    CHECK(verify_anomalous_theory(z).ok);

    // breaking anom1: forget the sign on M_g
    AnomalousTheory zbad = z;
    zbad.maps[1] = Matrix::identity(2);
    Verdict v = verify_anomalous_theory(zbad);
    CHECK_FALSE(v.ok);
    CHECK(v.detail.find("anom1") != std::string::npos);

    // psi against a trivial cobordism must be 1; on Z2 every normalized
    // table satisfies the associativity identity, so corrupt the unit row
    TwoCharacter broken = c;
    broken.psi_at(0, 1) = Scalar(7);
    SemitrivializedAnomaly wb = two_group_anomaly(x, broken);
    Verdict vb = verify_anomaly(wb);
    CHECK_FALSE(vb.ok);
    CHECK(vb.detail.find("trivial cobordism") != std::string::npos);
}

TEST_CASE("anomaly to character restriction validates the model") {
    CrossedModule x = z2_id_module();
    TwoCharacter c = minus_holonomy_character(x);
    SemitrivializedAnomaly w = two_group_anomaly(x, c);
    // wrong crossed module: base of order 4
    CrossedModule x4;
    x4.base = cyclic_group(4);
    x4.fiber = cyclic_group(2);
    x4.boundary = {0, 0};
    x4.action = {{0, 1}, {0, 1}, {0, 1}, {0, 1}};
    CHECK_THROWS_AS(anomaly_character(w, 0, x4), FormatError);
}
