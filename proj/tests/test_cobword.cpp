#include <doctest.h>

#include "cobalt/cobword.hpp"
#include "support.hpp"

using namespace cobalt;
using cobalt::testing::Rng;

TEST_CASE("parsing and typechecking closed 2d words") {
    CobWord sphere = parse_word("cup ; cap", Sector::TwoClosed);
    CHECK(sphere.source().to_string() == "circles:0");
    CHECK(sphere.target().to_string() == "circles:0");

    CobWord torus = parse_word("cup ; comul ; mul ; cap", Sector::TwoClosed);
    CHECK(torus.source().comps.empty());
    CHECK(torus.target().comps.empty());
    // inner boundary chain 0 -> 1 -> 2 -> 1 -> 0 circles
    REQUIRE(torus.root.kind == WordNode::Kind::Seq);
    CHECK(torus.root.children[1].tgt.to_string() == "circles:2");

    CHECK_THROWS_AS(parse_word("mul ; cup", Sector::TwoClosed), WordTypeError);
    CHECK_THROWS_AS(parse_word("cup ; ev", Sector::TwoClosed), WordTypeError);
    CHECK_THROWS_AS(parse_word("cup ;; cap", Sector::TwoClosed), ParseError);
    CHECK_THROWS_AS(parse_word("cup ; glue", Sector::TwoClosed), ParseError);
    try {
        parse_word("mul ; cup", Sector::TwoClosed);
        CHECK(false);
    } catch (const WordTypeError& e) {
        CHECK(std::string(e.what()).find("position") != std::string::npos);
    }
}

TEST_CASE("parsing and sign inference in 1d") {
    CobWord circle = parse_word("coev ; swap ; ev", Sector::OneD);
    CHECK(circle.source().to_string() == "0");
    CHECK(circle.target().to_string() == "0");

    CobWord strip = parse_word("lbnd ; rbnd", Sector::OneD);
    CHECK(strip.source().comps.empty());
    CHECK(strip.target().comps.empty());

    // id strand signs propagate backwards from rbnd
    CobWord w = parse_word("id1 ; rbnd", Sector::OneD);
    CHECK(w.source().to_string() == "+");

    // unconstrained strands default to '+'
    CobWord free = parse_word("id2", Sector::OneD);
    CHECK(free.source().to_string() == "++");

    CobWord zig = parse_word("(id1 | coev) ; (ev | id1)", Sector::OneD);
    CHECK(zig.source().to_string() == "+");
    CHECK(zig.target().to_string() == "+");

    CobWord zag = parse_word("(coev | id1) ; (id1 | ev)", Sector::OneD);
    CHECK(zag.source().to_string() == "-");
    CHECK(zag.target().to_string() == "-");

    // conflicting sign constraints are type errors
    CHECK_THROWS_AS(parse_word("lbnd ; ev", Sector::OneD), WordTypeError);
    CHECK_THROWS_AS(parse_word("coev ; ev", Sector::OneD), WordTypeError);
    CHECK_THROWS_AS(parse_word("cup", Sector::OneD), WordTypeError);

    // empty word is the identity of the monoidal unit
    CobWord empty = parse_word("   ", Sector::OneD);
    CHECK(empty.root.kind == WordNode::Kind::Gen);
    CHECK(empty.root.width == 0);
}

TEST_CASE("serialization round trips structurally") {
    for (const char* text : {"cup ; cap", "cup ; comul ; mul ; cap", "(mul | id1) ; mul",
                             "cup ; (comul ; mul) ; cap", "(swap | swap) ; (id2 | swap)"}) {
        CobWord w = parse_word(text, Sector::TwoClosed);
        CobWord re = parse_word(serialize_word(w), Sector::TwoClosed);
        CHECK(re.structurally_equal(w));
    }
    CHECK(serialize_word(parse_word("cup;cap", Sector::TwoClosed)) == "cup ; cap");
    CHECK(serialize_word(parse_word("cup ; ((comul ; mul)) ; cap", Sector::TwoClosed)) ==
          "cup ; (comul ; mul) ; cap");

    Rng rng(59);
    for (int t = 0; t < 300; ++t) {
        Sector s = t % 2 ? Sector::OneD : Sector::TwoClosed;
        CobWord w = cobalt::testing::random_word(rng, s);
        CobWord re = parse_word(serialize_word(w), s);
        CHECK(re.structurally_equal(w));
        CHECK(serialize_word(re) == serialize_word(w));
    }
}

TEST_CASE("cylinderize is structural and functorial") {
    CobWord idp = parse_word("id1", Sector::OneD);
    CobWord sq = cylinderize(idp);
    CHECK(sq.sector == Sector::TwoConstrained);
    CHECK(sq.source().to_string() == "[+");
    CHECK(sq.target().to_string() == "[+");

    CobWord half = cylinderize(parse_word("lbnd", Sector::OneD));
    CHECK(half.source().to_string() == "0");
    CHECK(half.target().to_string() == "[+");

    CobWord bent = cylinderize(parse_word("ev", Sector::OneD));
    CHECK(bent.source().to_string() == "[+[-");

    // structural functoriality on nested words
    CobWord w1 = parse_word("(coev | coev) ; (id1 | ev | id1) ; swap ; ev", Sector::OneD);
    CobWord w2 = parse_word("coev ; swap ; ev", Sector::OneD);
    for (const CobWord* w : {&w1, &w2}) {
        CobWord cyl = cylinderize(*w);
        CHECK(cyl.root.structurally_equal(w->root));
        CHECK(serialize_word(cyl) == serialize_word(*w));
    }
    // cylinderize(w ; w') = cylinderize(w) ; cylinderize(w') structurally
    CobWord a = parse_word("lbnd", Sector::OneD);
    CobWord b = parse_word("rbnd", Sector::OneD);
    CobWord ab = parse_word("lbnd ; rbnd", Sector::OneD);
    CobWord ca = cylinderize(a), cb = cylinderize(b), cab = cylinderize(ab);
    CobWord glued;
    glued.sector = Sector::TwoConstrained;
    glued.root.kind = WordNode::Kind::Seq;
    glued.root.children = {ca.root, cb.root};
    typecheck(glued);
    CHECK(glued.structurally_equal(cab));

    CHECK_THROWS_AS(cylinderize(parse_word("cup", Sector::TwoClosed)), WordTypeError);

    // defect lives only in the constrained sector; its boundary is a circle
    CobWord def = parse_word("defect", Sector::TwoConstrained);
    CHECK(def.source().to_string() == "o");
    CHECK_THROWS_AS(parse_word("defect", Sector::OneD), WordTypeError);
}

TEST_CASE("boundary objects parse and print") {
    CHECK(parse_boundary("circles:3", Sector::TwoClosed).comps.size() == 3);
    CHECK(parse_boundary("+-+", Sector::OneD).to_string() == "+-+");
    CHECK(parse_boundary("0", Sector::OneD).comps.empty());
    CHECK(parse_boundary("[+[-o", Sector::TwoConstrained).to_string() == "[+[-o");
    CHECK_THROWS_AS(parse_boundary("+o", Sector::OneD), ParseError);
}

TEST_CASE("genus words") {
    CHECK(serialize_word(genus_word(0)) == "cup ; cap");
    CHECK(serialize_word(genus_word(2)) == "cup ; comul ; mul ; comul ; mul ; cap");
}
