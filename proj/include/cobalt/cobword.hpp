#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cobalt/errors.hpp"

namespace cobalt {

// Which cobordism sector a word lives in. TwoConstrained is the image of
// the 1d sector under cylinderize (product with the constrained interval)
// plus the circle-defect cylinder.
enum class Sector { OneD, TwoClosed, TwoConstrained };

int sector_dimension(Sector s);  // 1 or 2

// Boundary object of a word. Components are ordered left to right and
// serialise as:  2d-closed "circles:<n>";  1d sign strings like "+-+";
// 2d-constrained strings of "[+", "[-" (interval, constrained end marked
// by the bracket) and "o" (circle). The empty object prints as "0".
struct Boundary {
    enum class Comp : uint8_t { PointPlus, PointMinus, Circle, CylPlus, CylMinus };
    Sector sector = Sector::OneD;
    std::vector<Comp> comps;

    bool operator==(const Boundary& o) const = default;
    std::string to_string() const;
};

Boundary parse_boundary(std::string_view text, Sector sector);

enum class GenKind : uint8_t { Id, Swap, Cup, Cap, Mul, Comul, Ev, Coev, Lbnd, Rbnd, Defect };

std::string gen_name(GenKind g, int width);

// Word AST. Sequential composition reads left to right as "apply first";
// Seq and Par nodes have at least two children, parenthesised sub-words
// nest as children. Structural equality ignores source positions and the
// inferred boundaries.
struct WordNode {
    enum class Kind : uint8_t { Gen, Seq, Par };
    Kind kind = Kind::Gen;
    GenKind gen = GenKind::Id;
    int width = 1;  // strand count for Id
    std::vector<WordNode> children;
    size_t pos = 0;
    Boundary src, tgt;  // filled by the typechecker

    bool structurally_equal(const WordNode& o) const;
};

struct CobWord {
    Sector sector = Sector::OneD;
    WordNode root;

    const Boundary& source() const { return root.src; }
    const Boundary& target() const { return root.tgt; }
    int dimension() const { return sector_dimension(sector); }

    bool structurally_equal(const CobWord& o) const {
        return sector == o.sector && root.structurally_equal(o.root);
    }
};

// Grammar (whitespace insensitive, ASCII):
//   word := par (";" par)*
//   par  := atom ("|" atom)*
//   atom := GEN | "(" word ")"
//   GEN  := id<n> | swap | cup | cap | mul | comul | ev | coev | lbnd | rbnd
//           (defect additionally in the 2d-constrained sector)
// The empty word parses as id0, the identity of the monoidal unit.
// Typechecking runs as part of parsing: inner boundaries of sequential
// compositions must agree exactly; id/swap strand kinds are inferred and
// unconstrained strands default to "+" (or "[+" in the constrained sector).
// Throws ParseError or WordTypeError, both carrying a position.
CobWord parse_word(std::string_view text, Sector sector);

// Canonical text; parse_word(serialize_word(w), w.sector) is structurally w.
std::string serialize_word(const CobWord& w);

// Rebuilds boundaries bottom-up; used after programmatic AST construction.
void typecheck(CobWord& w);

// Generator-wise product with the constrained interval: points become
// constrained strips, ev/coev bent strips, lbnd/rbnd constrained half-disks.
// Structurally the identity on the AST, so it is functorial on the nose.
CobWord cylinderize(const CobWord& w);  // requires a 1d word

// The standard genus-g closed surface word: cup ; (comul ; mul)^g ; cap.
CobWord genus_word(int genus);

}  // namespace cobalt
