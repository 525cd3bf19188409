#include "cobalt/cobword.hpp"

#include <cctype>
#include <map>
#include <optional>

namespace cobalt {

int sector_dimension(Sector s) { return s == Sector::OneD ? 1 : 2; }

std::string Boundary::to_string() const {
    if (sector == Sector::TwoClosed) return "circles:" + std::to_string(comps.size());
    if (comps.empty()) return "0";
    std::string out;
    for (Comp c : comps) {
        switch (c) {
            case Comp::PointPlus: out += "+"; break;
            case Comp::PointMinus: out += "-"; break;
            case Comp::Circle: out += "o"; break;
            case Comp::CylPlus: out += "[+"; break;
            case Comp::CylMinus: out += "[-"; break;
        }
    }
    return out;
}

Boundary parse_boundary(std::string_view text, Sector sector) {
    Boundary b;
    b.sector = sector;
    if (sector == Sector::TwoClosed) {
        std::string_view prefix = "circles:";
        if (text.substr(0, prefix.size()) != prefix)
            throw ParseError("expected 'circles:<n>'", 0);
        long n = 0;
        for (size_t i = prefix.size(); i < text.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(text[i])))
                throw ParseError("expected circle count", i);
            n = n * 10 + (text[i] - '0');
        }
        b.comps.assign(n, Boundary::Comp::Circle);
        return b;
    }
    if (text == "0") return b;
    for (size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (sector == Sector::OneD) {
            if (c == '+') b.comps.push_back(Boundary::Comp::PointPlus);
            else if (c == '-') b.comps.push_back(Boundary::Comp::PointMinus);
            else throw ParseError("expected '+' or '-'", i);
        } else {
            if (c == 'o') {
                b.comps.push_back(Boundary::Comp::Circle);
            } else if (c == '[' && i + 1 < text.size()) {
                ++i;
                if (text[i] == '+') b.comps.push_back(Boundary::Comp::CylPlus);
                else if (text[i] == '-') b.comps.push_back(Boundary::Comp::CylMinus);
                else throw ParseError("expected '[+' or '[-'", i);
            } else {
                throw ParseError("expected 'o', '[+' or '[-'", i);
            }
        }
    }
    return b;
}

std::string gen_name(GenKind g, int width) {
    switch (g) {
        case GenKind::Id: return "id" + std::to_string(width);
        case GenKind::Swap: return "swap";
        case GenKind::Cup: return "cup";
        case GenKind::Cap: return "cap";
        case GenKind::Mul: return "mul";
        case GenKind::Comul: return "comul";
        case GenKind::Ev: return "ev";
        case GenKind::Coev: return "coev";
        case GenKind::Lbnd: return "lbnd";
        case GenKind::Rbnd: return "rbnd";
        case GenKind::Defect: return "defect";
    }
    return "?";
}

bool WordNode::structurally_equal(const WordNode& o) const {
    if (kind != o.kind) return false;
    if (kind == Kind::Gen) return gen == o.gen && (gen != GenKind::Id || width == o.width);
    if (children.size() != o.children.size()) return false;
    for (size_t i = 0; i < children.size(); ++i)
        if (!children[i].structurally_equal(o.children[i])) return false;
    return true;
}

namespace {

// --- typechecking ------------------------------------------------------
//
// id and swap are polymorphic in their strand kinds; a union-find over
// strand variables resolves them from the concrete generators they compose
// with. Variables still free at the end default to "+" strands.

using Comp = Boundary::Comp;

struct TermRef {
    long var = -1;  // >= 0: variable id; -1: constant
    Comp value = Comp::PointPlus;
};

struct Unifier {
    std::vector<long> parent;
    std::vector<std::optional<Comp>> bound;

    long fresh() {
        parent.push_back(static_cast<long>(parent.size()));
        bound.emplace_back();
        return parent.back();
    }
    long find(long x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unify(const TermRef& a, const TermRef& b) {
        if (a.var < 0 && b.var < 0) return a.value == b.value;
        if (a.var < 0) return bind(b.var, a.value);
        if (b.var < 0) return bind(a.var, b.value);
        long ra = find(a.var), rb = find(b.var);
        if (ra == rb) return true;
        if (bound[ra] && bound[rb]) {
            if (*bound[ra] != *bound[rb]) return false;
        }
        if (bound[rb] && !bound[ra]) std::swap(ra, rb);
        parent[rb] = ra;
        return true;
    }
    bool bind(long v, Comp c) {
        long r = find(v);
        if (bound[r]) return *bound[r] == c;
        bound[r] = c;
        return true;
    }
    Comp resolve(const TermRef& t, Sector sector) {
        if (t.var < 0) return t.value;
        long r = find(t.var);
        if (bound[r]) return *bound[r];
        return sector == Sector::TwoConstrained ? Comp::CylPlus
             : sector == Sector::TwoClosed     ? Comp::Circle
                                                : Comp::PointPlus;
    }
};

struct Typing {
    std::vector<TermRef> src, tgt;
};

TermRef constant(Comp c) { return TermRef{-1, c}; }

Typing generator_typing(const WordNode& n, Sector sector, Unifier& u) {
    Typing t;
    auto point = [&](bool plus) {
        if (sector == Sector::OneD) return constant(plus ? Comp::PointPlus : Comp::PointMinus);
        return constant(plus ? Comp::CylPlus : Comp::CylMinus);
    };
    switch (n.gen) {
        case GenKind::Id: {
            for (int i = 0; i < n.width; ++i) {
                TermRef v{u.fresh(), Comp::PointPlus};
                if (sector == Sector::TwoClosed) v = constant(Comp::Circle);
                t.src.push_back(v);
                t.tgt.push_back(v);
            }
            break;
        }
        case GenKind::Swap: {
            TermRef v1{u.fresh(), Comp::PointPlus}, v2{u.fresh(), Comp::PointPlus};
            if (sector == Sector::TwoClosed) {
                v1 = constant(Comp::Circle);
                v2 = constant(Comp::Circle);
            }
            t.src = {v1, v2};
            t.tgt = {v2, v1};
            break;
        }
        case GenKind::Cup:
            if (sector != Sector::TwoClosed) throw WordTypeError("cup is a 2d generator", n.pos);
            t.tgt = {constant(Comp::Circle)};
            break;
        case GenKind::Cap:
            if (sector != Sector::TwoClosed) throw WordTypeError("cap is a 2d generator", n.pos);
            t.src = {constant(Comp::Circle)};
            break;
        case GenKind::Mul:
            if (sector != Sector::TwoClosed) throw WordTypeError("mul is a 2d generator", n.pos);
            t.src = {constant(Comp::Circle), constant(Comp::Circle)};
            t.tgt = {constant(Comp::Circle)};
            break;
        case GenKind::Comul:
            if (sector != Sector::TwoClosed) throw WordTypeError("comul is a 2d generator", n.pos);
            t.src = {constant(Comp::Circle)};
            t.tgt = {constant(Comp::Circle), constant(Comp::Circle)};
            break;
        case GenKind::Ev:
            if (sector == Sector::TwoClosed) throw WordTypeError("ev needs points", n.pos);
            t.src = {point(true), point(false)};
            break;
        case GenKind::Coev:
            if (sector == Sector::TwoClosed) throw WordTypeError("coev needs points", n.pos);
            t.tgt = {point(false), point(true)};
            break;
        case GenKind::Lbnd:
            if (sector == Sector::TwoClosed) throw WordTypeError("lbnd needs points", n.pos);
            t.tgt = {point(true)};
            break;
        case GenKind::Rbnd:
            if (sector == Sector::TwoClosed) throw WordTypeError("rbnd needs points", n.pos);
            t.src = {point(true)};
            break;
        case GenKind::Defect:
            if (sector != Sector::TwoConstrained)
                throw WordTypeError("defect lives in the 2d-constrained sector", n.pos);
            t.src = {constant(Comp::Circle)};
            t.tgt = {constant(Comp::Circle)};
            break;
    }
    return t;
}

Typing infer(const WordNode& n, Sector sector, Unifier& u, std::map<const WordNode*, Typing>& memo) {
    Typing t;
    switch (n.kind) {
        case WordNode::Kind::Gen:
            t = generator_typing(n, sector, u);
            break;
        case WordNode::Kind::Par:
            for (const auto& ch : n.children) {
                Typing ct = infer(ch, sector, u, memo);
                t.src.insert(t.src.end(), ct.src.begin(), ct.src.end());
                t.tgt.insert(t.tgt.end(), ct.tgt.begin(), ct.tgt.end());
            }
            break;
        case WordNode::Kind::Seq: {
            Typing acc = infer(n.children.front(), sector, u, memo);
            for (size_t i = 1; i < n.children.size(); ++i) {
                Typing next = infer(n.children[i], sector, u, memo);
                if (acc.tgt.size() != next.src.size())
                    throw WordTypeError(
                        "inner boundary mismatch: " + std::to_string(acc.tgt.size()) + " vs " +
                            std::to_string(next.src.size()) + " components",
                        n.children[i].pos);
                for (size_t k = 0; k < acc.tgt.size(); ++k)
                    if (!u.unify(acc.tgt[k], next.src[k]))
                        throw WordTypeError("inner boundary mismatch at component " +
                                                std::to_string(k),
                                            n.children[i].pos);
                acc.tgt = std::move(next.tgt);
            }
            t = std::move(acc);
            break;
        }
    }
    memo[&n] = t;
    return t;
}

void assign_boundaries(WordNode& n, Sector sector, Unifier& u,
                       const std::map<const WordNode*, Typing>& memo) {
    const Typing& t = memo.at(&n);
    n.src.sector = sector;
    n.tgt.sector = sector;
    n.src.comps.clear();
    n.tgt.comps.clear();
    for (const TermRef& r : t.src) n.src.comps.push_back(u.resolve(r, sector));
    for (const TermRef& r : t.tgt) n.tgt.comps.push_back(u.resolve(r, sector));
    for (auto& ch : n.children) assign_boundaries(ch, sector, u, memo);
}

// --- parsing -----------------------------------------------------------

struct WordParser {
    std::string_view text;
    Sector sector;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    WordNode parse_atom() {
        skip_ws();
        size_t start = pos;
        if (pos >= text.size()) throw ParseError("expected generator or '('", pos);
        if (text[pos] == '(') {
            ++pos;
            WordNode inner = parse_word_node();
            skip_ws();
            if (pos >= text.size() || text[pos] != ')') throw ParseError("expected ')'", pos);
            ++pos;
            return inner;
        }
        std::string name;
        while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos])))
            name += text[pos++];
        if (name.empty()) throw ParseError("expected generator name", pos);
        WordNode n;
        n.kind = WordNode::Kind::Gen;
        n.pos = start;
        if (name == "id") {
            size_t digits = pos;
            int w = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                w = w * 10 + (text[pos++] - '0');
            if (pos == digits) throw ParseError("expected strand count after 'id'", pos);
            if (w > 16) throw ParseError("id strand count too large", digits);
            n.gen = GenKind::Id;
            n.width = w;
        } else if (name == "swap") n.gen = GenKind::Swap;
        else if (name == "cup") n.gen = GenKind::Cup;
        else if (name == "cap") n.gen = GenKind::Cap;
        else if (name == "mul") n.gen = GenKind::Mul;
        else if (name == "comul") n.gen = GenKind::Comul;
        else if (name == "ev") n.gen = GenKind::Ev;
        else if (name == "coev") n.gen = GenKind::Coev;
        else if (name == "lbnd") n.gen = GenKind::Lbnd;
        else if (name == "rbnd") n.gen = GenKind::Rbnd;
        else if (name == "defect") n.gen = GenKind::Defect;
        else throw ParseError("unknown generator '" + name + "'", start);
        return n;
    }

    WordNode parse_par() {
        size_t start = pos;
        std::vector<WordNode> atoms;
        atoms.push_back(parse_atom());
        while (peek() == '|') {
            ++pos;
            atoms.push_back(parse_atom());
        }
        if (atoms.size() == 1) return std::move(atoms[0]);
        WordNode n;
        n.kind = WordNode::Kind::Par;
        n.pos = start;
        n.children = std::move(atoms);
        return n;
    }

    WordNode parse_word_node() {
        size_t start = pos;
        std::vector<WordNode> pars;
        pars.push_back(parse_par());
        while (peek() == ';') {
            ++pos;
            pars.push_back(parse_par());
        }
        if (pars.size() == 1) return std::move(pars[0]);
        WordNode n;
        n.kind = WordNode::Kind::Seq;
        n.pos = start;
        n.children = std::move(pars);
        return n;
    }
};

void serialize_node(const WordNode& n, std::string& out, WordNode::Kind parent) {
    switch (n.kind) {
        case WordNode::Kind::Gen:
            out += gen_name(n.gen, n.width);
            break;
        case WordNode::Kind::Par: {
            bool parens = parent == WordNode::Kind::Par;
            if (parens) out += "(";
            for (size_t i = 0; i < n.children.size(); ++i) {
                if (i) out += " | ";
                serialize_node(n.children[i], out, WordNode::Kind::Par);
            }
            if (parens) out += ")";
            break;
        }
        case WordNode::Kind::Seq: {
            bool parens = parent != WordNode::Kind::Gen;  // Gen marks the top level
            if (parens) out += "(";
            for (size_t i = 0; i < n.children.size(); ++i) {
                if (i) out += " ; ";
                serialize_node(n.children[i], out, WordNode::Kind::Seq);
            }
            if (parens) out += ")";
            break;
        }
    }
}

}  // namespace

void typecheck(CobWord& w) {
    Unifier u;
    std::map<const WordNode*, Typing> memo;
    infer(w.root, w.sector, u, memo);
    assign_boundaries(w.root, w.sector, u, memo);
}

CobWord parse_word(std::string_view text, Sector sector) {
    WordParser p{text, sector};
    CobWord w;
    w.sector = sector;
    p.skip_ws();
    if (p.pos == text.size()) {
        w.root.kind = WordNode::Kind::Gen;
        w.root.gen = GenKind::Id;
        w.root.width = 0;
    } else {
        w.root = p.parse_word_node();
        p.skip_ws();
        if (p.pos != text.size()) throw ParseError("trailing input", p.pos);
    }
    typecheck(w);
    return w;
}

std::string serialize_word(const CobWord& w) {
    std::string out;
    serialize_node(w.root, out, WordNode::Kind::Gen);
    return out;
}

CobWord cylinderize(const CobWord& w) {
    if (w.sector != Sector::OneD) throw WordTypeError("cylinderize expects a 1d word", 0);
    CobWord out;
    out.sector = Sector::TwoConstrained;
    out.root = w.root;
    typecheck(out);
    return out;
}

CobWord genus_word(int genus) {
    if (genus < 0) throw UnsupportedParams("genus must be nonnegative");
    WordNode root;
    root.kind = WordNode::Kind::Seq;
    auto gen = [](GenKind g) {
        WordNode n;
        n.kind = WordNode::Kind::Gen;
        n.gen = g;
        return n;
    };
    root.children.push_back(gen(GenKind::Cup));
    for (int i = 0; i < genus; ++i) {
        root.children.push_back(gen(GenKind::Comul));
        root.children.push_back(gen(GenKind::Mul));
    }
    root.children.push_back(gen(GenKind::Cap));
    CobWord w;
    w.sector = Sector::TwoClosed;
    w.root = std::move(root);
    typecheck(w);
    return w;
}

}  // namespace cobalt
