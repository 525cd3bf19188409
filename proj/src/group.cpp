#include "cobalt/group.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace cobalt {

FiniteGroup group_from_table(int order, std::vector<int> table, std::vector<std::string> names) {
    if (order < 1) throw UnsupportedParams("group order must be positive");
    if (static_cast<int>(table.size()) != order * order)
        throw FormatError("group table size does not match order");
    for (int v : table)
        if (v < 0 || v >= order) throw FormatError("group table entry out of range");
    FiniteGroup g;
    g.order = order;
    g.table = std::move(table);
    // Locate the two-sided identity.
    int id = -1;
    for (int e = 0; e < order; ++e) {
        bool ok = true;
        for (int a = 0; a < order && ok; ++a)
            ok = g.mul(e, a) == a && g.mul(a, e) == a;
        if (ok) {
            id = e;
            break;
        }
    }
    if (id < 0) throw FormatError("group table has no identity");
    g.identity = id;
    g.inverses.assign(order, -1);
    for (int a = 0; a < order; ++a) {
        for (int b = 0; b < order; ++b)
            if (g.mul(a, b) == id && g.mul(b, a) == id) {
                g.inverses[a] = b;
                break;
            }
        if (g.inverses[a] < 0) throw FormatError("group table element has no inverse");
    }
    if (names.empty()) {
        for (int a = 0; a < order; ++a) names.push_back("g" + std::to_string(a));
        names[id] = "e";
    }
    if (static_cast<int>(names.size()) != order) throw FormatError("group name count mismatch");
    g.names = std::move(names);
    return g;
}

FiniteGroup trivial_group() { return cyclic_group(1); }

FiniteGroup cyclic_group(int n) {
    if (n < 1) throw UnsupportedParams("cyclic group needs n >= 1");
    std::vector<int> table(n * n);
    std::vector<std::string> names;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) table[a * n + b] = (a + b) % n;
    for (int a = 0; a < n; ++a)
        names.push_back(a == 0 ? "e" : (a == 1 ? "g" : "g^" + std::to_string(a)));
    return group_from_table(n, std::move(table), std::move(names));
}

FiniteGroup dihedral_group(int n) {
    if (n < 1) throw UnsupportedParams("dihedral group needs n >= 1");
    // Element j*n + i stands for the word r^i s^j; order is lexicographic on
    // (s-exponent, r-exponent). Relations: r^n = s^2 = e, s r = r^{-1} s.
    int ord = 2 * n;
    auto idx = [n](int i, int j) { return j * n + i; };
    std::vector<int> table(ord * ord);
    for (int j1 = 0; j1 < 2; ++j1)
        for (int i1 = 0; i1 < n; ++i1)
            for (int j2 = 0; j2 < 2; ++j2)
                for (int i2 = 0; i2 < n; ++i2) {
                    // (r^i1 s^j1)(r^i2 s^j2) = r^{i1 + i2 * (-1)^{j1}} s^{j1+j2}
                    int i = ((i1 + (j1 ? n - i2 : i2)) % n + n) % n;
                    int j = (j1 + j2) % 2;
                    table[idx(i1, j1) * ord + idx(i2, j2)] = idx(i, j);
                }
    std::vector<std::string> names;
    for (int j = 0; j < 2; ++j)
        for (int i = 0; i < n; ++i) {
            std::string w;
            if (i == 1) w += "r";
            if (i > 1) w += "r^" + std::to_string(i);
            if (j) w += "s";
            names.push_back(w.empty() ? "e" : w);
        }
    return group_from_table(ord, std::move(table), std::move(names));
}

FiniteGroup symmetric_group(int n) {
    if (n < 1 || n > 5) throw UnsupportedParams("symmetric group supported for 1 <= n <= 5");
    // Elements are permutations in lexicographic one-line order; composition
    // is (p*q)(x) = p(q(x)).
    std::vector<std::vector<int>> perms;
    std::vector<int> base(n);
    for (int i = 0; i < n; ++i) base[i] = i;
    std::vector<int> p = base;
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
    int ord = static_cast<int>(perms.size());
    std::vector<int> table(ord * ord);
    for (int a = 0; a < ord; ++a)
        for (int b = 0; b < ord; ++b) {
            std::vector<int> comp(n);
            for (int x = 0; x < n; ++x) comp[x] = perms[a][perms[b][x]];
            table[a * ord + b] = index[comp];
        }
    std::vector<std::string> names;
    for (const auto& q : perms) {
        std::string w = "(";
        for (int i = 0; i < n; ++i) w += std::to_string(q[i]);
        w += ")";
        names.push_back(w);
    }
    return group_from_table(ord, std::move(table), std::move(names));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    long ord = static_cast<long>(a.order) * b.order;
    if (ord > 120) throw UnsupportedParams("catalog groups capped at order 120");
    int n = static_cast<int>(ord);
    auto idx = [&b](int x, int y) { return x * b.order + y; };
    std::vector<int> table(n * n);
    std::vector<std::string> names;
    for (int x1 = 0; x1 < a.order; ++x1)
        for (int y1 = 0; y1 < b.order; ++y1)
            for (int x2 = 0; x2 < a.order; ++x2)
                for (int y2 = 0; y2 < b.order; ++y2)
                    table[idx(x1, y1) * n + idx(x2, y2)] = idx(a.mul(x1, x2), b.mul(y1, y2));
    for (int x = 0; x < a.order; ++x)
        for (int y = 0; y < b.order; ++y) names.push_back("(" + a.name(x) + "," + b.name(y) + ")");
    return group_from_table(n, std::move(table), std::move(names));
}

namespace {

struct SpecParser {
    std::string_view text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool accept(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    std::string ident() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw ParseError("expected group name", start);
        return std::string(text.substr(start, pos - start));
    }
    int integer() {
        skip_ws();
        size_t start = pos;
        int v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            ++pos;
        }
        if (pos == start) throw ParseError("expected integer", start);
        return v;
    }

    FiniteGroup parse() {
        std::string name = ident();
        if (!accept('(')) throw ParseError("expected '('", pos);
        FiniteGroup g;
        if (name == "cyclic") {
            g = cyclic_group(integer());
        } else if (name == "dihedral") {
            g = dihedral_group(integer());
        } else if (name == "symmetric") {
            g = symmetric_group(integer());
        } else if (name == "product") {
            FiniteGroup a = parse();
            if (!accept(',')) throw ParseError("expected ','", pos);
            FiniteGroup b = parse();
            g = direct_product(a, b);
        } else {
            throw UnsupportedParams("unknown catalog group '" + name + "'");
        }
        if (!accept(')')) throw ParseError("expected ')'", pos);
        return g;
    }
};

}  // namespace

FiniteGroup parse_group_spec(std::string_view spec) {
    SpecParser p{spec};
    FiniteGroup g = p.parse();
    p.skip_ws();
    if (p.pos != spec.size()) throw ParseError("trailing input", p.pos);
    if (g.order > 120) throw UnsupportedParams("catalog groups capped at order 120");
    return g;
}

Verdict verify_group(const FiniteGroup& g, uint64_t seed) {
    int n = g.order;
    if (static_cast<int>(g.table.size()) != n * n) return Verdict::fail("table size mismatch");
    for (int v : g.table)
        if (v < 0 || v >= n) return Verdict::fail("table entry out of range");
    for (int a = 0; a < n; ++a) {
        if (g.mul(g.identity, a) != a || g.mul(a, g.identity) != a)
            return Verdict::fail("identity law fails at " + g.name(a));
        if (g.mul(a, g.inv(a)) != g.identity || g.mul(g.inv(a), a) != g.identity)
            return Verdict::fail("inverse law fails at " + g.name(a));
    }
    auto check_triple = [&](int a, int b, int c) -> bool {
        return g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c));
    };
    auto witness = [&](int a, int b, int c) {
        std::ostringstream os;
        os << "associativity fails at (" << g.name(a) << ", " << g.name(b) << ", " << g.name(c)
           << ")";
        return os.str();
    };
    if (n <= 64) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (!check_triple(a, b, c)) return Verdict::fail(witness(a, b, c));
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (int trial = 0; trial < 200000; ++trial) {
            int a = pick(rng), b = pick(rng), c = pick(rng);
            if (!check_triple(a, b, c)) return Verdict::fail(witness(a, b, c));
        }
    }
    return Verdict::pass();
}

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g) {
    int n = g.order;
    std::vector<int> cls(n, -1);
    std::vector<std::vector<int>> out;
    for (int a = 0; a < n; ++a) {
        if (cls[a] >= 0) continue;
        std::set<int> orbit;
        for (int h = 0; h < n; ++h) orbit.insert(g.mul(g.mul(h, a), g.inv(h)));
        std::vector<int> sorted(orbit.begin(), orbit.end());
        for (int x : sorted) cls[x] = static_cast<int>(out.size());
        out.push_back(std::move(sorted));
    }
    return out;
}

Verdict verify_hom(const GroupHom& f) {
    if (static_cast<int>(f.images.size()) != f.source.order)
        return Verdict::fail("image count mismatch");
    for (int v : f.images)
        if (v < 0 || v >= f.target.order) return Verdict::fail("image out of range");
    for (int a = 0; a < f.source.order; ++a)
        for (int b = 0; b < f.source.order; ++b)
            if (f.apply(f.source.mul(a, b)) != f.target.mul(f.apply(a), f.apply(b)))
                return Verdict::fail("homomorphism fails at (" + f.source.name(a) + ", " +
                                     f.source.name(b) + ")");
    return Verdict::pass();
}

Verdict verify_crossed_module(const CrossedModule& x) {
    const FiniteGroup& G = x.base;
    const FiniteGroup& A = x.fiber;
    if (static_cast<int>(x.boundary.size()) != A.order) return Verdict::fail("boundary size mismatch");
    if (static_cast<int>(x.action.size()) != G.order) return Verdict::fail("action size mismatch");
    for (const auto& row : x.action)
        if (static_cast<int>(row.size()) != A.order) return Verdict::fail("action row size mismatch");

    GroupHom delta{A, G, x.boundary};
    if (Verdict v = verify_hom(delta); !v) return Verdict::fail("boundary: " + v.detail);
    for (const auto& row : x.action)
        for (int img : row)
            if (img < 0 || img >= A.order) return Verdict::fail("action out of range");

    // The two crossed-module identities first, so verdicts name them.
    // Equivariance: delta(g.a) = g delta(a) g^{-1}.
    for (int g = 0; g < G.order; ++g)
        for (int a = 0; a < A.order; ++a)
            if (x.delta(x.act(g, a)) != G.mul(G.mul(g, x.delta(a)), G.inv(g)))
                return Verdict::fail("equivariance fails at (g=" + G.name(g) + ", a=" + A.name(a) +
                                     ")");
    // Peiffer identity: delta(a).b = a b a^{-1}.
    for (int a = 0; a < A.order; ++a)
        for (int b = 0; b < A.order; ++b)
            if (x.act(x.delta(a), b) != A.mul(A.mul(a, b), A.inv(a)))
                return Verdict::fail("Peiffer identity fails at (a=" + A.name(a) + ", b=" +
                                     A.name(b) + ")");

    // Each g acts as an automorphism of A, and the assignment is a G-action.
    for (int g = 0; g < G.order; ++g) {
        std::vector<char> seen(A.order, 0);
        for (int a = 0; a < A.order; ++a) seen[x.act(g, a)] = 1;
        for (char s : seen)
            if (!s) return Verdict::fail("action of " + G.name(g) + " is not bijective");
        for (int a = 0; a < A.order; ++a)
            for (int b = 0; b < A.order; ++b)
                if (x.act(g, A.mul(a, b)) != A.mul(x.act(g, a), x.act(g, b)))
                    return Verdict::fail("action of " + G.name(g) + " is not a homomorphism");
    }
    for (int a = 0; a < A.order; ++a)
        if (x.act(G.identity, a) != a) return Verdict::fail("identity does not act trivially");
    for (int g = 0; g < G.order; ++g)
        for (int h = 0; h < G.order; ++h)
            for (int a = 0; a < A.order; ++a)
                if (x.act(G.mul(g, h), a) != x.act(g, x.act(h, a)))
                    return Verdict::fail("action is not associative at (" + G.name(g) + ", " +
                                         G.name(h) + ")");
    return Verdict::pass();
}

FiniteGroup pi0(const CrossedModule& x) {
    const FiniteGroup& G = x.base;
    std::set<int> image;
    for (int a = 0; a < x.fiber.order; ++a) image.insert(x.delta(a));
    // Close the image into a subgroup (it already is one for a verified
    // module, but stay safe on unverified input).
    std::set<int> sub = image;
    bool grew = true;
    while (grew) {
        grew = false;
        std::set<int> next = sub;
        for (int a : sub)
            for (int b : sub) next.insert(G.mul(a, b));
        if (next.size() != sub.size()) {
            sub = std::move(next);
            grew = true;
        }
    }
    std::vector<int> coset_of(G.order, -1);
    std::vector<int> reps;
    for (int g = 0; g < G.order; ++g) {
        if (coset_of[g] >= 0) continue;
        int c = static_cast<int>(reps.size());
        for (int h : sub) coset_of[G.mul(g, h)] = c;
        reps.push_back(g);
    }
    int m = static_cast<int>(reps.size());
    std::vector<int> table(m * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) table[i * m + j] = coset_of[G.mul(reps[i], reps[j])];
    std::vector<std::string> names;
    for (int r : reps) names.push_back("[" + G.name(r) + "]");
    return group_from_table(m, std::move(table), std::move(names));
}

}  // namespace cobalt
