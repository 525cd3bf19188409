#include "cobalt/modular.hpp"

#include <cctype>

namespace cobalt {

Verdict verify_modular(const ModularData& m) {
    if (m.dim < 1) return Verdict::fail("dim must be positive");
    if (m.S.rows() != static_cast<size_t>(m.dim) || m.S.cols() != static_cast<size_t>(m.dim) ||
        m.T.rows() != static_cast<size_t>(m.dim) || m.T.cols() != static_cast<size_t>(m.dim))
        return Verdict::fail("matrix shapes do not match dim");
    if (m.S.determinant().is_zero()) return Verdict::fail("S is singular");
    for (size_t i = 0; i < m.T.rows(); ++i)
        for (size_t j = 0; j < m.T.cols(); ++j) {
            if (i != j && !m.T.at(i, j).is_zero()) return Verdict::fail("T is not diagonal");
            if (i == j && m.T.at(i, j).is_zero()) return Verdict::fail("T has a zero phase");
        }
    return Verdict::pass();
}

namespace {

struct RelatorParser {
    const ModularData& data;
    std::string_view text;
    size_t pos = 0;

    void skip() {
        while (pos < text.size() &&
               (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == '*'))
            ++pos;
    }
    bool done() {
        skip();
        return pos >= text.size();
    }

    long integer() {
        bool neg = false;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
            neg = text[pos] == '-';
            ++pos;
        }
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw ParseError("expected exponent", pos);
        long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            v = v * 10 + (text[pos++] - '0');
        return neg ? -v : v;
    }

    Matrix power(const Matrix& base, long e) {
        Matrix b = base;
        if (e < 0) {
            auto inv = base.inverse();
            if (!inv) throw NotProjectivelyTrivial("matrix in relator is singular");
            b = *inv;
            e = -e;
        }
        Matrix acc = Matrix::identity(base.rows());
        while (e > 0) {
            if (e & 1) acc = acc * b;
            b = b * b;
            e >>= 1;
        }
        return acc;
    }

    Matrix factor() {
        skip();
        if (pos >= text.size()) throw ParseError("expected S, T or '('", pos);
        Matrix base(0, 0);
        char c = text[pos];
        if (c == 'S') {
            base = data.S;
            ++pos;
        } else if (c == 'T') {
            base = data.T;
            ++pos;
        } else if (c == '(') {
            ++pos;
            base = word();
            skip();
            if (pos >= text.size() || text[pos] != ')') throw ParseError("expected ')'", pos);
            ++pos;
        } else {
            throw ParseError("expected S, T or '('", pos);
        }
        skip();
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            skip();
            return power(base, integer());
        }
        return base;
    }

    Matrix word() {
        Matrix acc = factor();
        while (true) {
            skip();
            if (pos >= text.size() || text[pos] == ')') return acc;
            acc = acc * factor();
        }
    }
};

}  // namespace

Matrix evaluate_relator(const ModularData& m, std::string_view relator) {
    RelatorParser p{m, relator};
    p.skip();
    if (p.done()) return Matrix::identity(m.dim);
    Matrix out = p.word();
    if (!p.done()) throw ParseError("trailing input", p.pos);
    return out;
}

Scalar modular_defect(const ModularData& m, std::string_view relator) {
    Matrix r = evaluate_relator(m, relator);
    auto lambda = r.scalar_multiple_of_identity();
    if (!lambda)
        throw NotProjectivelyTrivial("relator does not evaluate to a scalar multiple of identity");
    if (lambda->is_zero()) throw NotProjectivelyTrivial("relator evaluates to zero");
    return *lambda;
}

}  // namespace cobalt
