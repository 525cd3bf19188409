#include "cobalt/scalar.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace cobalt {

namespace {

std::atomic<long> g_conductor_cap{120};

using Poly = std::vector<Rational>;  // coefficient of x^i at index i

size_t degree(const Poly& p) {
    size_t d = p.size();
    while (d > 0 && p[d - 1] == 0) --d;
    return d;  // number of significant coefficients; 0 means zero polynomial
}

Poly poly_mul(const Poly& a, const Poly& b) {
    size_t da = degree(a), db = degree(b);
    if (da == 0 || db == 0) return {};
    Poly out(da + db - 1, Rational(0));
    for (size_t i = 0; i < da; ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < db; ++j) {
            if (b[j] == 0) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

// Remainder of a modulo monic b (in-place long division).
Poly poly_rem(Poly a, const Poly& b) {
    size_t db = degree(b);
    for (size_t da = degree(a); da >= db && da > 0; da = degree(a)) {
        Rational lead = a[da - 1];
        size_t shift = da - db;
        for (size_t i = 0; i < db; ++i) a[shift + i] -= lead * b[i];
        a[da - 1] = 0;
    }
    a.resize(db > 0 ? db - 1 : 0);
    return a;
}

// Quotient of a by monic b, asserting exact division.
Poly poly_div_exact(Poly a, const Poly& b) {
    size_t db = degree(b);
    size_t da = degree(a);
    if (da < db) return {};
    Poly q(da - db + 1, Rational(0));
    while ((da = degree(a)) >= db && da > 0) {
        Rational lead = a[da - 1];
        if (lead == 0) break;
        size_t shift = da - db;
        q[shift] = lead;
        for (size_t i = 0; i < db; ++i) a[shift + i] -= lead * b[i];
    }
    return q;
}

// Per-conductor data: Phi_N and the reduction rows x^{phi+j} mod Phi_N.
struct FieldData {
    long n = 1;
    long phi = 1;
    Poly phi_poly;                   // degree phi, monic
    std::vector<Poly> reduce_rows;   // reduce_rows[j] = x^{phi+j} mod Phi_N, j < phi
};

std::mutex g_field_mutex;
std::map<long, std::unique_ptr<FieldData>> g_fields;

const FieldData& field_data(long n);

Poly compute_cyclotomic(long n) {
    if (n == 1) return Poly{Rational(-1), Rational(1)};  // x - 1
    Poly f(n + 1, Rational(0));
    f[0] = -1;
    f[n] = 1;  // x^n - 1
    for (long d : divisors(n)) {
        if (d == n) continue;
        f = poly_div_exact(std::move(f), field_data(d).phi_poly);
    }
    return f;
}

const FieldData& field_data(long n) {
    {
        std::lock_guard<std::mutex> lock(g_field_mutex);
        auto it = g_fields.find(n);
        if (it != g_fields.end()) return *it->second;
    }
    // Build outside the lock; compute_cyclotomic recurses into divisors.
    auto fd = std::make_unique<FieldData>();
    fd->n = n;
    fd->phi = euler_phi(n);
    fd->phi_poly = compute_cyclotomic(n);
    long phi = fd->phi;
    fd->reduce_rows.resize(phi);
    Poly row(phi, Rational(0));  // x^phi = -(lower part of Phi)
    for (long i = 0; i < phi; ++i) row[i] = -fd->phi_poly[i];
    fd->reduce_rows[0] = row;
    for (long j = 1; j < phi; ++j) {
        Poly next(phi, Rational(0));
        Rational top = row[phi - 1];
        for (long i = phi - 1; i > 0; --i) next[i] = row[i - 1];
        if (top != 0)
            for (long i = 0; i < phi; ++i) next[i] += top * fd->reduce_rows[0][i];
        fd->reduce_rows[j] = next;
        row = std::move(next);
    }
    std::lock_guard<std::mutex> lock(g_field_mutex);
    auto [it, inserted] = g_fields.emplace(n, std::move(fd));
    return *it->second;
}

// Reduce a polynomial to the basis 1, x, ..., x^{phi-1} of Q(zeta_n).
Poly reduce_in_field(Poly p, long n) {
    const FieldData& fd = field_data(n);
    long phi = fd.phi;
    size_t d = degree(p);
    if (d > static_cast<size_t>(2 * phi - 1)) {
        p = poly_rem(std::move(p), fd.phi_poly);
        d = degree(p);
    }
    Poly out(phi, Rational(0));
    for (size_t i = 0; i < d; ++i) {
        if (p[i] == 0) continue;
        if (i < static_cast<size_t>(phi)) {
            out[i] += p[i];
        } else {
            const Poly& row = fd.reduce_rows[i - phi];
            for (long j = 0; j < phi; ++j) out[j] += p[i] * row[j];
        }
    }
    return out;
}

long gcd_long(long a, long b) { return std::gcd(a, b); }

long lcm_checked(long a, long b) {
    long g = gcd_long(a, b);
    return (a / g) * b;
}

}  // namespace

long conductor_cap() { return g_conductor_cap.load(); }
void set_conductor_cap(long cap) { g_conductor_cap.store(cap); }

long euler_phi(long n) {
    long result = n;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

std::vector<long> divisors(long n) {
    std::vector<long> out;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d != n / d) out.push_back(n / d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

const std::vector<Rational>& cyclotomic_polynomial(long n) { return field_data(n).phi_poly; }

Scalar Scalar::make(long n, std::vector<Rational> c) {
    Scalar s(n, std::move(c));
    s.normalize();
    return s;
}

void Scalar::normalize() {
    long phi = field_data(n_).phi;
    c_.resize(phi, Rational(0));
    while (n_ > 1) {
        // Collapse rationals to conductor 1.
        bool rational = true;
        for (long i = 1; i < static_cast<long>(c_.size()); ++i)
            if (c_[i] != 0) {
                rational = false;
                break;
            }
        if (rational) {
            Rational v = c_[0];
            n_ = 1;
            c_.assign(1, v);
            return;
        }
        // Descend along the power support: if every nonzero power index
        // shares a factor g with N, the element lives in Q(zeta_{N/g}).
        // Keeps serialization stable: parse reduces root exponents the
        // same way.
        long g = n_;
        for (long i = 1; i < static_cast<long>(c_.size()); ++i)
            if (c_[i] != 0) g = std::gcd(g, i);
        if (g <= 1) return;
        long m = n_ / g;
        Poly p((c_.size() - 1) / g + 1, Rational(0));
        for (long i = 0; i < static_cast<long>(c_.size()); ++i)
            if (c_[i] != 0) p[i / g] = c_[i];
        n_ = m;
        c_ = reduce_in_field(std::move(p), m);
    }
}

Scalar embed_into(const Scalar& s, long n) {
    if (s.n_ == n) return s;
    long step = n / s.n_;
    const FieldData& fd = field_data(s.n_);
    Poly p((fd.phi - 1) * step + 1, Rational(0));
    for (long i = 0; i < fd.phi; ++i) p[i * step] = s.c_[i];
    return Scalar(n, reduce_in_field(std::move(p), n));
}

Scalar Scalar::root_of_unity(long n, long k) {
    if (n < 1) throw UnsupportedParams("root_of_unity requires n >= 1");
    long kk = ((k % n) + n) % n;
    long g = std::gcd(n, kk == 0 ? n : kk);
    long m = n / g;
    long e = kk / g;
    if (m == 1) return Scalar(1);
    if (m == 2) return Scalar(-1);
    if (m > conductor_cap()) throw ConductorOverflow(m, conductor_cap());
    Poly p(e + 1, Rational(0));
    p[e] = 1;
    return make(m, reduce_in_field(std::move(p), m));
}

bool Scalar::is_zero() const {
    for (const auto& v : c_)
        if (v != 0) return false;
    return true;
}

const Rational& Scalar::rational() const {
    if (n_ != 1) throw Error("scalar is not rational: " + to_string());
    return c_[0];
}

Scalar Scalar::operator-() const {
    std::vector<Rational> c = c_;
    for (auto& v : c) v = -v;
    return make(n_, std::move(c));
}

Scalar Scalar::operator+(const Scalar& o) const {
    if (n_ == 1 && o.n_ == 1) return Scalar(c_[0] + o.c_[0]);
    if (n_ == o.n_) {
        std::vector<Rational> c = c_;
        for (size_t i = 0; i < c.size(); ++i) c[i] += o.c_[i];
        return make(n_, std::move(c));
    }
    long l = lcm_checked(n_, o.n_);
    if (l > std::max(n_, o.n_) && l > conductor_cap()) throw ConductorOverflow(l, conductor_cap());
    Scalar a = embed_into(*this, l), b = embed_into(o, l);
    for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
    return make(l, std::move(a.c_));
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    if (n_ == 1 && o.n_ == 1) return Scalar(c_[0] * o.c_[0]);
    if (n_ == 1 || o.n_ == 1) {
        // rational times cyclotomic: scale coefficients, no reduction needed
        const Rational& r = n_ == 1 ? c_[0] : o.c_[0];
        const Scalar& s = n_ == 1 ? o : *this;
        if (r == 0) return Scalar(0);
        std::vector<Rational> c = s.c_;
        for (auto& v : c) v *= r;
        return make(s.n_, std::move(c));
    }
    if (n_ == o.n_) return make(n_, reduce_in_field(poly_mul(c_, o.c_), n_));
    long l = lcm_checked(n_, o.n_);
    if (l > std::max(n_, o.n_) && l > conductor_cap()) throw ConductorOverflow(l, conductor_cap());
    Scalar a = embed_into(*this, l), b = embed_into(o, l);
    return make(l, reduce_in_field(poly_mul(a.c_, b.c_), l));
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero();
    if (n_ == 1) return Scalar(Rational(1) / c_[0]);
    // Extended Euclid: find u with u * this = 1 mod Phi_N. degree() counts
    // significant coefficients, so 0 means the zero polynomial and 1 a
    // nonzero constant.
    const FieldData& fd = field_data(n_);
    Poly r0 = fd.phi_poly, r1 = c_;
    Poly s0 = {}, s1 = {Rational(1)};
    while (degree(r1) > 1) {
        size_t d0 = degree(r0), d1 = degree(r1);
        if (d0 < d1) {
            std::swap(r0, r1);
            std::swap(s0, s1);
            continue;
        }
        // One division step batch: r0 = q*r1 + r, s accordingly.
        Poly q(d0 - d1 + 1, Rational(0));
        Poly r = r0;
        while ((d0 = degree(r)) >= d1 && d0 > 0) {
            Rational f = r[d0 - 1] / r1[d1 - 1];
            size_t shift = d0 - d1;
            q[shift] = f;
            for (size_t i = 0; i < d1; ++i) r[shift + i] -= f * r1[i];
            r[d0 - 1] = 0;
        }
        Poly s_new = s0;
        Poly qs = poly_mul(q, s1);
        s_new.resize(std::max(s_new.size(), qs.size()), Rational(0));
        for (size_t i = 0; i < qs.size(); ++i) s_new[i] -= qs[i];
        r0 = std::move(r1);
        s0 = std::move(s1);
        r1 = std::move(r);
        s1 = std::move(s_new);
    }
    if (degree(r1) == 0)
        throw Error("inverse: gcd with the cyclotomic polynomial is not constant");
    Rational unit = r1[0];
    for (auto& v : s1) v /= unit;
    return make(n_, reduce_in_field(std::move(s1), n_));
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar result(1);
    Scalar base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

Scalar Scalar::conjugate() const {
    if (n_ == 1) return *this;
    Poly p(n_, Rational(0));
    for (long i = 0; i < static_cast<long>(c_.size()); ++i) {
        long j = (n_ - i) % n_;
        p[j] += c_[i];
    }
    return make(n_, reduce_in_field(std::move(p), n_));
}

std::complex<double> Scalar::to_complex() const {
    std::complex<double> acc(0.0, 0.0);
    constexpr double two_pi = 6.283185307179586476925287;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        double coeff = c_[i].convert_to<double>();
        double angle = two_pi * static_cast<double>(i) / static_cast<double>(n_);
        acc += coeff * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return acc;
}

bool Scalar::operator==(const Scalar& o) const {
    if (n_ == o.n_) return c_ == o.c_;
    long l = lcm_checked(n_, o.n_);
    return embed_into(*this, l).c_ == embed_into(o, l).c_;
}

namespace {

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

}  // namespace

std::string Scalar::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!out.empty()) out += " + ";
        if (i == 0) {
            out += rational_str(c_[i]);
        } else {
            if (c_[i] != 1) out += rational_str(c_[i]) + "*";
            out += "q" + std::to_string(n_);
            if (i != 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

Scalar Scalar::from_string(std::string_view text) { return parse_scalar(text); }

ScalarExpr ScalarExpr::rat(Rational v) {
    ScalarExpr e;
    e.kind = Kind::Rat;
    e.value = std::move(v);
    return e;
}
ScalarExpr ScalarExpr::root(long n, long k) {
    ScalarExpr e;
    e.kind = Kind::Root;
    e.root_n = n;
    e.root_k = k;
    return e;
}
ScalarExpr ScalarExpr::add(std::vector<ScalarExpr> xs) {
    ScalarExpr e;
    e.kind = Kind::Add;
    e.children = std::move(xs);
    return e;
}
ScalarExpr ScalarExpr::mul(std::vector<ScalarExpr> xs) {
    ScalarExpr e;
    e.kind = Kind::Mul;
    e.children = std::move(xs);
    return e;
}
ScalarExpr ScalarExpr::neg(ScalarExpr x) {
    ScalarExpr e;
    e.kind = Kind::Neg;
    e.children.push_back(std::move(x));
    return e;
}
ScalarExpr ScalarExpr::inv(ScalarExpr x) {
    ScalarExpr e;
    e.kind = Kind::Inv;
    e.children.push_back(std::move(x));
    return e;
}

Scalar arith_eval(const ScalarExpr& expr) {
    switch (expr.kind) {
        case ScalarExpr::Kind::Rat:
            return Scalar(expr.value);
        case ScalarExpr::Kind::Root:
            return Scalar::root_of_unity(expr.root_n, expr.root_k);
        case ScalarExpr::Kind::Add: {
            Scalar acc(0);
            for (const auto& ch : expr.children) acc += arith_eval(ch);
            return acc;
        }
        case ScalarExpr::Kind::Mul: {
            Scalar acc(1);
            for (const auto& ch : expr.children) acc *= arith_eval(ch);
            return acc;
        }
        case ScalarExpr::Kind::Neg:
            return -arith_eval(expr.children.at(0));
        case ScalarExpr::Kind::Inv:
            return arith_eval(expr.children.at(0)).inverse();
    }
    throw Error("arith_eval: corrupt expression");
}

namespace {

struct ScalarParser {
    std::string_view text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    long parse_integer(bool allow_sign) {
        skip_ws();
        size_t start = pos;
        bool neg = false;
        if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
            neg = text[pos] == '-';
            ++pos;
        }
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw ParseError("expected integer", start);
        long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            if (v > 1000000000L) throw ParseError("integer literal too large", start);
            ++pos;
        }
        return neg ? -v : v;
    }

    ScalarExpr parse_factor() {
        skip_ws();
        if (pos >= text.size()) throw ParseError("expected factor", pos);
        char c = text[pos];
        if ((c == '-' || c == '+') &&
            (pos + 1 >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos + 1])))) {
            // sign attached to a non-numeric factor, e.g. "-q4"
            ++pos;
            ScalarExpr inner = parse_factor();
            return c == '-' ? ScalarExpr::neg(std::move(inner)) : std::move(inner);
        }
        if (c == '(') {
            ++pos;
            ScalarExpr inner = parse_expr();
            if (!accept(')')) throw ParseError("expected ')'", pos);
            return inner;
        }
        if (c == 'q') {
            ++pos;
            long n = parse_integer(false);
            if (n < 1) throw ParseError("root order must be positive", pos);
            long k = 1;
            if (accept('^')) k = parse_integer(true);
            return ScalarExpr::root(n, k);
        }
        long num = parse_integer(true);
        if (accept('/')) {
            long den = parse_integer(false);
            if (den == 0) throw ParseError("zero denominator", pos);
            return ScalarExpr::rat(Rational(num, den));
        }
        return ScalarExpr::rat(Rational(num));
    }

    ScalarExpr parse_term() {
        std::vector<ScalarExpr> factors;
        factors.push_back(parse_factor());
        while (accept('*')) factors.push_back(parse_factor());
        if (factors.size() == 1) return std::move(factors[0]);
        return ScalarExpr::mul(std::move(factors));
    }

    ScalarExpr parse_expr() {
        std::vector<ScalarExpr> terms;
        bool leading_neg = false;
        skip_ws();
        if (peek() == '+' || peek() == '-') {
            // Leading sign applies to the first term unless it opens a signed
            // integer literal, which parse_factor handles itself.
            if (pos + 1 < text.size() && !std::isdigit(static_cast<unsigned char>(text[pos + 1]))) {
                leading_neg = text[pos] == '-';
                ++pos;
            }
        }
        ScalarExpr first = parse_term();
        terms.push_back(leading_neg ? ScalarExpr::neg(std::move(first)) : std::move(first));
        while (true) {
            char c = peek();
            if (c == '+') {
                ++pos;
                terms.push_back(parse_term());
            } else if (c == '-') {
                // Binary minus; the sign may also belong to the integer
                // literal of the next term, which is equivalent.
                ++pos;
                terms.push_back(ScalarExpr::neg(parse_term()));
            } else {
                break;
            }
        }
        if (terms.size() == 1) return std::move(terms[0]);
        return ScalarExpr::add(std::move(terms));
    }
};

}  // namespace

ScalarExpr parse_scalar_expr(std::string_view text) {
    ScalarParser p{text};
    ScalarExpr e = p.parse_expr();
    if (!p.eof()) throw ParseError("trailing input", p.pos);
    return e;
}

}  // namespace cobalt
