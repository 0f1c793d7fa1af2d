#include "halg/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace halg {

namespace {

void normalize(const PolyCtx& cx, std::vector<PTerm>& t) {
    std::sort(t.begin(), t.end(), [&](const PTerm& a, const PTerm& b) {
        return mono_cmp(cx.order, a.m, b.m) > 0;
    });
    std::vector<PTerm> out;
    out.reserve(t.size());
    for (auto& term : t) {
        if (!out.empty() && out.back().m == term.m) {
            out.back().c = cx.coeff.add(out.back().c, term.c);
            if (cx.coeff.is_zero(out.back().c)) out.pop_back();
        } else if (!cx.coeff.is_zero(term.c)) {
            out.push_back(std::move(term));
        }
    }
    t = std::move(out);
}

}  // namespace

Poly poly_zero() { return {}; }

Poly poly_const(const PolyCtx& cx, const Scalar& c) {
    Poly p;
    if (!cx.coeff.is_zero(c)) p.t.push_back({c, Monomial(cx.nvars())});
    return p;
}

Poly poly_var(const PolyCtx& cx, std::size_t i, std::uint32_t k) {
    require(i < cx.nvars(), ErrorCode::Dimension, "variable index out of range");
    Poly p;
    p.t.push_back({cx.coeff.one(), Monomial::var(cx.nvars(), i, k)});
    return p;
}

Poly poly_term(const PolyCtx& cx, const Scalar& c, const Monomial& m) {
    Poly p;
    if (!cx.coeff.is_zero(c)) p.t.push_back({c, m});
    return p;
}

bool poly_eq(const PolyCtx& cx, const Poly& a, const Poly& b) {
    if (a.t.size() != b.t.size()) return false;
    for (std::size_t i = 0; i < a.t.size(); ++i) {
        if (!(a.t[i].m == b.t[i].m) || !cx.coeff.eq(a.t[i].c, b.t[i].c)) return false;
    }
    return true;
}

Poly poly_add(const PolyCtx& cx, const Poly& a, const Poly& b) {
    Poly r;
    r.t.reserve(a.t.size() + b.t.size());
    std::size_t i = 0, j = 0;
    while (i < a.t.size() && j < b.t.size()) {
        int c = mono_cmp(cx.order, a.t[i].m, b.t[j].m);
        if (c > 0) {
            r.t.push_back(a.t[i++]);
        } else if (c < 0) {
            r.t.push_back(b.t[j++]);
        } else {
            Scalar s = cx.coeff.add(a.t[i].c, b.t[j].c);
            if (!cx.coeff.is_zero(s)) r.t.push_back({std::move(s), a.t[i].m});
            ++i, ++j;
        }
    }
    for (; i < a.t.size(); ++i) r.t.push_back(a.t[i]);
    for (; j < b.t.size(); ++j) r.t.push_back(b.t[j]);
    return r;
}

Poly poly_neg(const PolyCtx& cx, const Poly& a) {
    Poly r = a;
    for (auto& term : r.t) term.c = cx.coeff.neg(term.c);
    return r;
}

Poly poly_sub(const PolyCtx& cx, const Poly& a, const Poly& b) {
    return poly_add(cx, a, poly_neg(cx, b));
}

Poly poly_mul_term(const PolyCtx& cx, const Scalar& c, const Monomial& m, const Poly& a) {
    Poly r;
    if (cx.coeff.is_zero(c)) return r;
    r.t.reserve(a.t.size());
    for (const auto& term : a.t) {
        Scalar s = cx.coeff.mul(c, term.c);
        if (!cx.coeff.is_zero(s)) r.t.push_back({std::move(s), mono_mul(m, term.m)});
    }
    return r;  // multiplying by a fixed term preserves the order
}

Poly poly_scale(const PolyCtx& cx, const Scalar& c, const Poly& a) {
    return poly_mul_term(cx, c, Monomial(cx.nvars()), a);
}

Poly poly_mul(const PolyCtx& cx, const Poly& a, const Poly& b) {
    std::vector<PTerm> acc;
    acc.reserve(a.t.size() * b.t.size());
    for (const auto& ta : a.t)
        for (const auto& tb : b.t) acc.push_back({cx.coeff.mul(ta.c, tb.c), mono_mul(ta.m, tb.m)});
    normalize(cx, acc);
    Poly r;
    r.t = std::move(acc);
    return r;
}

Poly poly_pow(const PolyCtx& cx, const Poly& a, unsigned long k) {
    Poly r = poly_const(cx, cx.coeff.one());
    Poly base = a;
    while (k) {
        if (k & 1) r = poly_mul(cx, r, base);
        k >>= 1;
        if (k) base = poly_mul(cx, base, base);
    }
    return r;
}

std::uint64_t poly_total_degree(const Poly& a) {
    std::uint64_t d = 0;
    for (const auto& t : a.t) d = std::max(d, t.m.degree());
    return d;
}

bool poly_is_constant(const Poly& a) { return a.is_zero() || (a.t.size() == 1 && a.t[0].m.is_one()); }

bool poly_divide_exact(const PolyCtx& cx, const Poly& a, const Poly& b, Poly& out) {
    if (b.is_zero()) return false;
    Poly rem = a, q;
    while (!rem.is_zero()) {
        const PTerm& lr = rem.lead();
        const PTerm& lb = b.lead();
        if (!mono_divides(lb.m, lr.m)) return false;
        Scalar c;
        if (!cx.coeff.divide_exact(lr.c, lb.c, c)) return false;
        Monomial m = mono_div(lr.m, lb.m);
        q.t.push_back({c, m});
        rem = poly_sub(cx, rem, poly_mul_term(cx, c, m, b));
    }
    normalize(cx, q.t);
    out = std::move(q);
    return true;
}

std::uint64_t poly_degree_uni(const Poly& a) { return a.is_zero() ? 0 : a.lead().m.degree(); }

std::pair<Poly, Poly> poly_divmod_uni(const PolyCtx& cx, const Poly& a, const Poly& b) {
    require(cx.nvars() == 1, ErrorCode::Capability, "univariate division needs one variable");
    require(!b.is_zero(), ErrorCode::Generic, "division by zero polynomial");
    require(cx.coeff.is_field(), ErrorCode::Capability, "univariate division needs field coefficients");
    Poly q, r = a;
    Scalar lb_inv = cx.coeff.inv(b.lead().c);
    while (!r.is_zero() && poly_degree_uni(r) >= poly_degree_uni(b)) {
        Scalar c = cx.coeff.mul(r.lead().c, lb_inv);
        Monomial m = mono_div(r.lead().m, b.lead().m);
        q.t.push_back({c, m});
        r = poly_sub(cx, r, poly_mul_term(cx, c, m, b));
    }
    normalize(cx, q.t);
    return {q, r};
}

Poly poly_monic(const PolyCtx& cx, const Poly& a) {
    if (a.is_zero()) return a;
    require(cx.coeff.is_field(), ErrorCode::Capability, "monic form needs field coefficients");
    return poly_scale(cx, cx.coeff.inv(a.lead().c), a);
}

Poly poly_primitive(const PolyCtx& cx, const Poly& a, Rat* factor) {
    if (cx.coeff.tag != ScalarTag::QQ || a.is_zero()) {
        if (factor) *factor = 1;
        return a;
    }
    Int den_lcm = 1, num_gcd = 0;
    for (const auto& t : a.t) {
        const Rat& q = std::get<Rat>(t.c);
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
    }
    for (const auto& t : a.t) {
        Rat scaled = std::get<Rat>(t.c) * Rat(den_lcm);
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_num().get_mpz_t());
    }
    Rat u(den_lcm, num_gcd);
    u.canonicalize();
    if (sgn(std::get<Rat>(a.lead().c)) < 0) u = -u;
    if (factor) *factor = u;
    return poly_scale(cx, u, a);
}

std::string poly_show(const PolyCtx& cx, const Poly& a) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : a.t) {
        std::string c = cx.coeff.show(t.c);
        bool neg = !c.empty() && c[0] == '-';
        std::string mag = neg ? c.substr(1) : c;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        std::vector<std::string> factors;
        if (mag != "1" || t.m.is_one()) factors.push_back(mag);
        for (std::size_t i = 0; i < cx.nvars(); ++i) {
            if (t.m.e[i] == 0) continue;
            if (t.m.e[i] == 1)
                factors.push_back(cx.vars[i]);
            else
                factors.push_back(cx.vars[i] + "^" + std::to_string(t.m.e[i]));
        }
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i) os << "*";
            os << factors[i];
        }
    }
    return os.str();
}

namespace {

struct PolyLexer {
    const std::string& s;
    std::size_t i = 0;

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip();
        return i >= s.size();
    }
    char peek() {
        skip();
        return i < s.size() ? s[i] : '\0';
    }
    [[noreturn]] void fail(const std::string& want) {
        raise(ErrorCode::Parse, "polynomial parse error at column " + std::to_string(i + 1) +
                                    ": expected " + want);
    }
};

struct PolyParser {
    const PolyCtx& cx;
    PolyLexer lx;

    Poly parse() {
        Poly p = expr();
        if (!lx.eof()) lx.fail("end of polynomial");
        return p;
    }

    Poly expr() {
        bool neg = false;
        while (lx.peek() == '+' || lx.peek() == '-') {
            if (lx.s[lx.i] == '-') neg = !neg;
            ++lx.i;
        }
        Poly acc = product();
        if (neg) acc = poly_neg(cx, acc);
        while (!lx.eof() && (lx.peek() == '+' || lx.peek() == '-')) {
            bool minus = lx.peek() == '-';
            ++lx.i;
            Poly rhs = product();
            acc = minus ? poly_sub(cx, acc, rhs) : poly_add(cx, acc, rhs);
        }
        return acc;
    }

    Poly product() {
        Poly acc = factor();
        while (!lx.eof() && lx.peek() == '*') {
            ++lx.i;
            acc = poly_mul(cx, acc, factor());
        }
        return acc;
    }

    Poly factor() {
        char c = lx.peek();
        if (c == '(') {
            ++lx.i;
            Poly inner = expr();
            if (lx.peek() != ')') lx.fail("')'");
            ++lx.i;
            return maybe_pow(inner);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return maybe_pow(number());
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return maybe_pow(variable());
        if (c == '-') {  // unary minus inside a product
            ++lx.i;
            return poly_neg(cx, factor());
        }
        lx.fail("number, variable or '('");
    }

    Poly maybe_pow(Poly base) {
        while (!lx.eof() && lx.peek() == '^') {
            ++lx.i;
            if (!std::isdigit(static_cast<unsigned char>(lx.peek()))) lx.fail("exponent");
            unsigned long k = std::stoul(read_digits());
            base = poly_pow(cx, base, k);
        }
        return base;
    }

    std::string read_digits() {
        lx.skip();
        std::size_t start = lx.i;
        while (lx.i < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.i]))) ++lx.i;
        return lx.s.substr(start, lx.i - start);
    }

    Poly number() {
        Int num(read_digits());
        if (!lx.eof() && lx.peek() == '/') {
            // rational literal NUM/DEN (there is no division operator)
            ++lx.i;
            if (!std::isdigit(static_cast<unsigned char>(lx.peek()))) lx.fail("denominator");
            Int den(read_digits());
            require(sgn(den) != 0, ErrorCode::Parse, "zero denominator in literal");
            if (cx.coeff.tag == ScalarTag::QQ) {
                Rat q(num, den);
                q.canonicalize();
                return poly_const(cx, q);
            }
            Scalar d = cx.coeff.from_mpz(den);
            require(cx.coeff.is_unit(d), ErrorCode::Parse,
                    "rational literal denominator is not invertible in this ring");
            return poly_const(cx, cx.coeff.mul(cx.coeff.from_mpz(num), cx.coeff.inv(d)));
        }
        return poly_const(cx, cx.coeff.from_mpz(num));
    }

    Poly variable() {
        lx.skip();
        std::size_t start = lx.i;
        while (lx.i < lx.s.size() &&
               (std::isalnum(static_cast<unsigned char>(lx.s[lx.i])) || lx.s[lx.i] == '_'))
            ++lx.i;
        std::string name = lx.s.substr(start, lx.i - start);
        for (std::size_t v = 0; v < cx.nvars(); ++v) {
            if (cx.vars[v] == name) return poly_var(cx, v);
        }
        raise(ErrorCode::Parse, "unknown variable '" + name + "' at column " + std::to_string(start + 1));
    }
};

}  // namespace

Poly poly_parse(const PolyCtx& cx, const std::string& text) {
    PolyParser p{cx, PolyLexer{text}};
    return p.parse();
}

}  // namespace halg
