#include <cctype>

#include "halg/cli.hpp"

namespace halg::cli {

namespace {

struct Cursor {
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
    bool try_char(char c) {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    void expect_char(char c) {
        if (!try_char(c)) fail(std::string("'") + c + "'");
    }
    [[noreturn]] void fail(const std::string& expected) {
        raise(ErrorCode::Parse, "parse error at column " + std::to_string(i + 1) + ": expected " +
                                    expected);
    }

    std::string ident() {
        skip();
        std::size_t start = i;
        if (i < s.size() && (std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_')) {
            ++i;
            while (i < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
                ++i;
        }
        if (start == i) fail("identifier");
        return s.substr(start, i - start);
    }
    bool try_keyword(const std::string& kw) {
        skip();
        std::size_t save = i;
        if (s.compare(i, kw.size(), kw) == 0) {
            std::size_t end = i + kw.size();
            bool boundary = end >= s.size() ||
                            !(std::isalnum(static_cast<unsigned char>(s[end])) || s[end] == '_');
            if (boundary) {
                i = end;
                return true;
            }
        }
        i = save;
        return false;
    }
    void expect_keyword(const std::string& kw) {
        if (!try_keyword(kw)) fail("'" + kw + "'");
    }
    std::size_t integer() {
        skip();
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) fail("integer");
        return std::stoul(s.substr(start, i - start));
    }

    // raw text until one of the stop keywords (at depth 0) or end of line
    std::string until_keyword(const std::vector<std::string>& stops) {
        skip();
        std::size_t start = i;
        int depth = 0;
        while (i < s.size()) {
            char c = s[i];
            if (c == '(' || c == '[' || c == '{') ++depth;
            if (c == ')' || c == ']' || c == '}') --depth;
            if (depth == 0) {
                for (const auto& kw : stops) {
                    if (s.compare(i, kw.size(), kw) == 0) {
                        bool lb = i == start ||
                                  !(std::isalnum(static_cast<unsigned char>(s[i - 1])) ||
                                    s[i - 1] == '_');
                        std::size_t end = i + kw.size();
                        bool rb = end >= s.size() ||
                                  !(std::isalnum(static_cast<unsigned char>(s[end])) ||
                                    s[end] == '_');
                        if (lb && rb) return s.substr(start, i - start);
                    }
                }
            }
            ++i;
        }
        return s.substr(start);
    }

    // { item, item, ... } split at top-level commas
    std::vector<std::string> braced_list() {
        expect_char('{');
        std::vector<std::string> items;
        std::string cur;
        int depth = 0;
        while (i < s.size()) {
            char c = s[i];
            if (c == '(' || c == '[') ++depth;
            if (c == ')' || c == ']') --depth;
            if (c == '}' && depth == 0) {
                ++i;
                if (!cur.empty()) items.push_back(cur);
                return items;
            }
            if (c == ',' && depth == 0) {
                items.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
            ++i;
        }
        fail("'}'");
    }

    // [[a, b], [c, d]] matrix of raw entry strings; [] is the empty matrix
    std::vector<std::vector<std::string>> matrix() {
        expect_char('[');
        std::vector<std::vector<std::string>> rows;
        skip();
        if (try_char(']')) return rows;
        while (true) {
            expect_char('[');
            std::vector<std::string> row;
            std::string cur;
            int depth = 0;
            while (i < s.size()) {
                char c = s[i];
                if (c == '(' || c == '[') ++depth;
                if (c == ')' || c == ']') {
                    if (c == ']' && depth == 0) {
                        ++i;
                        if (!cur.empty()) row.push_back(cur);
                        break;
                    }
                    --depth;
                }
                if (c == ',' && depth == 0) {
                    row.push_back(cur);
                    cur.clear();
                } else {
                    cur += c;
                }
                ++i;
            }
            rows.push_back(std::move(row));
            skip();
            if (try_char(']')) return rows;
            expect_char(',');
        }
    }

    // flat [a, b, c] vector of raw entries
    std::vector<std::string> bracket_list() {
        expect_char('[');
        std::vector<std::string> items;
        std::string cur;
        int depth = 0;
        while (i < s.size()) {
            char c = s[i];
            if (c == '(' || c == '[') ++depth;
            if (c == ')' || c == ']') {
                if (c == ']' && depth == 0) {
                    ++i;
                    if (!cur.empty()) items.push_back(cur);
                    return items;
                }
                --depth;
            }
            if (c == ',' && depth == 0) {
                items.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
            ++i;
        }
        fail("']'");
    }
};

bool looks_like_ring_literal(Cursor& c) {
    std::size_t save = c.i;
    bool yes = c.try_keyword("ZZ") || c.try_keyword("QQ") || c.try_keyword("GF");
    c.i = save;
    return yes;
}

// a ring reference: inline literal ZZ/QQ[..]/GF(p)[..] or a bound name
RingRef ring_ref(Cursor& c) {
    RingRef r;
    r.present = true;
    if (looks_like_ring_literal(c)) {
        std::size_t start = c.i;
        c.ident();  // ZZ | QQ | GF
        if (c.try_char('(')) {
            c.integer();
            c.expect_char(')');
        }
        if (c.try_char('[')) {
            while (!c.try_char(']')) ++c.i;
        }
        c.try_keyword("lex") || c.try_keyword("degrevlex");
        r.inline_src = c.s.substr(start, c.i - start);
    } else {
        r.name = c.ident();
    }
    return r;
}

RingRef optional_ring_ref(Cursor& c, char next_delim) {
    // a ring reference is present when the next token is not the delimiter
    c.skip();
    if (c.peek() == next_delim) return RingRef{};
    return ring_ref(c);
}

}  // namespace

RingPtr parse_ring_literal(const std::string& text) {
    Cursor c{text};
    RingPtr base;
    if (c.try_keyword("ZZ")) {
        base = Ring::ZZ();
    } else if (c.try_keyword("QQ")) {
        base = Ring::QQ();
    } else if (c.try_keyword("GF")) {
        c.expect_char('(');
        std::size_t p = c.integer();
        c.expect_char(')');
        base = Ring::GF(p);
    } else {
        c.fail("ZZ, QQ or GF(p)");
    }
    if (!c.try_char('[')) {
        if (!c.eof()) c.fail("'[' or end of ring literal");
        return base;
    }
    std::vector<std::string> vars;
    while (true) {
        vars.push_back(c.ident());
        if (c.try_char(']')) break;
        c.expect_char(',');
    }
    OrderTag order = OrderTag::DegRevLex;
    if (c.try_keyword("lex")) order = OrderTag::Lex;
    else c.try_keyword("degrevlex");
    if (!c.eof()) c.fail("end of ring literal");
    return Ring::poly_over(base, vars, order);
}

Command parse_command(const std::string& line) {
    Cursor c{line};
    if (c.eof()) return HelpCmd{};

    if (c.try_keyword("let")) {
        std::string name = c.ident();
        c.expect_char('=');
        if (c.try_keyword("module")) {
            LetModule m;
            m.name = name;
            m.ring = ring_ref(c);
            c.expect_keyword("gens");
            m.gens = c.integer();
            c.expect_keyword("rels");
            m.rels = c.matrix();
            return m;
        }
        if (c.try_keyword("hom")) {
            LetHom h;
            h.name = name;
            h.src = c.ident();
            h.tgt = c.ident();
            h.mat = c.matrix();
            return h;
        }
        if (c.try_keyword("localize")) {
            LetLocalization l;
            l.name = name;
            l.ring = ring_ref(c);
            c.expect_keyword("at");
            l.gens = c.braced_list();
            return l;
        }
        LetRing r;
        r.name = name;
        c.skip();
        r.source = c.s.substr(c.i);
        require(!r.source.empty(), ErrorCode::Parse, "expected a ring literal after '='");
        return r;
    }
    if (c.try_keyword("groebner")) {
        Groebner g;
        g.ring = optional_ring_ref(c, '{');
        g.gens = c.braced_list();
        return g;
    }
    if (c.try_keyword("reduce")) {
        ReduceCmd r;
        r.ring = optional_ring_ref(c, ':');
        c.expect_char(':');
        r.f = c.until_keyword({"by"});
        c.expect_keyword("by");
        r.gens = c.braced_list();
        return r;
    }
    if (c.try_keyword("member")) {
        MemberCmd m;
        m.ring = optional_ring_ref(c, ':');
        c.expect_char(':');
        m.f = c.until_keyword({"in"});
        c.expect_keyword("in");
        m.gens = c.braced_list();
        return m;
    }
    if (c.try_keyword("syzygy")) {
        SyzygyCmd s;
        s.ring = optional_ring_ref(c, '{');
        s.gens = c.braced_list();
        return s;
    }
    if (c.try_keyword("coeffs")) {
        CoeffsCmd k;
        k.ring = optional_ring_ref(c, ':');
        c.expect_char(':');
        k.f = c.until_keyword({"over"});
        c.expect_keyword("over");
        k.split = c.braced_list();
        return k;
    }
    if (c.try_keyword("snf")) {
        SnfCmd s;
        s.ring = optional_ring_ref(c, '[');
        s.mat = c.matrix();
        return s;
    }
    if (c.try_keyword("solve")) {
        SolveCmd s;
        s.ring = optional_ring_ref(c, '[');
        s.mat = c.matrix();
        s.rhs = c.bracket_list();
        return s;
    }
    if (c.try_keyword("resolve")) {
        ResolveCmd r;
        r.module = c.ident();
        r.length = c.integer();
        return r;
    }
    if (c.try_keyword("torles")) {
        TorLesCmd t;
        t.inject = c.ident();
        t.project = c.ident();
        t.coeff = c.ident();
        t.max_degree = c.integer();
        return t;
    }
    if (c.try_keyword("tor")) {
        TorCmd t;
        t.left = c.ident();
        t.right = c.ident();
        t.degree = c.integer();
        return t;
    }
    if (c.try_keyword("flatcheck")) {
        FlatcheckCmd f;
        f.ring = optional_ring_ref(c, ':');
        c.expect_char(':');
        f.f = c.until_keyword({"over"});
        c.expect_keyword("over");
        f.split = c.braced_list();
        return f;
    }
    if (c.try_keyword("wreduce")) {
        WreduceCmd w;
        c.skip();
        w.word = c.s.substr(c.i);
        return w;
    }
    if (c.try_keyword("abelianize")) {
        AbelianizeCmd a;
        c.skip();
        a.presentation = c.s.substr(c.i);
        return a;
    }
    if (c.try_keyword("fraceq")) {
        FracEqCmd f;
        f.loc = c.ident();
        c.expect_char(':');
        f.lhs = c.until_keyword({"="});
        c.expect_char('=');
        c.skip();
        f.rhs = c.s.substr(c.i);
        require(!f.rhs.empty(), ErrorCode::Parse, "expected a right-hand side fraction");
        return f;
    }
    if (c.try_keyword("frac")) {
        FracCmd f;
        f.loc = c.ident();
        c.expect_char(':');
        // split a left-associative chain at top-level + - * (not inside parens,
        // and '-' only as a binary operator)
        c.skip();
        std::string rest = c.s.substr(c.i);
        std::string cur;
        int depth = 0;
        bool expect_operand = true;
        for (std::size_t k = 0; k < rest.size(); ++k) {
            char ch = rest[k];
            if (ch == '(') ++depth;
            if (ch == ')') --depth;
            bool is_op = depth == 0 && (ch == '+' || ch == '*' || (ch == '-' && !expect_operand));
            if (is_op) {
                f.operands.push_back(cur);
                f.ops.push_back(ch);
                cur.clear();
                expect_operand = true;
            } else {
                cur += ch;
                if (!std::isspace(static_cast<unsigned char>(ch))) expect_operand = false;
            }
        }
        f.operands.push_back(cur);
        return f;
    }
    if (c.try_keyword("strickland")) {
        StricklandCmd s;
        s.loc = c.ident();
        if (!c.eof()) s.samples = c.integer();
        return s;
    }
    if (c.try_keyword("ucheck")) {
        UcheckCmd u;
        c.skip();
        u.file = c.s.substr(c.i);
        require(!u.file.empty(), ErrorCode::Parse, "expected a file path");
        return u;
    }
    if (c.try_keyword("cohom")) {
        // cohom FILE DEGREE; the degree is the trailing token
        CohomCmd h;
        c.skip();
        std::string rest = c.s.substr(c.i);
        while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.back())))
            rest.pop_back();
        std::size_t cut = rest.find_last_of(" \t");
        require(cut != std::string::npos, ErrorCode::Parse, "expected: cohom FILE DEGREE");
        h.file = rest.substr(0, cut);
        while (!h.file.empty() && std::isspace(static_cast<unsigned char>(h.file.back())))
            h.file.pop_back();
        try {
            h.degree = std::stol(rest.substr(cut + 1));
        } catch (const std::exception&) {
            raise(ErrorCode::Parse, "expected an integer degree after the file name");
        }
        return h;
    }
    if (c.try_keyword("les")) {
        LesCmd l;
        c.skip();
        l.file = c.s.substr(c.i);
        require(!l.file.empty(), ErrorCode::Parse, "expected a file path");
        return l;
    }
    if (c.try_keyword("binnat")) {
        BinnatCmd b;
        b.n = c.integer();
        return b;
    }
    if (c.try_keyword("run")) {
        RunCmd r;
        c.skip();
        r.file = c.s.substr(c.i);
        require(!r.file.empty(), ErrorCode::Parse, "expected a file path");
        return r;
    }
    if (c.try_keyword("help")) return HelpCmd{};
    if (c.try_keyword("quit") || c.try_keyword("exit")) return QuitCmd{};

    raise(ErrorCode::Parse,
          "unknown command verb at column " + std::to_string(c.i + 1) +
              " (expected one of: let, groebner, reduce, member, syzygy, coeffs, snf, solve, "
              "resolve, tor, torles, flatcheck, wreduce, abelianize, frac, fraceq, strickland, "
              "ucheck, cohom, les, binnat, run, help, quit)");
}

}  // namespace halg::cli
