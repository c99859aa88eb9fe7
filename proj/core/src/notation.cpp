#include "conway/notation.hpp"

#include "conway/tangle2.hpp"
#include "conway/tangle3.hpp"

#include <cctype>
#include <optional>

namespace conway {

namespace {

enum class Tok {
    KwM,
    KwP5,
    KwRow2,
    KwCol2,
    KwMat2,
    KwRow5,
    KwCol5,
    Var,
    Integer,
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Comma,
    Semi,
    Eq,
    End,
};

struct Token {
    Tok kind;
    std::size_t offset;
    std::string text;
    VarId var = 0;
};

[[noreturn]] void lex_fail(const std::string& what, std::size_t off) {
    throw ParseError("lexical error: " + what + " at offset " + std::to_string(off), off);
}

std::vector<Token> lex(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            out.push_back({Tok::Integer, start, s.substr(start, i - start)});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            // A variable is 'a' followed immediately by digits; it ends where the
            // digits end, so "a1a2" lexes as two variables (juxtaposed product).
            if (c == 'a' && i + 1 < s.size() &&
                std::isdigit(static_cast<unsigned char>(s[i + 1]))) {
                ++i;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
                std::string word = s.substr(start, i - start);
                if (word[1] == '0')
                    lex_fail("variable index has a leading zero in \"" + word + "\"", start);
                if (word.size() > 10) lex_fail("variable index too large in \"" + word + "\"", start);
                Token t{Tok::Var, start, word};
                t.var = static_cast<VarId>(std::stoul(word.substr(1)));
                out.push_back(t);
                continue;
            }
            while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
                ++i;
            std::string word = s.substr(start, i - start);
            if (word == "M") {
                out.push_back({Tok::KwM, start, word});
            } else if (word == "P5") {
                out.push_back({Tok::KwP5, start, word});
            } else if (word == "row2") {
                out.push_back({Tok::KwRow2, start, word});
            } else if (word == "col2") {
                out.push_back({Tok::KwCol2, start, word});
            } else if (word == "mat2") {
                out.push_back({Tok::KwMat2, start, word});
            } else if (word == "row5") {
                out.push_back({Tok::KwRow5, start, word});
            } else if (word == "col5") {
                out.push_back({Tok::KwCol5, start, word});
            } else {
                lex_fail("unrecognized name \"" + word + "\"", start);
            }
            continue;
        }
        Tok k;
        switch (c) {
            case '+': k = Tok::Plus; break;
            case '-': k = Tok::Minus; break;
            case '*': k = Tok::Star; break;
            case '^': k = Tok::Caret; break;
            case '(': k = Tok::LParen; break;
            case ')': k = Tok::RParen; break;
            case ',': k = Tok::Comma; break;
            case ';': k = Tok::Semi; break;
            case '=': k = Tok::Eq; break;
            default: lex_fail(std::string("unexpected character '") + c + "'", i);
        }
        out.push_back({k, i, std::string(1, c)});
        ++i;
    }
    out.push_back({Tok::End, s.size(), ""});
    return out;
}

class Parser {
  public:
    explicit Parser(const std::string& text) : toks_(lex(text)) {}

    ExprNode parse_assertion() {
        std::vector<ExprNode> branches;
        branches.push_back(parse_product());
        while (cur().kind == Tok::Eq) {
            ++pos_;
            branches.push_back(parse_product());
        }
        if (cur().kind != Tok::End) fail("end of input");
        if (branches.size() == 1) return std::move(branches[0]);
        ExprNode e;
        e.kind = ExprNode::Kind::Assertion;
        e.children = std::move(branches);
        return e;
    }

  private:
    const Token& cur() const { return toks_[pos_]; }

    [[noreturn]] void fail(const std::string& what) {
        throw ParseError("syntax error: expected " + what + " at offset " +
                             std::to_string(cur().offset),
                         cur().offset);
    }

    void expect(Tok k, const char* what) {
        if (cur().kind != k) fail(what);
        ++pos_;
    }

    static bool poly_start(Tok k) {
        return k == Tok::Integer || k == Tok::Var || k == Tok::LParen || k == Tok::Plus ||
               k == Tok::Minus;
    }

    static bool atom_start(Tok k) {
        switch (k) {
            case Tok::KwM:
            case Tok::KwP5:
            case Tok::KwRow2:
            case Tok::KwCol2:
            case Tok::KwMat2:
            case Tok::KwRow5:
            case Tok::KwCol5: return true;
            default: return poly_start(k);
        }
    }

    ExprNode parse_product() {
        if (!atom_start(cur().kind)) fail("an expression");
        ExprNode e;
        e.kind = ExprNode::Kind::Product;
        while (atom_start(cur().kind)) e.children.push_back(parse_atom());
        return e;
    }

    ExprNode parse_atom() {
        switch (cur().kind) {
            case Tok::KwM: ++pos_; return node(ExprNode::Kind::MetricM, {});
            case Tok::KwP5: ++pos_; return node(ExprNode::Kind::MetricP5, {});
            case Tok::KwRow2: return parse_args(ExprNode::Kind::Row2, 2);
            case Tok::KwCol2: return parse_args(ExprNode::Kind::Col2, 2);
            case Tok::KwRow5: return parse_args(ExprNode::Kind::Row5, 5);
            case Tok::KwCol5: return parse_args(ExprNode::Kind::Col5, 5);
            case Tok::KwMat2: return parse_mat2();
            default: return node(ExprNode::Kind::PolyLit, {parse_poly()});
        }
    }

    static ExprNode node(ExprNode::Kind k, std::vector<Polynomial> polys) {
        ExprNode e;
        e.kind = k;
        e.polys = std::move(polys);
        return e;
    }

    ExprNode parse_args(ExprNode::Kind k, int n) {
        ++pos_;
        expect(Tok::LParen, "\"(\"");
        std::vector<Polynomial> args;
        args.push_back(parse_poly());
        for (int i = 1; i < n; ++i) {
            expect(Tok::Comma, "\",\"");
            args.push_back(parse_poly());
        }
        expect(Tok::RParen, "\")\"");
        return node(k, std::move(args));
    }

    ExprNode parse_mat2() {
        ++pos_;
        expect(Tok::LParen, "\"(\"");
        std::vector<Polynomial> args;
        args.push_back(parse_poly());
        expect(Tok::Comma, "\",\"");
        args.push_back(parse_poly());
        expect(Tok::Semi, "\";\"");
        args.push_back(parse_poly());
        expect(Tok::Comma, "\",\"");
        args.push_back(parse_poly());
        expect(Tok::RParen, "\")\"");
        return node(ExprNode::Kind::Mat2Lit, std::move(args));
    }

    Polynomial parse_poly() {
        bool neg = false;
        if (cur().kind == Tok::Plus || cur().kind == Tok::Minus) {
            neg = cur().kind == Tok::Minus;
            ++pos_;
        }
        Polynomial acc = parse_term();
        if (neg) acc = -acc;
        while (cur().kind == Tok::Plus || cur().kind == Tok::Minus) {
            bool minus = cur().kind == Tok::Minus;
            ++pos_;
            Polynomial t = parse_term();
            if (minus)
                acc -= t;
            else
                acc += t;
        }
        return acc;
    }

    Polynomial parse_term() {
        Polynomial t = parse_factor();
        for (;;) {
            if (cur().kind == Tok::Star) {
                ++pos_;
                t *= parse_factor();
            } else if (cur().kind == Tok::Var || cur().kind == Tok::LParen) {
                // juxtaposition: a1a2, 2a1, a3(a4+a5)
                t *= parse_factor();
            } else {
                return t;
            }
        }
    }

    Polynomial parse_factor() {
        Polynomial base;
        switch (cur().kind) {
            case Tok::Integer: base = Polynomial(Int(cur().text)); ++pos_; break;
            case Tok::Var: base = Polynomial::var(cur().var); ++pos_; break;
            case Tok::LParen: {
                ++pos_;
                base = parse_poly();
                expect(Tok::RParen, "\")\"");
                break;
            }
            default: fail("a polynomial");
        }
        if (cur().kind == Tok::Caret) {
            ++pos_;
            if (cur().kind != Tok::Integer) fail("an exponent");
            unsigned long e = std::stoul(cur().text);
            if (e > 64) fail("an exponent of at most 64");
            ++pos_;
            base = pow(base, static_cast<std::uint32_t>(e));
        }
        return base;
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

std::string join_polys(const std::vector<Polynomial>& ps, std::size_t from, std::size_t to) {
    std::string out;
    for (std::size_t i = from; i < to; ++i) {
        if (i > from) out += ",";
        out += ps[i].str();
    }
    return out;
}

}  // namespace

ExprNode parse(const std::string& text) { return Parser(text).parse_assertion(); }

std::string print(const ExprNode& e) {
    using K = ExprNode::Kind;
    switch (e.kind) {
        case K::PolyLit: return e.polys[0].str();
        case K::MetricM: return "M";
        case K::MetricP5: return "P5";
        case K::Row2: return "row2(" + join_polys(e.polys, 0, 2) + ")";
        case K::Col2: return "col2(" + join_polys(e.polys, 0, 2) + ")";
        case K::Row5: return "row5(" + join_polys(e.polys, 0, 5) + ")";
        case K::Col5: return "col5(" + join_polys(e.polys, 0, 5) + ")";
        case K::Mat2Lit:
            return "mat2(" + join_polys(e.polys, 0, 2) + "; " + join_polys(e.polys, 2, 4) + ")";
        case K::Product: {
            std::string out;
            for (std::size_t i = 0; i < e.children.size(); ++i) {
                if (i) out += " ";
                out += print(e.children[i]);
            }
            return out;
        }
        case K::Assertion: {
            std::string out;
            for (std::size_t i = 0; i < e.children.size(); ++i) {
                if (i) out += " = ";
                out += print(e.children[i]);
            }
            return out;
        }
    }
    throw std::logic_error("unreachable");
}

namespace {

struct PolyMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Polynomial> at;

    Polynomial& operator()(std::size_t r, std::size_t c) { return at[r * cols + c]; }
    const Polynomial& operator()(std::size_t r, std::size_t c) const { return at[r * cols + c]; }
};

PolyMatrix from_mat2(const Mat2& m) {
    return PolyMatrix{2, 2, {m.e[0][0], m.e[0][1], m.e[1][0], m.e[1][1]}};
}

PolyMatrix from_mat5(const Mat5& m) {
    PolyMatrix r{5, 5, {}};
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) r.at.push_back(m.e[i][j]);
    return r;
}

PolyMatrix atom_matrix(const ExprNode& a) {
    using K = ExprNode::Kind;
    switch (a.kind) {
        case K::PolyLit: return PolyMatrix{1, 1, {a.polys[0]}};
        case K::Row2: return PolyMatrix{1, 2, {a.polys[0], a.polys[1]}};
        case K::Col2: return PolyMatrix{2, 1, {a.polys[0], a.polys[1]}};
        case K::Mat2Lit:
            return PolyMatrix{2, 2, {a.polys[0], a.polys[1], a.polys[2], a.polys[3]}};
        case K::Row5: return PolyMatrix{1, 5, {a.polys.begin(), a.polys.end()}};
        case K::Col5: return PolyMatrix{5, 1, {a.polys.begin(), a.polys.end()}};
        case K::MetricM: return from_mat2(metric_m());
        case K::MetricP5: return from_mat5(metric_p5());
        default: throw std::logic_error("not an atom");
    }
}

PolyMatrix pm_mul(const PolyMatrix& x, const PolyMatrix& y) {
    PolyMatrix r{x.rows, y.cols, {}};
    r.at.resize(x.rows * y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            if (x(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < y.cols; ++j) r(i, j) += x(i, k) * y(k, j);
        }
    return r;
}

std::string shape(const PolyMatrix& m) {
    return std::to_string(m.rows) + "x" + std::to_string(m.cols);
}

}  // namespace

Polynomial expand(const ExprNode& e) {
    if (e.kind == ExprNode::Kind::Assertion)
        throw std::invalid_argument("expand takes a single product; use check_identity");
    const std::vector<ExprNode>* atoms;
    std::vector<ExprNode> self;
    if (e.kind == ExprNode::Kind::Product) {
        atoms = &e.children;
    } else {
        self.push_back(e);
        atoms = &self;
    }
    PolyMatrix acc = atom_matrix((*atoms)[0]);
    for (std::size_t i = 1; i < atoms->size(); ++i) {
        PolyMatrix next = atom_matrix((*atoms)[i]);
        if (acc.cols != next.rows)
            throw DimensionError("dimension mismatch between \"" + print((*atoms)[i - 1]) +
                                 "\" and \"" + print((*atoms)[i]) + "\" (" +
                                 shape(atom_matrix((*atoms)[i - 1])) + " against " + shape(next) +
                                 ")");
        acc = pm_mul(acc, next);
    }
    if (acc.rows != 1 || acc.cols != 1)
        throw DimensionError("product evaluates to " + shape(acc) + ", not a scalar");
    return acc.at[0];
}

IdentityOutcome check_identity(const ExprNode& e) {
    IdentityOutcome out;
    if (e.kind != ExprNode::Kind::Assertion) {
        out.all_equal = true;
        out.canonical = expand(e);
        return out;
    }
    out.all_equal = true;
    out.canonical = expand(e.children[0]);
    for (std::size_t i = 1; i < e.children.size(); ++i) {
        Polynomial p = expand(e.children[i]);
        if (!(p == out.canonical)) {
            out.all_equal = false;
            out.mismatches.push_back(p - out.canonical);
        }
    }
    return out;
}

}  // namespace conway
