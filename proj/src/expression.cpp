#include "chern/expression.hpp"

#include <cctype>
#include <optional>

namespace chern {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    size_t offset = 0;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }
    Token take() {
        Token t = current_;
        advance();
        return t;
    }
    std::string_view text() const { return text_; }

private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        current_.offset = pos_;
        if (pos_ >= text_.size()) {
            current_ = {Tok::End, "", pos_};
            return;
        }
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            current_ = {Tok::Number, std::string(text_.substr(start, pos_ - start)), start};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            current_ = {Tok::Ident, std::string(text_.substr(start, pos_ - start)), start};
            return;
        }
        // UTF-8 middle dot (multiplication) and minus sign
        if (text_.substr(pos_).starts_with("\xC2\xB7")) {
            current_ = {Tok::Star, "*", pos_};
            pos_ += 2;
            return;
        }
        if (text_.substr(pos_).starts_with("\xE2\x88\x92")) {
            current_ = {Tok::Minus, "-", pos_};
            pos_ += 3;
            return;
        }
        size_t start = pos_++;
        switch (c) {
            case '+': current_ = {Tok::Plus, "+", start}; return;
            case '-': current_ = {Tok::Minus, "-", start}; return;
            case '*': current_ = {Tok::Star, "*", start}; return;
            case '^': current_ = {Tok::Caret, "^", start}; return;
            case '/': current_ = {Tok::Slash, "/", start}; return;
            case '(': current_ = {Tok::LParen, "(", start}; return;
            case ')': current_ = {Tok::RParen, ")", start}; return;
            default:
                current_ = {Tok::End, std::string(1, c), start};
                bad_char_ = true;
                return;
        }
    }

public:
    bool bad_char_ = false;

private:
    std::string_view text_;
    size_t pos_ = 0;
    Token current_;
};

std::pair<int, int> line_column(std::string_view text, size_t offset) {
    int line = 1, col = 1;
    for (size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

[[noreturn]] void fail(const Lexer& lex, const Token& at, const std::string& expected) {
    auto [line, col] = line_column(lex.text(), at.offset);
    std::string got = at.kind == Tok::End && at.text.empty() ? "end of input"
                                                             : "\"" + at.text + "\"";
    throw ParseError("parse error at " + std::to_string(line) + ":" + std::to_string(col) +
                         ": expected " + expected + ", got " + got,
                     line, col, expected);
}

// Ring adapters: both value types share +,-,*,scalar ops; the adapter
// supplies symbol lookup, the scalar unit part, and graded truncation for
// series inverses.

struct ModelRing {
    ModelPtr model;
    using Value = Element;
    Value constant(const Rational& q) const { return Element::scalar(model, q); }
    std::optional<Value> lookup(const std::string& name) const {
        auto idx = model->generator_index(name);
        if (!idx) return std::nullopt;
        return Element::generator(model, *idx);
    }
    Rational unit_part(const Value& v) const {
        return v.coefficient(std::vector<int>(model->generators().size(), 0));
    }
    int cutoff() const { return model->dimension(); }
    Value truncate(const Value& v, int max_degree) const {
        Value out = Element::zero(model);
        for (int d = 0; d <= max_degree; ++d) out += v.graded_part(d);
        return out;
    }
};

struct ChernRing {
    int rank;
    int max_degree;
    using Value = ChernPolynomial;
    Value constant(const Rational& q) const { return ChernPolynomial::scalar(q); }
    std::optional<Value> lookup(const std::string& name) const {
        if (name.size() < 2 || name[0] != 'c') return std::nullopt;
        int idx = 0;
        for (size_t i = 1; i < name.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
            idx = idx * 10 + (name[i] - '0');
            if (idx > 1000) return std::nullopt;
        }
        return ChernPolynomial::variable(idx, rank);  // 0 beyond the rank by convention
    }
    Rational unit_part(const Value& v) const { return v.coefficient(Partition{}); }
    int cutoff() const { return max_degree; }
    Value truncate(const Value& v, int degree_cap) const {
        ChernPolynomial out(v.rank());
        for (int d = 0; d <= degree_cap; ++d) out += v.graded_part(d);
        return out;
    }
};

template <class Ring>
class Parser {
public:
    Parser(std::string_view text, const Ring& ring) : lex_(text), ring_(ring) {}

    typename Ring::Value parse() {
        auto v = expr();
        if (lex_.peek().kind != Tok::End || lex_.bad_char_)
            fail(lex_, lex_.peek(), "operator or end of input");
        return v;
    }

private:
    using Value = typename Ring::Value;

    Value expr() {
        bool negate = false;
        if (lex_.peek().kind == Tok::Minus) {
            lex_.take();
            negate = true;
        }
        Value acc = term();
        if (negate) acc = acc * Rational(-1);
        while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
            bool minus = lex_.take().kind == Tok::Minus;
            Value rhs = term();
            acc = minus ? acc - rhs : acc + rhs;
        }
        return acc;
    }

    bool starts_factor(Tok k) const {
        return k == Tok::Number || k == Tok::Ident || k == Tok::LParen;
    }

    Value term() {
        Value acc = factor();
        for (;;) {
            if (lex_.peek().kind == Tok::Star) {
                lex_.take();
                acc = acc * factor();
            } else if (starts_factor(lex_.peek().kind)) {  // juxtaposition
                acc = acc * factor();
            } else {
                return acc;
            }
        }
    }

    Value factor() {
        Value base = atom();
        if (lex_.peek().kind != Tok::Caret) return base;
        lex_.take();
        int e = exponent();
        if (e >= 0) return power(base, e);
        Value inv = series_inverse(base);
        return power(inv, -e);
    }

    int exponent() {
        bool parens = false, negate = false;
        if (lex_.peek().kind == Tok::LParen) {
            lex_.take();
            parens = true;
        }
        if (parens && lex_.peek().kind == Tok::Minus) {
            lex_.take();
            negate = true;
        }
        if (lex_.peek().kind != Tok::Number) fail(lex_, lex_.peek(), "integer exponent");
        Token t = lex_.take();
        long value = std::stol(t.text);
        if (value > 64) fail(lex_, t, "exponent <= 64");
        if (parens) {
            if (lex_.peek().kind != Tok::RParen) fail(lex_, lex_.peek(), "\")\"");
            lex_.take();
        }
        return static_cast<int>(negate ? -value : value);
    }

    Value atom() {
        const Token& t = lex_.peek();
        switch (t.kind) {
            case Tok::Number: {
                Token num = lex_.take();
                Rational q(rational_from_string(num.text));
                if (lex_.peek().kind == Tok::Slash) {
                    lex_.take();
                    if (lex_.peek().kind != Tok::Number)
                        fail(lex_, lex_.peek(), "denominator digits");
                    Token den = lex_.take();
                    Rational d = rational_from_string(den.text);
                    if (d == 0) fail(lex_, den, "nonzero denominator");
                    q /= d;
                }
                return ring_.constant(q);
            }
            case Tok::Ident: {
                Token id = lex_.take();
                auto v = ring_.lookup(id.text);
                if (!v) fail(lex_, id, "known symbol");
                return *v;
            }
            case Tok::LParen: {
                lex_.take();
                Value v = expr();
                if (lex_.peek().kind != Tok::RParen) fail(lex_, lex_.peek(), "\")\"");
                lex_.take();
                return v;
            }
            default:
                fail(lex_, t, "number, symbol or \"(\"");
        }
    }

    Value power(const Value& base, int e) {
        Value acc = ring_.constant(Rational(1));
        for (int i = 0; i < e; ++i) acc = acc * base;
        return acc;
    }

    /// u^{-1} = u0^{-1} Σ_k (1 - u/u0)^k, truncated; u0 must be nonzero.
    Value series_inverse(const Value& u) {
        Rational u0 = ring_.unit_part(u);
        if (u0 == 0) fail(lex_, lex_.peek(), "series with invertible unit part before ^(-negative)");
        Value v = ring_.constant(Rational(1)) - u * (Rational(1) / u0);
        Value acc = ring_.constant(Rational(1));
        Value p = ring_.constant(Rational(1));
        for (int k = 1; k <= ring_.cutoff(); ++k) {
            p = ring_.truncate(p * v, ring_.cutoff());
            acc = acc + p;
        }
        return acc * (Rational(1) / u0);
    }

    Lexer lex_;
    const Ring& ring_;
};

}  // namespace

Element parse_model_expression(std::string_view text, const ModelPtr& model) {
    ModelRing ring{model};
    return Parser<ModelRing>(text, ring).parse();
}

ChernPolynomial parse_chern_expression(std::string_view text, int rank, int max_degree) {
    ChernRing ring{rank, max_degree};
    return Parser<ChernRing>(text, ring).parse();
}

}  // namespace chern
