#include "ospoly/expr.hpp"

#include "ospoly/errors.hpp"

#include <cctype>

namespace ospoly {

namespace {

struct Token {
    enum Kind { Symbol, Number, Plus, Minus, Star, Caret, LParen, RParen, End } kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    const std::string& s_;
    std::size_t i_ = 0;
    Token tok_;

    void advance() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        const std::size_t start = i_;
        if (i_ >= s_.size()) {
            tok_ = {Token::End, "", start};
            return;
        }
        const char c = s_[i_];
        switch (c) {
            case '+': tok_ = {Token::Plus, "+", start}; ++i_; return;
            case '-': tok_ = {Token::Minus, "-", start}; ++i_; return;
            case '*': tok_ = {Token::Star, "*", start}; ++i_; return;
            case '^': tok_ = {Token::Caret, "^", start}; ++i_; return;
            case '(': tok_ = {Token::LParen, "(", start}; ++i_; return;
            case ')': tok_ = {Token::RParen, ")", start}; ++i_; return;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
            if (j < s_.size() && s_[j] == '/') {
                std::size_t k = j + 1;
                while (k < s_.size() && std::isdigit(static_cast<unsigned char>(s_[k]))) ++k;
                if (k == j + 1) throw ParseError(j + 1, "expected digits after '/'");
                j = k;
            }
            tok_ = {Token::Number, s_.substr(i_, j - i_), start};
            i_ = j;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < s_.size() && std::isalpha(static_cast<unsigned char>(s_[j]))) ++j;
            tok_ = {Token::Symbol, s_.substr(i_, j - i_), start};
            i_ = j;
            return;
        }
        throw ParseError(start, std::string("unexpected character '") + c + "'");
    }
};

class Parser {
public:
    Parser(const std::string& s, AlgebraCase cas) : lex_(s), cas_(cas) {}

    GradedElement parse() {
        GradedElement e = expr();
        const Token& t = lex_.peek();
        if (t.kind != Token::End) throw ParseError(t.pos, "unexpected trailing input");
        return e;
    }

private:
    Lexer lex_;
    AlgebraCase cas_;

    GradedElement expr() {
        GradedElement acc = term();
        while (true) {
            const Token& t = lex_.peek();
            if (t.kind == Token::Plus) {
                lex_.take();
                acc += term();
            } else if (t.kind == Token::Minus) {
                lex_.take();
                acc -= term();
            } else {
                break;
            }
        }
        return acc;
    }

    GradedElement term() {
        bool neg = false;
        while (lex_.peek().kind == Token::Minus) {
            lex_.take();
            neg = !neg;
        }
        GradedElement acc = factor();
        while (lex_.peek().kind == Token::Star) {
            lex_.take();
            acc = acc * factor();
        }
        if (neg) acc *= Rational(-1);
        return acc;
    }

    GradedElement factor() {
        GradedElement base = atom();
        if (lex_.peek().kind == Token::Caret) {
            lex_.take();
            const Token t = lex_.take();
            if (t.kind != Token::Number || t.text.find('/') != std::string::npos ||
                t.text.size() > 4)
                throw ParseError(t.pos, "expected a small nonnegative integer exponent");
            base = base.pow(static_cast<unsigned>(std::stoul(t.text)));
        }
        return base;
    }

    GradedElement atom() {
        const Token t = lex_.take();
        switch (t.kind) {
            case Token::LParen: {
                GradedElement e = expr();
                const Token close = lex_.take();
                if (close.kind != Token::RParen) throw ParseError(close.pos, "expected ')'");
                return e;
            }
            case Token::Number:
                return GradedElement::from_coeff(
                    HTauPoly::constant(cas_, rational_from_string(t.text)));
            case Token::Symbol: return symbol(t);
            default: throw ParseError(t.pos, "expected value");
        }
    }

    GradedElement symbol(const Token& t) {
        const std::string& s = t.text;
        if (s == "H") return GradedElement::h_element(cas_);
        if (s == "l")
            return GradedElement::from_coeff(HTauPoly::lambda(cas_));
        const bool generic = cas_ == AlgebraCase::GenericFG;
        const bool weyl = cas_ == AlgebraCase::WeylPQ;
        const bool matrix = cas_ == AlgebraCase::MatrixUV;
        if (s == "G" || s == "Q" || s == "V") {
            if ((s == "G" && generic) || (s == "Q" && weyl) || (s == "V" && matrix))
                return GradedElement::raising(cas_);
            throw CaseMismatchError("generator " + s + " does not belong to the " +
                                    case_name(cas_) + " presentation");
        }
        if (s == "F" || s == "P" || s == "U") {
            if ((s == "F" && generic) || (s == "P" && weyl) || (s == "U" && matrix))
                return GradedElement::lowering(cas_);
            throw CaseMismatchError("generator " + s + " does not belong to the " +
                                    case_name(cas_) + " presentation");
        }
        if (s == "tau" || s == "t") {
            if (generic) return GradedElement::tau_element(cas_);
            throw CaseMismatchError("tau does not belong to the " + case_name(cas_) +
                                    " presentation");
        }
        throw ParseError(t.pos, "unknown symbol '" + s + "'");
    }
};

} // namespace

GradedElement parse_expression(const std::string& text, AlgebraCase cas) {
    Parser p(text, cas);
    return p.parse();
}

} // namespace ospoly
