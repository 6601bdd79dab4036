#include "bezout/parse.hpp"

#include <cctype>
#include <string>

namespace bezout {

namespace {

struct Token {
    enum Kind { Number, Imag, Var, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
    Kind kind;
    std::string digits;     // Number: literal digits
    std::size_t var_index;  // Var: zero-based
    std::size_t at;         // column, zero-based
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        const std::size_t at = pos_;
        if (pos_ >= text_.size()) return {Token::End, {}, 0, at};
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                digits += text_[pos_++];
            return {Token::Number, std::move(digits), 0, at};
        }
        if (c == 'i') {
            ++pos_;
            return {Token::Imag, {}, 0, at};
        }
        if (c == 'z') {
            ++pos_;
            std::string digits;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                digits += text_[pos_++];
            if (digits.size() > 6) fail(at, "variable index too large");
            const std::size_t index = digits.empty() ? 1 : std::stoul(digits);
            if (index == 0) fail(at, "variables are numbered from z1");
            return {Token::Var, {}, index - 1, at};
        }
        ++pos_;
        switch (c) {
            case '+': return {Token::Plus, {}, 0, at};
            case '-': return {Token::Minus, {}, 0, at};
            case '*': return {Token::Star, {}, 0, at};
            case '/': return {Token::Slash, {}, 0, at};
            case '^': return {Token::Caret, {}, 0, at};
            case '(': return {Token::LParen, {}, 0, at};
            case ')': return {Token::RParen, {}, 0, at};
            default: fail(at, std::string("unexpected character '") + c + "'");
        }
        return {Token::End, {}, 0, at};  // unreachable
    }

    [[noreturn]] static void fail(std::size_t at, const std::string& what) {
        throw parse_error("polynomial syntax error at column " + std::to_string(at + 1) + ": " + what);
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

class Parser {
public:
    Parser(std::string_view text, std::size_t n) : lexer_(text), n_(n) { advance(); }

    MultiPoly run() {
        MultiPoly p = parse_expr();
        if (cur_.kind != Token::End) fail("trailing input");
        return p;
    }

private:
    void advance() { cur_ = lexer_.next(); }
    [[noreturn]] void fail(const std::string& what) const { Lexer::fail(cur_.at, what); }

    static bool starts_atom(Token::Kind k) {
        return k == Token::Number || k == Token::Imag || k == Token::Var || k == Token::LParen;
    }

    MultiPoly parse_expr() {
        bool negate = false;
        if (cur_.kind == Token::Plus || cur_.kind == Token::Minus) {
            negate = cur_.kind == Token::Minus;
            advance();
        }
        MultiPoly acc = parse_term();
        if (negate) acc = -acc;
        while (cur_.kind == Token::Plus || cur_.kind == Token::Minus) {
            const bool minus = cur_.kind == Token::Minus;
            advance();
            const MultiPoly t = parse_term();
            acc = minus ? acc - t : acc + t;
        }
        return acc;
    }

    MultiPoly parse_term() {
        MultiPoly acc = parse_factor();
        for (;;) {
            if (cur_.kind == Token::Star) {
                advance();
                acc = acc * parse_factor();
            } else if (cur_.kind == Token::Slash) {
                const std::size_t at = cur_.at;
                advance();
                const MultiPoly d = parse_factor();
                if (!d.is_constant() || d.is_zero())
                    Lexer::fail(at, "division is only defined by a nonzero constant");
                acc = acc * d.constant_value().inverse();
            } else if (starts_atom(cur_.kind)) {
                acc = acc * parse_factor();  // juxtaposition multiplies
            } else {
                break;
            }
        }
        return acc;
    }

    MultiPoly parse_factor() {
        // Signs bind looser than '^': -z^2 reads as -(z^2).
        bool negate = false;
        while (cur_.kind == Token::Plus || cur_.kind == Token::Minus) {
            if (cur_.kind == Token::Minus) negate = !negate;
            advance();
        }
        MultiPoly base = parse_atom();
        if (cur_.kind == Token::Caret) {
            advance();
            if (cur_.kind != Token::Number) fail("expected an integer exponent after '^'");
            if (cur_.digits.size() > 5) fail("exponent too large");
            const unsigned long e = std::stoul(cur_.digits);
            advance();
            base = base.pow(e);
        }
        return negate ? -base : base;
    }

    MultiPoly parse_atom() {
        switch (cur_.kind) {
            case Token::Number: {
                const Integer value(cur_.digits);
                advance();
                return MultiPoly::constant(n_, GaussianRational(Rational(value)));
            }
            case Token::Imag:
                advance();
                return MultiPoly::constant(n_, GaussianRational::i());
            case Token::Var: {
                const std::size_t index = cur_.var_index;
                if (index >= n_)
                    fail("variable z" + std::to_string(index + 1) + " exceeds the variable count " +
                         std::to_string(n_));
                advance();
                return MultiPoly::variable(n_, index);
            }
            case Token::LParen: {
                advance();
                MultiPoly inner = parse_expr();
                if (cur_.kind != Token::RParen) fail("expected ')'");
                advance();
                return inner;
            }
            default:
                fail("expected a number, i, a variable or '('");
        }
    }

    Lexer lexer_;
    std::size_t n_;
    Token cur_{Token::End, {}, 0, 0};
};

}  // namespace

std::size_t scan_variable_count(std::string_view text) {
    std::size_t max_index = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] != 'z') continue;
        std::size_t j = i + 1;
        std::string digits;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])) &&
               digits.size() <= 6)
            digits += text[j++];
        const std::size_t index = digits.empty() ? 1 : std::stoul(digits);
        max_index = std::max(max_index, index);
        i = j - 1;
    }
    return max_index;
}

MultiPoly parse_poly(std::string_view text, std::size_t n) {
    return Parser(text, n).run();
}

}  // namespace bezout
