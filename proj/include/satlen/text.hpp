#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "satlen/polynomial.hpp"

namespace satlen {

/// Prints terms in the polynomial's own order: `x^2 - 3*y*v + 1`.
template <CoefficientField K>
std::string to_text(const Polynomial<K>& p, const std::vector<std::string>& names) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : p.terms()) {
        std::string c = p.field().to_string(t.coefficient);
        bool negative = !c.empty() && c[0] == '-';
        if (negative) c.erase(0, 1);
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;

        std::string mono;
        for (std::size_t i = 0; i < p.nvars(); ++i) {
            int e = t.monomial[i];
            if (e == 0) continue;
            if (!mono.empty()) mono += '*';
            mono += i < names.size() ? names[i] : "x" + std::to_string(i);
            if (e > 1) mono += "^" + std::to_string(e);
        }
        if (mono.empty())
            out += c;
        else if (c == "1")
            out += mono;
        else
            out += c + "*" + mono;
    }
    return out;
}

namespace detail {

template <CoefficientField K>
class PolynomialParser {
public:
    PolynomialParser(std::string_view text, const std::vector<std::string>& names, const K& field,
                     MonomialOrder order)
        : text_(text), names_(names), field_(field), order_(order) {}

    Polynomial<K> parse() {
        skip_space();
        if (pos_ == text_.size()) fail("empty polynomial");
        Polynomial<K> p = expr();
        skip_space();
        if (pos_ != text_.size()) fail(std::string("unexpected character '") + text_[pos_] + "'");
        return p;
    }

private:
    using Poly = Polynomial<K>;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_ + 1); }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Poly constant(typename K::value_type c) const { return Poly::constant(field_, names_.size(), c, order_); }

    Poly expr() {
        Poly acc = constant(field_.zero());
        bool negate = false;
        if (accept('-'))
            negate = true;
        else
            accept('+');
        Poly t = term();
        acc = negate ? acc - t : acc + t;
        for (;;) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    bool at_factor_start() {
        skip_space();
        if (pos_ >= text_.size()) return false;
        char c = text_[pos_];
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(';
    }

    Poly term() {
        Poly acc = factor();
        for (;;) {
            if (accept('*')) {
                acc *= factor();
            } else if (accept('/')) {
                skip_space();
                std::size_t start = pos_;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
                if (start == pos_) fail("expected integer denominator");
                auto d = field_.from_decimal(text_.substr(start, pos_ - start));
                if (field_.is_zero(d)) fail("division by zero");
                acc = acc.scaled(field_.inv(d));
            } else if (at_factor_start()) {
                acc *= factor();
            } else {
                return acc;
            }
        }
    }

    Poly factor() {
        Poly base = primary();
        if (accept('^')) {
            skip_space();
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent after '^'");
            if (pos_ - start > 5) fail("exponent too large");
            base = base.pow(std::stoi(std::string(text_.substr(start, pos_ - start))));
        }
        return base;
    }

    Poly primary() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Poly inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return constant(field_.from_decimal(text_.substr(start, pos_ - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string_view name = text_.substr(start, pos_ - start);
            for (std::size_t i = 0; i < names_.size(); ++i)
                if (names_[i] == name) return Poly::variable(field_, names_.size(), i, order_);
            pos_ = start;
            fail("unknown variable '" + std::string(name) + "'");
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    std::string_view text_;
    const std::vector<std::string>& names_;
    const K& field_;
    MonomialOrder order_;
    std::size_t pos_ = 0;
};

} // namespace detail

/// Parses `x^2 - 3*y*v`, `2x(y+1)`, `1/2*x` (rationals or inverses mod p).
/// Throws ParseError carrying the 1-based column of the offending character.
template <CoefficientField K>
Polynomial<K> parse_polynomial(std::string_view text, const std::vector<std::string>& names, const K& field,
                               MonomialOrder order = MonomialOrder::grevlex()) {
    return detail::PolynomialParser<K>(text, names, field, order).parse();
}

} // namespace satlen
