#ifndef REGPOW_PARSER_HPP
#define REGPOW_PARSER_HPP

#include <cctype>
#include <string>

#include "regpow/poly.hpp"

namespace regpow {

// Recursive-descent parser for the polynomial grammar
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := coeff | var ('^' uint)? | '(' expr ')'
//   coeff  := int ('/' uint)?
// Whitespace is insignificant; variables are [A-Za-z][A-Za-z0-9_]*.
template <class C>
class PolyParser {
  public:
    PolyParser(const std::string& text, RingPtr ring) : s_(text), ring_(std::move(ring)) {}

    Poly<C> parse() {
        skip_ws();
        Poly<C> p = expr();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("unexpected trailing input", pos_);
        return p;
    }

  private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    bool eat(char c) {
        if (peek() == c) {
            ++pos_;
            skip_ws();
            return true;
        }
        return false;
    }

    Poly<C> expr() {
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        Poly<C> acc = term();
        if (neg) acc = -acc;
        while (true) {
            if (eat('+'))
                acc = acc + term();
            else if (eat('-'))
                acc = acc - term();
            else
                break;
        }
        return acc;
    }

    Poly<C> term() {
        Poly<C> acc = factor();
        while (eat('*')) acc = acc * factor();
        return acc;
    }

    Poly<C> factor() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            skip_ws();
            Poly<C> p = expr();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') return coeff();
        if (std::isalpha(static_cast<unsigned char>(c))) return variable();
        throw ParseError("expected coefficient, variable or '('", pos_);
    }

    Poly<C> coeff() {
        size_t start = pos_;
        mpz_class num = integer();
        mpz_class den = 1;
        skip_ws();
        if (peek() == '/') {
            ++pos_;
            skip_ws();
            den = unsigned_integer();
            if (den == 0) throw ParseError("zero denominator", start);
        }
        skip_ws();
        return Poly<C>::constant(ring_, scalar_ops<C>::from_fraction(ring_->field(), num, den));
    }

    Poly<C> variable() {
        size_t start = pos_;
        std::string name;
        name += s_[pos_++];
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            name += s_[pos_++];
        int idx = ring_->var_index(name);
        if (idx < 0) throw ParseError("unknown variable '" + name + "'", start);
        int32_t exp = 1;
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            mpz_class e = unsigned_integer();
            if (e > 100000) throw ParseError("exponent too large", start);
            exp = static_cast<int32_t>(e.get_si());
            skip_ws();
        }
        return Poly<C>::monomial(ring_, scalar_ops<C>::one(ring_->field()),
                                 ring_->mono_var(static_cast<size_t>(idx), exp));
    }

    mpz_class integer() {
        bool neg = false;
        if (peek() == '-') {
            ++pos_;
            neg = true;
        }
        mpz_class v = unsigned_integer();
        return neg ? mpz_class(-v) : v;
    }

    mpz_class unsigned_integer() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected digit", pos_);
        std::string digits;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) digits += s_[pos_++];
        return mpz_class(digits);
    }

    const std::string& s_;
    RingPtr ring_;
    size_t pos_ = 0;
};

template <class C>
Poly<C> parse_poly(const std::string& text, RingPtr ring) {
    if (!scalar_ops<C>::matches(ring->field())) throw Error("coefficient type does not match ring field");
    return PolyParser<C>(text, std::move(ring)).parse();
}

}  // namespace regpow

#endif
