#pragma once

// Recursive-descent parser for polynomial expressions shared by UniPoly and
// BiPoly. Grammar:
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*      division only by constants
//                                             unless a divider is supplied
//   unary  := ('-' | '+') unary | power
//   power  := atom ('^' integer)?
//   atom   := integer | identifier | '(' expr ')'
//
// Poly must provide: constant(Rat), variable(name), +, -, *, scaling by Rat,
// is_constant(), constant_value(), and pow(Poly, unsigned).

#include "quadorbit/arith.hpp"

#include <cctype>
#include <functional>
#include <stdexcept>
#include <string>

namespace quadorbit::detail {

template <class Poly>
class ExprParser {
public:
    using VarFactory = std::function<Poly(const std::string&)>;
    using ConstFactory = std::function<Poly(const Rat&)>;
    using ConstProbe = std::function<bool(const Poly&, Rat&)>;
    using Divider = std::function<Poly(const Poly&, const Poly&)>;

    ExprParser(std::string text, VarFactory var, ConstFactory cst, ConstProbe probe, Divider div = {})
        : s_(std::move(text)),
          var_(std::move(var)),
          cst_(std::move(cst)),
          probe_(std::move(probe)),
          div_(std::move(div)) {}

    Poly parse() {
        Poly p = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " + why +
                                    " in '" + s_ + "'");
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char ch) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == ch) {
            ++pos_;
            return true;
        }
        return false;
    }

    Poly expr() {
        Poly acc = term();
        for (;;) {
            if (accept('+')) {
                acc = acc + term();
            } else if (accept('-')) {
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    Poly term() {
        Poly acc = unary();
        for (;;) {
            if (accept('*')) {
                acc = acc * unary();
            } else if (accept('/')) {
                Poly d = unary();
                if (div_) {
                    acc = div_(acc, d);
                    continue;
                }
                Rat k;
                if (!probe_(d, k)) fail("division by a non-constant");
                if (k.is_zero()) fail("division by zero");
                acc = acc * cst_(Rat(1) / k);
            } else {
                return acc;
            }
        }
    }

    Poly unary() {
        if (accept('-')) return cst_(Rat(-1)) * unary();
        if (accept('+')) return unary();
        return power();
    }

    Poly power() {
        Poly base = atom();
        if (accept('^')) {
            skip_ws();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            unsigned long e = std::stoul(s_.substr(start, pos_ - start));
            if (e > 100000) fail("exponent too large");
            return pow(base, static_cast<unsigned>(e));
        }
        return base;
    }

    Poly atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char ch = s_[pos_];
        if (ch == '(') {
            ++pos_;
            Poly p = expr();
            if (!accept(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return cst_(Rat(Int(s_.substr(start, pos_ - start), 10)));
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            return var_(s_.substr(start, pos_ - start));
        }
        fail(std::string("unexpected character '") + ch + "'");
    }

    std::string s_;
    std::size_t pos_ = 0;
    VarFactory var_;
    ConstFactory cst_;
    ConstProbe probe_;
    Divider div_;
};

}  // namespace quadorbit::detail
