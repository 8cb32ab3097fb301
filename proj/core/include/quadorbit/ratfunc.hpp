#pragma once

// Rational functions in one variable over Q, kept reduced with a monic
// denominator so that equality is componentwise.

#include "quadorbit/arith.hpp"
#include "quadorbit/unipoly.hpp"

#include <string>

namespace quadorbit {

class RatFunc {
public:
    RatFunc() : num_("t"), den_(UniPoly::constant(Rat(1), "t")) {}
    /// Polynomial as a rational function.
    RatFunc(const UniPoly& num);  // NOLINT(google-explicit-constructor)
    /// num / den, reduced. Throws std::domain_error if den is zero.
    RatFunc(const UniPoly& num, const UniPoly& den);

    static RatFunc constant(const Rat& c, const std::string& var = "t");
    static RatFunc variable(const std::string& var = "t");

    /// Parses expressions such as "(t^2 + 4*t - 1) / (2*t^2 - 2)"; division
    /// by non-constant subexpressions is allowed. Throws std::invalid_argument
    /// (syntax) or std::domain_error (division by zero).
    static RatFunc parse(const std::string& text, const std::string& var = "t");

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    const std::string& var() const { return num_.is_constant() ? den_.var() : num_.var(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    /// max(deg num, deg den).
    int degree() const;

    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    /// Throws std::domain_error when o is zero.
    RatFunc& operator/=(const RatFunc& o);
    friend RatFunc operator+(RatFunc a, const RatFunc& b) { a += b; return a; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { a -= b; return a; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { a *= b; return a; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { a /= b; return a; }
    RatFunc operator-() const;
    friend bool operator==(const RatFunc& a, const RatFunc& b);

    /// Value at t0. Throws std::domain_error at a pole.
    Rat specialize(const Rat& t0) const;

    /// "num" when the denominator is 1, otherwise "(num) / (den)".
    std::string str() const;

private:
    void reduce();
    UniPoly num_, den_;
};

RatFunc pow(const RatFunc& f, unsigned e);

/// x^2 + c.
RatFunc apply_quadmap(const RatFunc& c, const RatFunc& x);

/// Substitution f(g(t)).
RatFunc compose(const RatFunc& f, const RatFunc& g);

}  // namespace quadorbit
