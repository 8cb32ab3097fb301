#pragma once

// Dense univariate polynomials over Q carrying a variable label.

#include "quadorbit/arith.hpp"
#include "quadorbit/zpoly.hpp"

#include <string>
#include <utility>
#include <vector>

namespace quadorbit {

class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::string var) : var_(std::move(var)) {}
    UniPoly(std::vector<Rat> coeffs, std::string var = "x");
    /// Constant polynomial.
    static UniPoly constant(const Rat& c, std::string var = "x");
    /// The polynomial `var` itself.
    static UniPoly variable(std::string var = "x");
    static UniPoly from_zpoly(const ZPoly& p, std::string var = "x");

    /// Parses e.g. "4*x^4 - 5*x^2 - 9" or "x^2 - 13/16". At most one variable
    /// name may occur. Throws std::invalid_argument.
    static UniPoly parse(const std::string& text, const std::string& var = "");

    const std::string& var() const { return var_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const Rat& lc() const;
    Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
    const std::vector<Rat>& coeffs() const { return c_; }

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const UniPoly& o);
    UniPoly& operator*=(const Rat& k);

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { a += b; return a; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { a -= b; return a; }
    friend UniPoly operator*(UniPoly a, const UniPoly& b) { a *= b; return a; }
    friend UniPoly operator*(UniPoly a, const Rat& k) { a *= k; return a; }
    friend UniPoly operator*(const Rat& k, UniPoly a) { a *= k; return a; }
    UniPoly operator-() const;

    /// Structural equality; variable labels are ignored for constants.
    friend bool operator==(const UniPoly& a, const UniPoly& b);

    Rat eval(const Rat& x) const;
    UniPoly derivative() const;
    /// Same coefficients under a different variable label.
    UniPoly relabeled(std::string var) const;
    UniPoly monic() const;

    std::string str() const;

private:
    void trim();
    std::vector<Rat> c_;
    std::string var_ = "x";
};

UniPoly pow(const UniPoly& p, unsigned e);

/// outer(inner(x)).
UniPoly compose(const UniPoly& outer, const UniPoly& inner);

/// Quotient and remainder in Q[x]. Throws on division by zero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& p, const UniPoly& d);

/// q with q * d == p; throws std::domain_error naming the remainder otherwise.
UniPoly exact_divide(const UniPoly& p, const UniPoly& d);

struct ContentPrimitive {
    Rat content;
    ZPoly primitive;  // coprime integer coefficients, positive leading coefficient
};
/// p == content * primitive. Throws std::domain_error for the zero polynomial.
ContentPrimitive content_primitive(const UniPoly& p);

/// Monic gcd over Q (zero if both are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// p / gcd(p, p'), made monic.
UniPoly squarefree_part(const UniPoly& p);

}  // namespace quadorbit
