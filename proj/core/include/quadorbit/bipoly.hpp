#pragma once

// Sparse bivariate polynomials over Q, plus the recursive integer form
// Z[v2][v1] used by elimination (subresultant resultants and gcds).
//
// Terms are keyed by (exponent of v1, exponent of v2); std::map's ordering of
// the key is lex with v1 > v2, which the Groebner code relies on.

#include "quadorbit/arith.hpp"
#include "quadorbit/unipoly.hpp"
#include "quadorbit/zpoly.hpp"

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace quadorbit {

using Exponent = std::pair<int, int>;

class BiPoly {
public:
    BiPoly() = default;
    BiPoly(std::string v1, std::string v2) : v1_(std::move(v1)), v2_(std::move(v2)) {}

    static BiPoly constant(const Rat& c, std::string v1, std::string v2);
    /// v1 when which == 0, v2 when which == 1.
    static BiPoly variable(int which, std::string v1, std::string v2);
    static BiPoly monomial(const Rat& c, int e1, int e2, std::string v1, std::string v2);
    /// Embeds a univariate polynomial in v1 (which == 0) or v2 (which == 1).
    static BiPoly from_uni(const UniPoly& p, int which, std::string v1, std::string v2);

    /// Parses with the given variable names, e.g. parse("y^2 - z^2 + 4", "y", "z").
    static BiPoly parse(const std::string& text, const std::string& v1, const std::string& v2);

    const std::string& var1() const { return v1_; }
    const std::string& var2() const { return v2_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    const std::map<Exponent, Rat>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    Rat coeff(int e1, int e2) const;
    void add_term(const Rat& c, int e1, int e2);

    int degree_v1() const;  // -1 for zero
    int degree_v2() const;
    int total_degree() const;

    /// Leading term under lex v1 > v2.
    std::pair<Exponent, Rat> leading_term() const;

    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    BiPoly& operator*=(const Rat& k);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { a += b; return a; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { a -= b; return a; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(BiPoly a, const Rat& k) { a *= k; return a; }
    friend BiPoly operator*(const Rat& k, BiPoly a) { a *= k; return a; }
    BiPoly operator-() const;
    friend bool operator==(const BiPoly& a, const BiPoly& b);

    Rat eval(const Rat& a, const Rat& b) const;
    /// Substitutes v2 := b, leaving a polynomial in v1.
    UniPoly specialize_v2(const Rat& b) const;
    /// Substitutes v1 := a, leaving a polynomial in v2.
    UniPoly specialize_v1(const Rat& a) const;
    /// Coefficient of v1^k as a polynomial in v2.
    UniPoly coeff_v1(int k) const;
    /// Coefficient of v2^k as a polynomial in v1.
    UniPoly coeff_v2(int k) const;

    /// Multiplies by the monic-making scalar (leading coefficient becomes 1).
    BiPoly monic() const;

    std::string str() const;
    /// (e1, e2, "p/q") triples in descending lex order.
    std::vector<std::tuple<int, int, std::string>> dump_terms() const;

private:
    std::map<Exponent, Rat> terms_;
    std::string v1_ = "y";
    std::string v2_ = "z";
};

BiPoly pow(const BiPoly& p, unsigned e);

/// Exact quotient p / d in Q[v1, v2]; throws std::domain_error carrying the
/// remainder when d does not divide p.
BiPoly exact_divide(const BiPoly& p, const BiPoly& d);

struct BiContentPrimitive {
    Rat content;
    BiPoly primitive;  // integer coefficients with gcd 1, positive leading coefficient
};
BiContentPrimitive content_primitive(const BiPoly& p);

// ---- recursive integer form --------------------------------------------

/// Element of Z[v2][v1]: index k holds the coefficient of v1^k.
using RecPoly = std::vector<ZPoly>;

/// Requires integer coefficients (use content_primitive first).
RecPoly to_recursive(const BiPoly& p);
BiPoly from_recursive(const RecPoly& p, const std::string& v1, const std::string& v2);

/// Res_{v1}(p, q) as a polynomial in v2, by the subresultant PRS on the
/// integer primitive parts; equals the Sylvester determinant of p and q (rows
/// of p first). Throws std::domain_error if either input has degree 0 in v1.
UniPoly resultant_y(const BiPoly& p, const BiPoly& q);

/// Integer-coefficient resultant of recursive forms (same convention).
ZPoly resultant_recursive(const RecPoly& p, const RecPoly& q);

/// gcd in Q[v1, v2], normalized to integer coefficients with positive leading
/// coefficient. Constant result means coprime.
BiPoly gcd(const BiPoly& a, const BiPoly& b);

/// Sylvester matrix determinant computed by fraction-free elimination over
/// Q[v2] evaluated pointwise; exposed for cross-checking the PRS route on
/// small inputs. Evaluates Res_{v1}(p, q) at v2 = b.
Rat sylvester_resultant_at(const BiPoly& p, const BiPoly& q, const Rat& b);

/// Sylvester determinant of two univariate polynomials over Q (Bareiss).
Rat sylvester_resultant(const UniPoly& p, const UniPoly& q);

}  // namespace quadorbit
