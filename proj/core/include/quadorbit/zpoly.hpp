#pragma once

// Dense univariate polynomials over Z. This is the working representation for
// everything coefficient-heavy: pseudo-remainder sequences, root finding and
// the inner coefficient ring of bivariate elimination.

#include "quadorbit/arith.hpp"

#include <cstdint>
#include <vector>

namespace quadorbit {

class ZPoly {
public:
    ZPoly() = default;
    ZPoly(const Int& constant);  // NOLINT(google-explicit-constructor)
    ZPoly(long constant) : ZPoly(Int(constant)) {}  // NOLINT(google-explicit-constructor)
    explicit ZPoly(std::vector<Int> coeffs);

    static ZPoly monomial(const Int& coeff, std::size_t degree);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const Int& lc() const;
    const Int& operator[](std::size_t i) const { return c_[i]; }
    Int coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Int(0); }
    const std::vector<Int>& coeffs() const { return c_; }
    std::size_t size() const { return c_.size(); }

    ZPoly& operator+=(const ZPoly& o);
    ZPoly& operator-=(const ZPoly& o);
    ZPoly& operator*=(const ZPoly& o);
    ZPoly& operator*=(const Int& k);

    friend ZPoly operator+(ZPoly a, const ZPoly& b) { a += b; return a; }
    friend ZPoly operator-(ZPoly a, const ZPoly& b) { a -= b; return a; }
    friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
    friend ZPoly operator*(ZPoly a, const Int& k) { a *= k; return a; }
    ZPoly operator-() const;

    friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.c_ == b.c_; }

    /// Value at an integer point.
    Int eval(const Int& x) const;
    /// Homogenized value sum a_i u^i v^(n-i): zero iff u/v is a root (v != 0).
    Int eval_homogeneous(const Int& u, const Int& v) const;
    /// Exact value at a rational point.
    Rat eval(const Rat& x) const;

    ZPoly derivative() const;
    /// Multiplication by x^k.
    ZPoly shifted(std::size_t k) const;

    std::string str(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Int> c_;
};

ZPoly pow(const ZPoly& p, unsigned e);

/// Nonnegative gcd of the coefficients (0 for the zero polynomial).
Int content(const ZPoly& p);
/// p / content(p) with positive leading coefficient.
ZPoly primitive_part(const ZPoly& p);

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
ZPoly prem(const ZPoly& a, const ZPoly& b);

/// Exact quotient a / b in Z[x]. Throws std::domain_error (with the remainder
/// in the message) if b does not divide a.
ZPoly exact_div(const ZPoly& a, const ZPoly& b);
/// Exact quotient by an integer scalar. Throws if not exact.
ZPoly exact_div(const ZPoly& a, const Int& k);
/// True iff b divides a in Q[x].
bool divides(const ZPoly& b, const ZPoly& a);

/// Primitive gcd in Z[x] with positive leading coefficient.
ZPoly gcd(const ZPoly& a, const ZPoly& b);

/// Squarefree part of a primitive polynomial: p / gcd(p, p').
ZPoly squarefree_part(const ZPoly& p);

/// Cauchy bound 1 + max|a_i| / |a_n| rounded up to an integer.
Int cauchy_bound(const ZPoly& p);

// ---- arithmetic modulo a word-sized prime ------------------------------

using ModPoly = std::vector<std::uint64_t>;

ModPoly reduce_mod(const ZPoly& p, std::uint64_t prime);
/// Degree of gcd(a, b) over F_p (-1 if both zero).
int gcd_degree_mod(ModPoly a, ModPoly b, std::uint64_t prime);
std::uint64_t eval_mod(const ModPoly& p, std::uint64_t x, std::uint64_t prime);
ModPoly derivative_mod(const ModPoly& p, std::uint64_t prime);
bool is_prime(std::uint64_t n);

}  // namespace quadorbit
