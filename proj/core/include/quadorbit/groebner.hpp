#pragma once

// Groebner bases over Q for ideals in up to four variables, lex order with
// the first listed variable highest. Buchberger's algorithm with the coprime
// and chain criteria, normal pair selection, integer-primitive intermediate
// polynomials, and an explicit resource budget.

#include "quadorbit/arith.hpp"
#include "quadorbit/bipoly.hpp"

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace quadorbit {

/// Exponent vector of up to four variables packed 16 bits each, the first
/// variable in the most significant field, so that lex order is integer order.
class Monomial {
public:
    static constexpr std::size_t kMaxVars = 4;
    static constexpr unsigned kMaxExponent = 0xFFFF;

    Monomial() = default;
    explicit Monomial(const std::vector<int>& exps);
    static Monomial from_packed(std::uint64_t bits) {
        Monomial m;
        m.bits_ = bits;
        return m;
    }

    int exponent(std::size_t var) const {
        return static_cast<int>((bits_ >> (16 * (kMaxVars - 1 - var))) & 0xFFFF);
    }
    int total_degree() const;
    std::uint64_t packed() const { return bits_; }
    bool divides(const Monomial& o) const;
    bool coprime(const Monomial& o) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    /// Requires b | a.
    friend Monomial operator/(const Monomial& a, const Monomial& b);
    friend Monomial lcm(const Monomial& a, const Monomial& b);
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
    std::uint64_t bits_ = 0;
};

/// Sparse polynomial over Q in named variables (terms sorted descending lex).
class MPoly {
public:
    using Term = std::pair<Monomial, Rat>;

    MPoly() = default;
    explicit MPoly(std::vector<std::string> vars);

    static MPoly constant(const Rat& c, std::vector<std::string> vars);
    static MPoly variable(std::size_t index, std::vector<std::string> vars);
    /// Parses e.g. "x*y - 1" in the given variables. Throws std::invalid_argument.
    static MPoly parse(const std::string& text, const std::vector<std::string>& vars);
    static MPoly from_bipoly(const BiPoly& p);
    /// Requires exactly two variables.
    BiPoly to_bipoly() const;

    const std::vector<std::string>& vars() const { return vars_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    const Monomial& leading_monomial() const;
    const Rat& leading_coefficient() const;
    int total_degree() const;
    /// True when only variable `var` occurs.
    bool only_in(std::size_t var) const;

    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly& operator*=(const Rat& k);
    friend MPoly operator+(MPoly a, const MPoly& b) { a += b; return a; }
    friend MPoly operator-(MPoly a, const MPoly& b) { a -= b; return a; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend MPoly operator*(MPoly a, const Rat& k) { a *= k; return a; }
    friend MPoly operator*(const Rat& k, MPoly a) { a *= k; return a; }
    MPoly operator-() const;
    friend bool operator==(const MPoly& a, const MPoly& b);

    MPoly mul_term(const Monomial& m, const Rat& c) const;
    MPoly monic() const;
    std::string str() const;

    /// Builds from unsorted terms (duplicates summed, zeros dropped).
    static MPoly from_terms(std::vector<Term> terms, std::vector<std::string> vars);

private:
    std::vector<std::string> vars_;
    std::vector<Term> terms_;
};

MPoly pow(const MPoly& p, unsigned e);

struct GroebnerBudget {
    std::size_t max_pairs = 100000;
    /// Ceiling on the bit size of any integer coefficient of a reduced
    /// intermediate polynomial.
    std::size_t max_bits = 1u << 20;
    double max_seconds = 3600;
};

struct IdealBasis {
    std::vector<MPoly> generators;
    bool is_groebner = false;
};

struct GroebnerResult {
    /// False when the budget ran out; the basis is then partial.
    bool completed = false;
    std::string note;
    IdealBasis basis;
    std::size_t pairs_processed = 0;
    std::size_t pairs_skipped = 0;
    std::size_t max_bits = 0;
    double seconds = 0;
};

class BudgetExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Full remainder of f on division by the basis (in list order).
MPoly normal_form(const MPoly& f, const std::vector<MPoly>& basis);
MPoly normal_form(const MPoly& f, const IdealBasis& basis);

/// lcm/lt(f) * f/lc(f) - lcm/lt(g) * g/lc(g).
MPoly s_polynomial(const MPoly& f, const MPoly& g);

/// Reduced, monic Groebner basis sorted by descending leading monomial.
GroebnerResult buchberger(const std::vector<MPoly>& gens, const GroebnerBudget& budget = {});

/// Throws BudgetExhausted when the basis computation does not complete.
bool ideal_membership(const MPoly& f, const std::vector<MPoly>& gens, const GroebnerBudget& budget = {});

/// Every S-polynomial of the basis reduces to zero.
bool is_groebner_basis(const std::vector<MPoly>& basis);

}  // namespace quadorbit
