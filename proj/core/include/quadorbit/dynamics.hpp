#pragma once

// Dynamics of x^2 + c over Q: preperiodicity decision, rational periodic
// points, the maximal exact period over a set of maps, and orbits under the
// monoid generated by a set of maps.
//
// Two admissibility guards make every question decidable. For f(x) = x^2 + c:
//
//  (G1) |x| > |c| + 1. Then |f(x)| >= x^2 - |c| > |x|, and the image again
//       satisfies the bound, so |f^n(x)| increases strictly forever.
//
//  (G2) den(x)^2 does not divide den(c). Write x = p/q, c = a/b in lowest
//       terms, so f(x) = (p^2 b + a q^2) / (b q^2). Some prime l has
//       2 v_l(q) > v_l(b) (so l does not divide p); then v_l(p^2 b) = v_l(b)
//       while v_l(a q^2) > v_l(b), so the numerator has valuation v_l(b) and
//       the reduced image has v_l(den) = 2 v_l(q). The guard holds again with
//       a doubled valuation, so denominators grow without bound.
//
// Points passing both guards lie in the finite set
// {x : |x| <= |c| + 1, den(x)^2 | den(c)}, so iteration either revisits a
// point or trips a guard.

#include "quadorbit/arith.hpp"
#include "quadorbit/unipoly.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace quadorbit {

struct QuadMap {
    Rat c;
    Rat operator()(const Rat& x) const { return x * x + c; }
    /// x^2 + c as a polynomial in `var`.
    UniPoly poly(const std::string& var = "x") const;
};

enum class Guard { EscapeBound, DenominatorGrowth };
std::string to_string(Guard g);

/// First guard violated by x with respect to x^2 + c, if any.
std::optional<Guard> guard_violation(const Rat& c, const Rat& x);

/// Nonempty ordered list of maps with pairwise distinct c.
class MapSet {
public:
    /// Throws std::invalid_argument on an empty list or repeated c.
    explicit MapSet(std::vector<Rat> cs);
    std::size_t size() const { return maps_.size(); }
    const QuadMap& operator[](std::size_t i) const { return maps_[i]; }
    std::vector<Rat> cs() const;
    std::string str() const;

private:
    std::vector<QuadMap> maps_;
};

struct PreperiodicityReport {
    bool preperiodic = false;
    /// Number of steps before entering the cycle (when preperiodic).
    int tail = 0;
    int cycle = 0;
    /// Cycle in iteration order starting at f^tail(x).
    std::vector<Rat> cycle_points;
    /// When not preperiodic: the first iterate that tripped a guard.
    std::optional<Guard> reason;
    Rat witness;
    int witness_step = 0;
};

PreperiodicityReport is_preperiodic(const QuadMap& f, const Rat& x);

/// Rational points of exact period n for n in {1, 2, 3}, sorted.
/// Throws std::invalid_argument for other n.
std::vector<Rat> periodic_points(const QuadMap& f, int n);

/// Dynatomic polynomial prod_{d | n} (f^d(x) - x)^mu(n/d).
UniPoly dynatomic(const QuadMap& f, int n);

/// Rational points of exact period n found from the rational roots of the
/// dynatomic polynomial (any n >= 1).
std::vector<Rat> periodic_points_dynatomic(const QuadMap& f, int n);

struct MuReport {
    /// Largest exact period in 1..max_period realised by a rational point
    /// of some map in the set; 0 if none.
    int mu = 0;
    int max_period = 6;
    /// (map index, period, point) for every rational periodic point found.
    struct Hit {
        std::size_t map;
        int period;
        Rat point;
    };
    std::vector<Hit> hits;
};

/// Largest exact rational period over the maps, checking periods 1..6.
MuReport mu_set(const MapSet& s);

using Word = std::vector<int>;  // map indices in application order
std::string word_str(const Word& w);

struct FiniteOrbit {
    /// Orbit points sorted increasingly.
    std::vector<Rat> points;
    /// Shortest, lexicographically least word reaching each point (same order).
    std::vector<Word> words;
};

struct InfiniteOrbit {
    Rat witness;
    std::size_t map_index = 0;
    Guard reason = Guard::EscapeBound;
    /// Word taking the basepoint to the witness.
    Word word;
};

struct OrbitResult {
    std::variant<FiniteOrbit, InfiniteOrbit> verdict;
    bool finite() const { return std::holds_alternative<FiniteOrbit>(verdict); }
    const FiniteOrbit& orbit() const { return std::get<FiniteOrbit>(verdict); }
    const InfiniteOrbit& infinite() const { return std::get<InfiniteOrbit>(verdict); }
};

/// Breadth-first closure of {p} under the maps, in list order. Every point is
/// checked against the guards of every map before being expanded.
OrbitResult monoid_orbit(const MapSet& s, const Rat& p);

/// True iff f(t) lies in t_set for every map f and every t in t_set.
bool is_stable_set(const MapSet& s, const std::vector<Rat>& t_set);

/// Applies the word (application order) to p.
Rat apply_word(const MapSet& s, const Word& w, const Rat& p);

/// Every x with a finite orbit under the set: the admissible points
/// {|x| <= min|c_i| + 1, den(x)^2 | gcd den(c_i)} whose orbit closes. Sorted.
std::vector<Rat> finite_orbit_points(const MapSet& s);

/// The factorization
///   f^4(x) - f^2(x) = (x^2 - x + c)(x^2 + x + c)(x^2 - x + c + 1)
///                     (x^2 + x + c + 1)((x^2 + c)^2 + x^2 + 2c)((x^2 + c)^2 - x^2 + 1)
/// for f = x^2 + c, over any commutative ring. The first two factors cut out
/// fixed points and their negatives, the next two the 2-cycles and their
/// negatives, the last two the preimages of those.
template <class R>
std::array<R, 6> preperiodic_relation_factors(const R& x, const R& c, const R& one) {
    R x2 = x * x;
    R q = x2 + c;
    R two_c = c + c;
    return {x2 - x + c, x2 + x + c, x2 - x + c + one, x2 + x + c + one, q * q + x2 + two_c, q * q - x2 + one};
}

}  // namespace quadorbit
