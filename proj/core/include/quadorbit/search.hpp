#pragma once

// Exhaustive search for finite-orbit tuples over a finite grid of c values.
//
// A point with finite orbit under S has finite orbit under every subset of S,
// so the candidates for a k-set are the points common to the finite-orbit
// sets of its (k-1)-subsets, and a k-set can only have such points when every
// (k-1)-subset does. Singletons are handled by finite_orbit_points, which
// enumerates every admissible point. Nothing else is pruned.

#include "quadorbit/arith.hpp"

#include <string>
#include <vector>

namespace quadorbit {

struct SearchSpec {
    /// c = k/d for d in `denominators` and |k| <= numerator_bound (reduced,
    /// deduplicated).
    std::vector<Int> denominators{Int(16)};
    Int numerator_bound = 40;
    /// Extra c values added to the grid.
    std::vector<Rat> extra;
    /// Size of the sets reported.
    int set_size = 3;
    unsigned workers = 1;
    /// When false, every s-subset of the grid is enumerated directly with
    /// finite_orbit_points (slow; a cross-check of the pruned search).
    bool subset_pruning = true;

    /// Sorted distinct c values of the grid.
    std::vector<Rat> grid() const;
};

struct SearchHit {
    /// Sorted c values.
    std::vector<Rat> cs;
    /// Every point with finite orbit, sorted.
    std::vector<Rat> basepoints;
    friend bool operator==(const SearchHit&, const SearchHit&) = default;
};

struct SearchResult {
    std::vector<SearchHit> hits;
    /// Sets examined by BFS at the final level (after subset pruning).
    std::size_t sets_examined = 0;
    std::size_t grid_size = 0;
    double seconds = 0;
};

/// Throws std::invalid_argument for set_size outside 1..4, an empty grid or a
/// nonpositive denominator.
SearchResult search(const SearchSpec& spec);

/// Reads {"denominators": [...], "numerator_bound": n, "set_size": s,
/// "extra": ["p/q", ...], "workers": w}; missing keys keep their defaults.
/// Throws std::invalid_argument on malformed input.
SearchSpec parse_search_spec(const std::string& json_text);

/// One line per hit: "c1,c2,...: P1 P2 ...", sorted.
std::string format_hits(const std::vector<SearchHit>& hits);

}  // namespace quadorbit
