#pragma once

// Complete rational-root extraction for univariate polynomials with large
// integer coefficients: roots modulo a small prime, quadratic Hensel lifting
// past the Cauchy bound, exact verification of every candidate.

#include "quadorbit/arith.hpp"
#include "quadorbit/unipoly.hpp"
#include "quadorbit/zpoly.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace quadorbit {

struct RootReport {
    /// Distinct roots in increasing order with their multiplicities in p.
    std::vector<std::pair<Rat, int>> roots;
    /// "none" (constant input), "linear", "quadratic" or "hensel".
    std::string method = "none";
    /// Prime used for the modular search (0 when unused).
    std::uint64_t prime = 0;
    /// Lifting precision k, i.e. roots were known modulo prime^k.
    unsigned precision = 0;

    std::vector<Rat> values() const;
    bool contains(const Rat& r) const;
};

/// All integer roots of a nonzero integer polynomial.
RootReport integer_roots(const ZPoly& p);

/// All rational roots of a nonzero integer polynomial.
RootReport rational_roots(const ZPoly& p);
/// All rational roots of a nonzero polynomial over Q.
RootReport rational_roots(const UniPoly& p);

}  // namespace quadorbit
