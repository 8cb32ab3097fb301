#pragma once

// Rational points of plane algebraic sets V(G_1, ..., G_k) in (v1, v2),
// eliminating v1 by resultants. Each generator is supplied as a list of
// factors; V(G) is the union of the factor curves, so the set splits into
// pairwise intersections that stay small.
//
// The output separates one-dimensional common components (curves on which
// every generator vanishes) from the zero-dimensional remainder, whose
// v2-coordinates are roots of resultants of the cofactors.

#include "quadorbit/bipoly.hpp"
#include "quadorbit/roots.hpp"

#include <string>
#include <vector>

namespace quadorbit {

struct FactoredPoly {
    std::vector<BiPoly> factors;
    BiPoly expand() const;
};

/// Zero-dimensional intersection V(a, b) with gcd(a, b) = 1, to be filtered
/// by the generators from index `next` on.
struct ZeroDimPiece {
    BiPoly a, b;
    std::size_t next = 0;
    /// Res_{v1}(a, b), or the v2-only polynomial when one side has v1-degree 0.
    UniPoly eliminant;
    RootReport roots;
};

struct PlaneCandidate {
    Rat v2;
    /// Common v1-roots at v2 not lying on any common component (monic, may
    /// be constant when no such root exists).
    UniPoly residual;
    /// Rational roots of the residual.
    std::vector<Rat> v1_values;
};

struct PlaneSolution {
    /// Pairwise coprime primitive common components.
    std::vector<BiPoly> components;
    std::vector<ZeroDimPiece> pieces;
    /// Rational roots of all eliminants, before back-substitution.
    std::vector<Rat> eliminant_roots;
    /// v2 values carrying at least one common root off the components.
    std::vector<PlaneCandidate> candidates;
    /// Eliminant roots whose common roots all lie on components (or are absent).
    std::vector<Rat> attached;
    /// Sum of eliminant degrees.
    int eliminant_degree = 0;

    std::vector<Rat> candidate_values() const;
};

/// Factorwise split: every factor of the first generator is intersected with
/// every factor of the next, recursively. Candidates exclude common roots on
/// the common components.
PlaneSolution solve_plane_system(const std::vector<FactoredPoly>& generators);

/// Cofactor split: g = gcd of the expanded generators is the common part, and
/// the residual set V(G_1/g, ..., G_k/g) is eliminated. Candidates are the
/// v2-values where all cofactors share a root, whether or not that root also
/// lies on a component (these are the embedded points a lex Groebner basis
/// also sees). Every factorwise candidate is a cofactor candidate.
PlaneSolution solve_plane_cofactors(const std::vector<FactoredPoly>& generators);

/// Refines a list of polynomials into a pairwise coprime list of primitive
/// factors whose product has the same zero set.
std::vector<BiPoly> coprime_refine(std::vector<BiPoly> polys);

}  // namespace quadorbit
