#pragma once

// Affine Weierstrass curves y^2 = x^3 + a2 x^2 + a4 x + a6 over Q: group law,
// point orders up to 12, integral torsion enumeration, and the checks on the
// genus-one curve C: t^2 u^2 + t u^2 - t - u^2 = 0 and its map to
// E: y^2 = x^3 - 2x^2 + 1.

#include "quadorbit/arith.hpp"
#include "quadorbit/bipoly.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace quadorbit {

struct Curve {
    Rat a2, a4, a6;

    /// Throws std::invalid_argument when the cubic has a repeated root.
    Curve(Rat a2, Rat a4, Rat a6);

    Rat rhs(const Rat& x) const;
    /// Discriminant of the cubic x^3 + a2 x^2 + a4 x + a6.
    Rat discriminant() const;
    bool integral() const;
    std::string str() const;
};

struct ECPoint {
    bool infinity = true;
    Rat x, y;

    static ECPoint at_infinity() { return {}; }
    static ECPoint affine(Rat x, Rat y) { return {false, std::move(x), std::move(y)}; }
    std::string str() const;

    friend bool operator==(const ECPoint& a, const ECPoint& b) {
        return a.infinity == b.infinity && (a.infinity || (a.x == b.x && a.y == b.y));
    }
    /// Infinity first, then by (x, y).
    friend bool operator<(const ECPoint& a, const ECPoint& b);
};

bool on_curve(const Curve& e, const ECPoint& p);

/// Chord-tangent sum. Throws std::invalid_argument for points off the curve.
ECPoint ec_add(const Curve& e, const ECPoint& p, const ECPoint& q);
ECPoint ec_neg(const Curve& e, const ECPoint& p);
/// n * p for n >= 0.
ECPoint ec_mul(const Curve& e, long n, const ECPoint& p);

/// Least n <= 12 with nP = infinity; nullopt means the order exceeds 12 (by
/// Mazur's bound, infinite). Throws std::invalid_argument off the curve.
std::optional<int> ec_order(const Curve& e, const ECPoint& p);

/// Integral affine points with y = 0 or y^2 | disc, kept when of finite
/// order. Sorted. Throws std::invalid_argument for non-integral curves.
std::vector<ECPoint> lutz_nagell_candidates(const Curve& e);

/// Rational map (t, u) -> (x_num/x_den, y_num/y_den) from a plane curve.
struct CurveMap {
    BiPoly curve;
    BiPoly x_num, x_den, y_num, y_den;
};

/// E: y^2 = x^3 - 2x^2 + 1.
Curve reference_curve();
/// C: t^2 u^2 + t u^2 - t - u^2 and r(t, u) = ((1 - t u^2)/u^2, (t u^2 + u^2 - 1)/u^3).
CurveMap reference_curve_map();

/// The numerator of y^2 - (x^3 + a2 x^2 + a4 x + a6) under the map is
/// divisible by the defining polynomial of the source curve.
bool verify_curve_map(const Curve& e, const CurveMap& r);
bool verify_curve_map();

struct PreimageReport {
    ECPoint target;
    /// Rational points p of the source curve with r(p) = target (u != 0).
    std::vector<std::pair<Rat, Rat>> points;
    /// Degree of the eliminant in u and its rational roots.
    int eliminant_degree = 0;
    std::vector<Rat> eliminant_roots;
    std::string note;
};

PreimageReport preimages(const CurveMap& r, const ECPoint& target);
/// True when (1, 0) has no preimage under the reference map.
bool preimage_check();

struct CurvePointsReport {
    /// Points with u = 0, where the map is undefined.
    std::vector<std::pair<Rat, Rat>> boundary;
    std::vector<PreimageReport> fibres;
    /// All rational points found, sorted.
    std::vector<std::pair<Rat, Rat>> points;
    std::vector<ECPoint> torsion;
    /// External facts the enumeration rests on.
    std::vector<std::string> certificates;
};

/// C(Q) = boundary points together with the preimages of the torsion points
/// of E, given that E(Q) has rank zero.
CurvePointsReport curve_rational_points();

}  // namespace quadorbit
