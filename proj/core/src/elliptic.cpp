#include "quadorbit/elliptic.hpp"

#include "quadorbit/roots.hpp"
#include "quadorbit/variety.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace quadorbit {

Curve::Curve(Rat a2_, Rat a4_, Rat a6_) : a2(std::move(a2_)), a4(std::move(a4_)), a6(std::move(a6_)) {
    if (discriminant().is_zero()) throw std::invalid_argument("singular curve " + str());
}

Rat Curve::rhs(const Rat& x) const { return ((x + a2) * x + a4) * x + a6; }

Rat Curve::discriminant() const {
    // x^3 + a x^2 + b x + c
    const Rat &a = a2, &b = a4, &c = a6;
    return a * a * b * b - Rat(4) * b * b * b - Rat(4) * a * a * a * c - Rat(27) * c * c + Rat(18) * a * b * c;
}

bool Curve::integral() const { return a2.is_integer() && a4.is_integer() && a6.is_integer(); }

std::string Curve::str() const {
    std::ostringstream os;
    os << "y^2 = x^3";
    auto term = [&](const Rat& k, const char* mono) {
        if (k.is_zero()) return;
        os << (k.sign() < 0 ? " - " : " + ");
        Rat a = abs(k);
        if (!*mono) {
            os << a;
            return;
        }
        if (a != Rat(1)) os << a << "*";
        os << mono;
    };
    term(a2, "x^2");
    term(a4, "x");
    term(a6, "");
    return os.str();
}

std::string ECPoint::str() const {
    if (infinity) return "inf";
    return "(" + x.str() + ", " + y.str() + ")";
}

bool operator<(const ECPoint& a, const ECPoint& b) {
    if (a.infinity != b.infinity) return a.infinity;
    if (a.infinity) return false;
    return std::tie(a.x, a.y) < std::tie(b.x, b.y);
}

bool on_curve(const Curve& e, const ECPoint& p) { return p.infinity || p.y * p.y == e.rhs(p.x); }

namespace {

void require_on(const Curve& e, const ECPoint& p) {
    if (!on_curve(e, p)) throw std::invalid_argument("point " + p.str() + " is not on " + e.str());
}

}  // namespace

ECPoint ec_neg(const Curve& e, const ECPoint& p) {
    require_on(e, p);
    if (p.infinity) return p;
    return ECPoint::affine(p.x, -p.y);
}

ECPoint ec_add(const Curve& e, const ECPoint& p, const ECPoint& q) {
    require_on(e, p);
    require_on(e, q);
    if (p.infinity) return q;
    if (q.infinity) return p;
    Rat lambda;
    if (p.x == q.x) {
        if (p.y != q.y || p.y.is_zero()) return ECPoint::at_infinity();
        lambda = (Rat(3) * p.x * p.x + Rat(2) * e.a2 * p.x + e.a4) / (Rat(2) * p.y);
    } else {
        lambda = (q.y - p.y) / (q.x - p.x);
    }
    Rat x3 = lambda * lambda - e.a2 - p.x - q.x;
    Rat y3 = lambda * (p.x - x3) - p.y;
    return ECPoint::affine(x3, y3);
}

ECPoint ec_mul(const Curve& e, long n, const ECPoint& p) {
    if (n < 0) throw std::invalid_argument("negative multiplier");
    ECPoint acc = ECPoint::at_infinity(), base = p;
    require_on(e, p);
    while (n) {
        if (n & 1) acc = ec_add(e, acc, base);
        n >>= 1;
        if (n) base = ec_add(e, base, base);
    }
    return acc;
}

std::optional<int> ec_order(const Curve& e, const ECPoint& p) {
    require_on(e, p);
    ECPoint q = p;
    for (int n = 1; n <= 12; ++n) {
        if (q.infinity) return n;
        q = ec_add(e, q, p);
    }
    return std::nullopt;
}

std::vector<ECPoint> lutz_nagell_candidates(const Curve& e) {
    if (!e.integral()) throw std::invalid_argument("Lutz-Nagell enumeration needs integral coefficients");
    Int d = abs(e.discriminant()).num();
    std::vector<Int> ys{Int(0)};
    for (Int y = 1; y * y <= d; ++y)
        if (d % (y * y) == 0) {
            ys.push_back(y);
            ys.push_back(-y);
        }
    std::set<ECPoint> out;
    for (const Int& y : ys) {
        Rat y2 = Rat(y) * Rat(y);
        UniPoly cubic(std::vector<Rat>{e.a6 - y2, e.a4, e.a2, Rat(1)}, "x");
        for (const Rat& x : rational_roots(cubic).values()) {
            if (!x.is_integer()) continue;
            ECPoint p = ECPoint::affine(x, Rat(y));
            if (ec_order(e, p)) out.insert(p);
        }
    }
    return {out.begin(), out.end()};
}

Curve reference_curve() { return Curve(Rat(-2), Rat(0), Rat(1)); }

CurveMap reference_curve_map() {
    auto p = [](const char* s) { return BiPoly::parse(s, "t", "u"); };
    return {p("t^2*u^2 + t*u^2 - t - u^2"), p("1 - t*u^2"), p("u^2"), p("t*u^2 + u^2 - 1"), p("u^3")};
}

bool verify_curve_map(const Curve& e, const CurveMap& r) {
    const BiPoly &xn = r.x_num, &xd = r.x_den;
    BiPoly xd2 = xd * xd, xd3 = xd2 * xd;
    BiPoly cubic = xn * xn * xn + xn * xn * xd * e.a2 + xn * xd2 * e.a4 + xd3 * e.a6;
    BiPoly n = r.y_num * r.y_num * xd3 - r.y_den * r.y_den * cubic;
    if (n.is_zero()) return true;
    try {
        exact_divide(n, r.curve);
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

bool verify_curve_map() { return verify_curve_map(reference_curve(), reference_curve_map()); }

PreimageReport preimages(const CurveMap& r, const ECPoint& target) {
    PreimageReport rep;
    rep.target = target;
    if (target.infinity) {
        rep.note = "the affine map has no value at infinity; points with u = 0 are reported separately";
        return rep;
    }
    BiPoly gx = r.x_num - r.x_den * target.x;
    BiPoly gy = r.y_num - r.y_den * target.y;
    PlaneSolution sol = solve_plane_cofactors({FactoredPoly{{r.curve}}, FactoredPoly{{gx}}, FactoredPoly{{gy}}});
    rep.eliminant_degree = sol.eliminant_degree;
    rep.eliminant_roots = sol.eliminant_roots;
    if (!sol.components.empty()) rep.note = "the fibre contains a whole curve";
    std::set<std::pair<Rat, Rat>> pts;
    for (const auto& c : sol.candidates)
        for (const Rat& t : c.v1_values) {
            const Rat& u = c.v2;
            if (u.is_zero()) continue;
            Rat xd = r.x_den.eval(t, u), yd = r.y_den.eval(t, u);
            if (xd.is_zero() || yd.is_zero()) continue;
            // Re-check by substitution.
            if (!r.curve.eval(t, u).is_zero()) continue;
            if (r.x_num.eval(t, u) / xd != target.x || r.y_num.eval(t, u) / yd != target.y) continue;
            pts.insert({t, u});
        }
    rep.points.assign(pts.begin(), pts.end());
    return rep;
}

bool preimage_check() {
    return preimages(reference_curve_map(), ECPoint::affine(Rat(1), Rat(0))).points.empty();
}

CurvePointsReport curve_rational_points() {
    CurvePointsReport rep;
    Curve e = reference_curve();
    CurveMap r = reference_curve_map();
    rep.certificates = {
        "E(Q) has rank zero (external certificate; descent is not reimplemented)",
        "torsion points have order at most 12 (Mazur's theorem, external certificate)",
    };
    rep.torsion = lutz_nagell_candidates(e);
    rep.torsion.insert(rep.torsion.begin(), ECPoint::at_infinity());
    std::set<std::pair<Rat, Rat>> all;
    for (const Rat& t : rational_roots(r.curve.specialize_v2(Rat(0))).values()) {
        rep.boundary.emplace_back(t, Rat(0));
        all.insert({t, Rat(0)});
    }
    for (const auto& p : rep.torsion) {
        if (p.infinity) continue;
        rep.fibres.push_back(preimages(r, p));
        for (const auto& pt : rep.fibres.back().points) all.insert(pt);
    }
    rep.points.assign(all.begin(), all.end());
    return rep;
}

}  // namespace quadorbit
