#include "doctest.h"

#include "quadorbit/elliptic.hpp"

#include <set>

using namespace quadorbit;

namespace {
Rat q(const char* s) { return Rat::parse(s); }
ECPoint pt(const char* x, const char* y) { return ECPoint::affine(q(x), q(y)); }
}  // namespace

TEST_CASE("group law on the reference curve") {
    Curve e = reference_curve();
    ECPoint g = pt("0", "1");
    REQUIRE(on_curve(e, g));
    CHECK(ec_order(e, g) == 6);
    CHECK(ec_mul(e, 2, g) == pt("2", "-1"));
    CHECK(ec_mul(e, 3, g) == pt("1", "0"));
    CHECK(ec_mul(e, 6, g).infinity);
    CHECK(ec_add(e, g, ec_neg(e, g)).infinity);
    CHECK(ec_order(e, pt("1", "0")) == 2);
    CHECK_THROWS_AS(ec_add(e, g, pt("5", "5")), std::invalid_argument);
}

TEST_CASE("torsion subgroup is closed") {
    Curve e = reference_curve();
    std::vector<ECPoint> t = {ECPoint::at_infinity(), pt("1", "0"), pt("0", "1"),
                              pt("0", "-1"), pt("2", "1"), pt("2", "-1")};
    std::set<ECPoint> s(t.begin(), t.end());
    for (const auto& a : t)
        for (const auto& b : t) {
            CHECK(s.count(ec_add(e, a, b)) == 1);
            CHECK(ec_add(e, a, b) == ec_add(e, b, a));
            for (const auto& c : t) CHECK(ec_add(e, ec_add(e, a, b), c) == ec_add(e, a, ec_add(e, b, c)));
        }
}

TEST_CASE("Lutz-Nagell candidates") {
    Curve e = reference_curve();
    std::vector<ECPoint> want = {pt("0", "-1"), pt("0", "1"), pt("1", "0"), pt("2", "-1"), pt("2", "1")};
    CHECK(lutz_nagell_candidates(e) == want);
    // y^2 = x^3 + 1 has torsion of order 6: (-1,0), (0,+-1), (2,+-3).
    Curve e6(Rat(0), Rat(0), Rat(1));
    CHECK(lutz_nagell_candidates(e6).size() == 5);
    CHECK(ec_order(e6, pt("2", "3")) == 6);
    CHECK_THROWS_AS(Curve(Rat(0), Rat(0), Rat(0)), std::invalid_argument);
}

TEST_CASE("curve map and its fibres") {
    CHECK(verify_curve_map());
    CHECK(preimage_check());
    CurvePointsReport r = curve_rational_points();
    std::vector<std::pair<Rat, Rat>> want = {
        {q("-1"), q("-1")}, {q("-1"), q("1")}, {q("0"), q("0")}, {q("1"), q("-1")}, {q("1"), q("1")}};
    CHECK(r.points == want);
    CHECK(r.torsion.size() == 6);
    CHECK_FALSE(r.certificates.empty());
}
