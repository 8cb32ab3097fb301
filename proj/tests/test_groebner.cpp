#include "doctest.h"

#include "quadorbit/groebner.hpp"

#include <string>
#include <vector>

using namespace quadorbit;

namespace {

std::vector<MPoly> polys(const std::vector<std::string>& texts, const std::vector<std::string>& vars) {
    std::vector<MPoly> out;
    for (const auto& t : texts) out.push_back(MPoly::parse(t, vars));
    return out;
}

// Reduced lex bases computed independently with sympy's groebner(); sympy does
// not normalize leading coefficients, so both sides are made monic.
struct Oracle {
    std::vector<std::string> vars, gens, basis;
};

const std::vector<Oracle> kOracles = {
    {{"x", "y"}, {"x^2 + y^2 - 1", "x - y"}, {"x - y", "2*y^2 - 1"}},
    {{"x", "y"}, {"x^2*y - 1", "x*y^2 - x"}, {"x^2 - y", "y^2 - 1"}},
    {{"x", "y"}, {"x^3 - 2*x*y", "x^2*y + x - 2*y^2"}, {"x - 2*y^2", "y^3"}},
    {{"x", "y", "z"}, {"x*y - z", "-x + y*z", "x*z - y"}, {"x - y*z", "y^2 - z^2", "y*z^2 - y", "z^3 - z"}},
    {{"x", "y"}, {"-x^3 + 2*x^2 + y^2 - 1", "x*y - 1"}, {"x - y^4 + y^2 - 2", "y^5 - y^3 + 2*y - 1"}},
};

}  // namespace

TEST_CASE("reduced lex bases match an independent computation") {
    for (const auto& o : kOracles) {
        CAPTURE(o.gens[0]);
        GroebnerResult r = buchberger(polys(o.gens, o.vars));
        REQUIRE(r.completed);
        auto want = polys(o.basis, o.vars);
        for (auto& w : want) w = w.monic();
        REQUIRE(r.basis.generators.size() == want.size());
        for (std::size_t i = 0; i < want.size(); ++i) CHECK(r.basis.generators[i] == want[i]);
        CHECK(is_groebner_basis(r.basis.generators));
    }
}

TEST_CASE("normal forms and ideal membership") {
    std::vector<std::string> v = {"x", "y"};
    auto gens = polys({"x^2 + y^2 - 1", "x - y"}, v);
    MPoly in = MPoly::parse("(x^2 + y^2 - 1)*(x^3 - y) + (x - y)*(y^5 + 3)", v);
    CHECK(ideal_membership(in, gens));
    CHECK_FALSE(ideal_membership(MPoly::parse("x + 1", v), gens));
    GroebnerResult r = buchberger(gens);
    CHECK(normal_form(in, r.basis).is_zero());
    // Remainder is canonical: x^2 reduces to 1/2 whatever the route.
    CHECK(normal_form(MPoly::parse("x^2", v), r.basis) == MPoly::parse("1/2", v));
    CHECK(normal_form(MPoly::parse("x*y", v), r.basis) == MPoly::parse("1/2", v));
}

TEST_CASE("s-polynomials cancel leading terms") {
    std::vector<std::string> v = {"x", "y"};
    MPoly f = MPoly::parse("x^2*y - 1", v), g = MPoly::parse("x*y^2 - x", v);
    MPoly s = s_polynomial(f, g);
    CHECK(s == MPoly::parse("x^2 - y", v));
}

TEST_CASE("budget exhaustion is reported, not thrown") {
    std::vector<std::string> v = {"x", "y", "z"};
    auto gens = polys({"x^3*y - z^2 + 7*x", "y^3*z - x^2 + 5", "z^3*x - y^2 + 3*z"}, v);
    GroebnerBudget tiny{2, 1u << 20, 3600};
    GroebnerResult r = buchberger(gens, tiny);
    CHECK_FALSE(r.completed);
    CHECK_FALSE(r.note.empty());
    CHECK_THROWS_AS(ideal_membership(MPoly::parse("x", v), gens, tiny), BudgetExhausted);
}

TEST_CASE("bivariate conversion round-trips") {
    BiPoly b = BiPoly::parse("y^3*z - 2*y*z^2 + 5/3", "y", "z");
    CHECK(MPoly::from_bipoly(b).to_bipoly() == b);
}
