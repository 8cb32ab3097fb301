#include "doctest.h"

#include "quadorbit/bipoly.hpp"

#include <random>
#include <stdexcept>

using namespace quadorbit;

namespace {

BiPoly random_bipoly(std::mt19937& rng, int dy, int dz) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
    BiPoly p("y", "z");
    for (int i = 0; i <= dy; ++i)
        for (int j = 0; j <= dz; ++j)
            if (rng() % 3 != 0) p.add_term(Rat::normalize(num(rng), den(rng)), i, j);
    p.add_term(Rat(1), dy, 0);
    return p;
}

}  // namespace

TEST_CASE("parse, print and term dump") {
    BiPoly p = BiPoly::parse("y^2 - z^2 + 4", "y", "z");
    CHECK(p.str() == "y^2 - z^2 + 4");
    CHECK(BiPoly::parse(p.str(), "y", "z") == p);
    auto terms = p.dump_terms();
    REQUIRE(terms.size() == 3);
    CHECK(std::get<0>(terms[0]) == 2);
    CHECK(std::get<2>(terms[1]) == "-1");
    CHECK_THROWS_AS(BiPoly::parse("y + w", "y", "z"), std::invalid_argument);
}

TEST_CASE("resultant eliminating y from y - z and y + z") {
    BiPoly a = BiPoly::parse("y - z", "y", "z"), b = BiPoly::parse("y + z", "y", "z");
    UniPoly r = resultant_y(a, b);
    // Sylvester determinant with the rows of the first argument first:
    // det [[1, -z], [1, z]] = 2z.
    CHECK(r == UniPoly::parse("2*z"));
    CHECK(r.eval(Rat(3)) == sylvester_resultant_at(a, b, Rat(3)));
    // Swapping arguments multiplies by (-1)^(deg a * deg b).
    CHECK(resultant_y(b, a) == UniPoly::parse("-2*z"));
}

TEST_CASE("resultant matches the Sylvester determinant pointwise") {
    std::mt19937 rng(17);
    for (int i = 0; i < 40; ++i) {
        BiPoly a = random_bipoly(rng, 1 + i % 4, 1 + i % 3);
        BiPoly b = random_bipoly(rng, 1 + (i / 2) % 4, i % 4);
        UniPoly r = resultant_y(a, b);
        for (long z : {-2L, 0L, 1L, 5L}) CHECK(r.eval(Rat(z)) == sylvester_resultant_at(a, b, Rat(z)));
        CHECK(r.eval(Rat::parse("2/3")) == sylvester_resultant_at(a, b, Rat::parse("2/3")));
    }
}

TEST_CASE("resultant vanishes exactly where a common root appears") {
    BiPoly a = BiPoly::parse("y^2 - z", "y", "z"), b = BiPoly::parse("y - 2", "y", "z");
    UniPoly r = resultant_y(a, b);
    CHECK(r.eval(Rat(4)) == Rat(0));
    CHECK(r.degree() == 1);
    CHECK_THROWS_AS(resultant_y(a, BiPoly::parse("z + 1", "y", "z")), std::domain_error);
}

TEST_CASE("bivariate gcd and exact division") {
    BiPoly g = BiPoly::parse("y^2 - z^2 + 4", "y", "z");
    BiPoly u = BiPoly::parse("y*z + 3", "y", "z"), v = BiPoly::parse("y^3 - z", "y", "z");
    BiPoly h = gcd(g * u, g * v);
    CHECK(h == g);
    CHECK(exact_divide(g * u, g) == u);
    CHECK_THROWS_AS(exact_divide(u, g), std::domain_error);
    CHECK(gcd(u, v).is_constant());
}

TEST_CASE("ring axioms and evaluation homomorphism") {
    std::mt19937 rng(31);
    for (int i = 0; i < 60; ++i) {
        BiPoly a = random_bipoly(rng, i % 4, i % 3), b = random_bipoly(rng, i % 3, (i + 1) % 4);
        Rat y = Rat::normalize(i - 30, 11), z = Rat::normalize(7 - i, 5);
        CHECK((a * b).eval(y, z) == a.eval(y, z) * b.eval(y, z));
        CHECK((a + b).eval(y, z) == a.eval(y, z) + b.eval(y, z));
        CHECK(a.specialize_v2(z).eval(y) == a.eval(y, z));
        CHECK(a.specialize_v1(y).eval(z) == a.eval(y, z));
        CHECK(a * b == b * a);
        auto cp = content_primitive(a);
        CHECK(cp.primitive * cp.content == a);
    }
}

TEST_CASE("large products take the recursive route consistently") {
    std::mt19937 rng(41);
    BiPoly a = random_bipoly(rng, 9, 9), b = random_bipoly(rng, 8, 9);
    REQUIRE(a.term_count() * b.term_count() > 4096);
    Rat y = Rat::parse("-5/3"), z = Rat::parse("2/7");
    CHECK((a * b).eval(y, z) == a.eval(y, z) * b.eval(y, z));
}
