#include "doctest.h"

#include "quadorbit/unipoly.hpp"

#include <random>
#include <stdexcept>

using namespace quadorbit;

namespace {

UniPoly random_poly(std::mt19937& rng, int deg) {
    std::uniform_int_distribution<long> num(-30, 30), den(1, 12);
    std::vector<Rat> c;
    for (int i = 0; i <= deg; ++i) c.push_back(Rat::normalize(num(rng), den(rng)));
    return UniPoly(std::move(c));
}

}  // namespace

TEST_CASE("text syntax round-trips") {
    UniPoly p = UniPoly::parse("4*x^4 - 5*x^2 - 9");
    CHECK(p.degree() == 4);
    CHECK(p.str() == "4*x^4 - 5*x^2 - 9");
    CHECK(UniPoly::parse(p.str()) == p);
    CHECK(UniPoly::parse("x^2 - 13/16").str() == "x^2 - 13/16");
    CHECK(UniPoly::parse("(t+1)^2", "t").str() == "t^2 + 2*t + 1");
    CHECK_THROWS_AS(UniPoly::parse("x + y"), std::invalid_argument);
    CHECK_THROWS_AS(UniPoly::parse("x^"), std::invalid_argument);
    CHECK_THROWS_AS(UniPoly::parse("1/x"), std::invalid_argument);
}

TEST_CASE("mismatched variables are rejected") {
    CHECK_THROWS_AS(UniPoly::variable("x") + UniPoly::variable("t"), std::invalid_argument);
    CHECK_NOTHROW(UniPoly::variable("t") + UniPoly::constant(Rat(1)));
}

TEST_CASE("exact_divide reports a remainder") {
    UniPoly p = UniPoly::parse("x^2 - 1"), d = UniPoly::parse("x - 1");
    CHECK(exact_divide(p, d) == UniPoly::parse("x + 1"));
    CHECK_THROWS_AS(exact_divide(p, UniPoly::parse("x - 2")), std::domain_error);
}

TEST_CASE("content and primitive part") {
    auto cp = content_primitive(UniPoly::parse("3/4*x^2 - 3/2"));
    CHECK(cp.content == Rat::parse("3/4"));
    CHECK(cp.primitive == ZPoly(std::vector<Int>{-2, 0, 1}));
    auto neg = content_primitive(UniPoly::parse("-2*x + 4"));
    CHECK(neg.content == Rat(-2));
    CHECK(sgn(neg.primitive.lc()) > 0);
}

TEST_CASE("composition evaluates pointwise") {
    std::mt19937 rng(5);
    for (int i = 0; i < 50; ++i) {
        UniPoly f = random_poly(rng, 1 + i % 4), g = random_poly(rng, 1 + i % 3);
        Rat x = Rat::normalize(static_cast<long>(i) - 25, 7);
        CHECK(compose(f, g).eval(x) == f.eval(g.eval(x)));
    }
}

TEST_CASE("ring axioms and division identity on random polynomials") {
    std::mt19937 rng(9);
    for (int i = 0; i < 200; ++i) {
        UniPoly a = random_poly(rng, i % 6), b = random_poly(rng, (i / 3) % 5), c = random_poly(rng, i % 3);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        if (!b.is_zero()) {
            auto [q, r] = divmod(a, b);
            CHECK(q * b + r == a);
            CHECK(r.degree() < b.degree());
        }
    }
}

TEST_CASE("large rational products agree with the schoolbook route") {
    std::mt19937 rng(21);
    UniPoly a = random_poly(rng, 40), b = random_poly(rng, 35);
    Rat x = Rat::parse("-3/7");
    CHECK((a * b).eval(x) == a.eval(x) * b.eval(x));
}

TEST_CASE("gcd and squarefree part") {
    UniPoly a = UniPoly::parse("(x - 1)^3 * (2*x + 3)");
    UniPoly b = UniPoly::parse("(x - 1) * (x + 5)");
    CHECK(gcd(a, b) == UniPoly::parse("x - 1"));
    CHECK(squarefree_part(a) == UniPoly::parse("(x - 1) * (x + 3/2)"));
}
