#include "doctest.h"

#include "quadorbit/roots.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

using namespace quadorbit;

namespace {

std::vector<Int> divisors(Int n) {
    n = abs(n);
    std::vector<Int> out;
    for (Int d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n) out.push_back(n / d);
        }
    }
    return out;
}

// Rational root theorem by trial: p/q with p | a_0 and q | a_n.
std::set<Rat> brute_force_roots(const ZPoly& p) {
    std::set<Rat> out;
    std::size_t low = 0;
    while (sgn(p[low]) == 0) ++low;
    if (low > 0) out.insert(Rat(0));
    for (const Int& num : divisors(p[low]))
        for (const Int& den : divisors(p.lc()))
            for (int s : {1, -1}) {
                Rat r = Rat::normalize(num * s, den);
                if (p.eval(r).is_zero()) out.insert(r);
            }
    return out;
}

std::set<Rat> as_set(const RootReport& r) {
    auto v = r.values();
    return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("integer roots of small examples") {
    CHECK(integer_roots(ZPoly(std::vector<Int>{0, -1, 0, 1})).values() == std::vector<Rat>{-1, 0, 1});
    CHECK(integer_roots(ZPoly(std::vector<Int>{1, 0, 1})).roots.empty());
    ZPoly p = ZPoly(std::vector<Int>{-3, 1}) * ZPoly(std::vector<Int>{5, 1}) * ZPoly(std::vector<Int>{1, 1, 1});
    auto rep = integer_roots(p);
    CHECK(rep.values() == std::vector<Rat>{-5, 3});
    CHECK(rep.method == "hensel");
    CHECK(rep.prime > 50);
}

TEST_CASE("rational roots of small examples") {
    CHECK(rational_roots(UniPoly::parse("4*x^4 - 5*x^2 - 9")).values() ==
          std::vector<Rat>{Rat::parse("-3/2"), Rat::parse("3/2")});
    auto fixed = rational_roots(UniPoly::parse("x^2 - x - 5/16"));
    CHECK(fixed.values() == std::vector<Rat>{Rat::parse("-1/4"), Rat::parse("5/4")});
    CHECK(fixed.method == "quadratic");
    // Discriminant 1 - 5/4 is negative.
    CHECK(rational_roots(UniPoly::parse("x^2 - x + 5/16")).roots.empty());
    CHECK_THROWS_AS(rational_roots(UniPoly()), std::invalid_argument);
    CHECK(rational_roots(UniPoly::constant(Rat(3))).roots.empty());
}

TEST_CASE("multiplicities are counted") {
    auto rep = rational_roots(UniPoly::parse("x^3 * (2*x - 1)^2 * (x + 4)^3 * (x^2 + 3)"));
    REQUIRE(rep.roots.size() == 3);
    CHECK(rep.roots[0] == std::pair<Rat, int>{Rat(-4), 3});
    CHECK(rep.roots[1] == std::pair<Rat, int>{Rat(0), 3});
    CHECK(rep.roots[2] == std::pair<Rat, int>{Rat::parse("1/2"), 2});
}

TEST_CASE("integer roots skip non-integral rational roots") {
    CHECK(integer_roots(ZPoly(std::vector<Int>{-1, 2}) * ZPoly(std::vector<Int>{-7, 1}) *
                        ZPoly(std::vector<Int>{2, 0, 0, 1}))
              .values() == std::vector<Rat>{7});
}

TEST_CASE("modular method agrees with the rational root theorem on random inputs") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<long> coeff(-40, 40);
    for (int i = 0; i < 300; ++i) {
        int deg = 3 + i % 6;
        std::vector<Int> c(static_cast<std::size_t>(deg) + 1);
        for (auto& x : c) x = coeff(rng);
        if (sgn(c.back()) == 0) c.back() = 3;
        if (sgn(c.front()) == 0 && i % 2) c.front() = -6;
        ZPoly p(std::move(c));
        // Plant a root half the time so the sets are not trivially empty.
        if (i % 2 == 0) p = p * ZPoly(std::vector<Int>{coeff(rng), 1 + i % 4});
        auto rep = rational_roots(p);
        CHECK(as_set(rep) == brute_force_roots(p));
        for (const auto& [r, m] : rep.roots) CHECK(p.eval(r).is_zero());
    }
}

TEST_CASE("huge coefficients and high degree") {
    // (x - 12345678901234567/3) (3x + 1)^2 (x^40 + 7 x + 1)
    ZPoly a(std::vector<Int>{Int("-12345678901234567"), 3});
    ZPoly b(std::vector<Int>{1, 3});
    std::vector<Int> c(41);
    c[0] = 1;
    c[1] = 7;
    c[40] = 1;
    ZPoly p = a * b * b * ZPoly(std::move(c));
    auto rep = rational_roots(p);
    REQUIRE(rep.roots.size() == 2);
    CHECK(rep.roots[0] == std::pair<Rat, int>{Rat::parse("-1/3"), 2});
    CHECK(rep.roots[1] == std::pair<Rat, int>{Rat::normalize(Int("12345678901234567"), 3), 1});
}
