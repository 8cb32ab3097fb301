#include "doctest.h"

#include "quadorbit/zpoly.hpp"

#include <random>
#include <stdexcept>

using namespace quadorbit;

namespace {

ZPoly random_zpoly(std::mt19937& rng, int deg, long bound) {
    std::uniform_int_distribution<long> d(-bound, bound);
    std::vector<Int> c(static_cast<std::size_t>(deg) + 1);
    for (auto& x : c) x = d(rng);
    if (sgn(c.back()) == 0) c.back() = 1;
    return ZPoly(std::move(c));
}

ZPoly schoolbook(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return ZPoly(std::move(out));
}

}  // namespace

TEST_CASE("large products match schoolbook multiplication") {
    std::mt19937 rng(3);
    for (int i = 0; i < 20; ++i) {
        ZPoly a = random_zpoly(rng, 20 + i * 7, 1L << 40);
        ZPoly b = random_zpoly(rng, 15 + i * 5, 1000);
        a = a * ZPoly(-1);
        CHECK(a * b == schoolbook(a, b));
    }
}

TEST_CASE("exact division and divisibility") {
    ZPoly a(std::vector<Int>{-1, 0, 1});  // x^2 - 1
    ZPoly b(std::vector<Int>{1, 1});      // x + 1
    CHECK(exact_div(a, b) == ZPoly(std::vector<Int>{-1, 1}));
    CHECK(divides(b, a));
    CHECK_FALSE(divides(ZPoly(std::vector<Int>{2, 1}), a));
    CHECK_THROWS_AS(exact_div(a, ZPoly(std::vector<Int>{2, 1})), std::domain_error);
}

TEST_CASE("gcd recovers a planted common factor") {
    std::mt19937 rng(11);
    for (int i = 0; i < 40; ++i) {
        ZPoly g = primitive_part(random_zpoly(rng, 1 + i % 5, 20));
        ZPoly u = random_zpoly(rng, 3 + i % 7, 50);
        ZPoly v = random_zpoly(rng, 2 + i % 6, 50);
        ZPoly a = g * u, b = g * v;
        ZPoly h = gcd(a, b);
        CHECK(divides(g, h));
        CHECK(divides(h, a));
        CHECK(divides(h, b));
    }
    ZPoly x2m1(std::vector<Int>{-1, 0, 1}), x2p1(std::vector<Int>{1, 0, 1});
    CHECK(gcd(x2m1, x2p1) == ZPoly(1));
}

TEST_CASE("squarefree part removes repeated factors") {
    ZPoly a(std::vector<Int>{-1, 1}), b(std::vector<Int>{3, 2});
    ZPoly p = pow(a, 3) * b * b;
    CHECK(squarefree_part(p) == a * b);
}

TEST_CASE("homogeneous evaluation detects rational roots") {
    ZPoly p(std::vector<Int>{-3, 2});  // 2x - 3
    CHECK(sgn(p.eval_homogeneous(3, 2)) == 0);
    CHECK(p.eval(Rat::parse("3/2")) == Rat(0));
}
