#include "doctest.h"

#include "quadorbit/ratfunc.hpp"

#include <random>
#include <stdexcept>

using namespace quadorbit;

namespace {

RatFunc random_rf(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
    auto poly = [&](int deg) {
        std::vector<Rat> c;
        for (int i = 0; i <= deg; ++i) c.push_back(Rat::normalize(num(rng), den(rng)));
        c.back() = Rat(1 + static_cast<long>(rng() % 3));
        return UniPoly(std::move(c), "t");
    };
    return RatFunc(poly(static_cast<int>(rng() % 4)), poly(static_cast<int>(rng() % 3)));
}

}  // namespace

TEST_CASE("canonical form") {
    RatFunc f = RatFunc::parse("(2*t^2 - 2) / (4*t - 4)");
    CHECK(f.num() == UniPoly::parse("1/2*t + 1/2", "t"));
    CHECK(f.den() == UniPoly::constant(Rat(1), "t"));
    CHECK(RatFunc::parse("t / (t - 1)") * RatFunc::parse("(t - 1) / t") == RatFunc::constant(Rat(1)));
    RatFunc a = RatFunc::parse("(t^3 + 1) / (3*t^2 - 7)");
    CHECK((a - a).is_zero());
    CHECK(a.den().lc() == Rat(1));
    CHECK(RatFunc::parse(a.str()) == a);
    CHECK_THROWS_AS(RatFunc::parse("1 / (t - t)"), std::domain_error);
    CHECK_THROWS_AS(RatFunc::parse("x + 1"), std::invalid_argument);
}

TEST_CASE("parametrization of y^2 - z^2 = -4") {
    RatFunc y = RatFunc::parse("4*t / (t^2 - 1)"), z = RatFunc::parse("(2*t^2 + 2) / (t^2 - 1)");
    CHECK(y * y - z * z == RatFunc::constant(Rat(-4)));
}

TEST_CASE("quadratic map identities") {
    RatFunc fixed_c = RatFunc::parse("(1 - t^2) / 4"), fixed_p = RatFunc::parse("(1 + t) / 2");
    CHECK(apply_quadmap(fixed_c, fixed_p) == fixed_p);
    CHECK(apply_quadmap(RatFunc::constant(Rat(0)), RatFunc::variable()) == RatFunc::parse("t^2"));
    RatFunc two_c = RatFunc::parse("-(3 + t^2) / 4"), w = RatFunc::parse("(-1 + t) / 2");
    RatFunc w1 = apply_quadmap(two_c, w);
    CHECK(w1 == RatFunc::parse("(-1 - t) / 2"));
    CHECK(apply_quadmap(two_c, w1) == w);
}

TEST_CASE("specialization and poles") {
    RatFunc f = RatFunc::parse("(t^2 + 4*t - 1) / (2*(t^2 - 1))");
    CHECK(f.specialize(Rat(3)) == Rat::parse("5/4"));
    CHECK_THROWS_AS(f.specialize(Rat(1)), std::domain_error);
    CHECK(RatFunc::constant(Rat::parse("-7/3")).specialize(Rat(100)) == Rat::parse("-7/3"));
}

TEST_CASE("specialization commutes with field operations") {
    std::mt19937 rng(77);
    int checked = 0;
    for (int i = 0; i < 300; ++i) {
        RatFunc a = random_rf(rng), b = random_rf(rng);
        Rat t0 = Rat::normalize(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 6) + 1);
        Rat av, bv;
        try {
            av = a.specialize(t0);
            bv = b.specialize(t0);
        } catch (const std::domain_error&) {
            continue;
        }
        ++checked;
        CHECK((a + b).specialize(t0) == av + bv);
        CHECK((a - b).specialize(t0) == av - bv);
        CHECK((a * b).specialize(t0) == av * bv);
        if (!bv.is_zero()) CHECK((a / b).specialize(t0) == av / bv);
        CHECK(apply_quadmap(a, b).specialize(t0) == bv * bv + av);
        CHECK(a + b == b + a);
        CHECK((a * b) / b == a);
    }
    CHECK(checked > 200);
}

TEST_CASE("composition") {
    RatFunc f = RatFunc::parse("(t^2 + 1) / (t - 2)"), g = RatFunc::parse("(3*t - 1) / (t + 5)");
    for (long k : {-3L, 0L, 4L, 7L}) {
        Rat t0(k);
        CHECK(compose(f, g).specialize(t0) == f.specialize(g.specialize(t0)));
    }
}
