#include "doctest.h"

#include "quadorbit/arith.hpp"

#include <random>
#include <stdexcept>

using namespace quadorbit;

TEST_CASE("rationals normalize to lowest terms with positive denominator") {
    Rat r = Rat::normalize(6, -4);
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(r.str() == "-3/2");
    CHECK(Rat::normalize(0, -7).str() == "0");
    CHECK_THROWS_AS(Rat::normalize(1, 0), std::domain_error);
}

TEST_CASE("parse and print round-trip") {
    for (const char* s : {"0", "1", "-1", "13/16", "-21/16", "-98765432109876543210987654321/2"}) {
        CHECK(Rat::parse(s).str() == s);
    }
    CHECK(Rat::parse("6/8").str() == "3/4");
    CHECK(Rat::parse("+5").str() == "5");
    for (const char* bad : {"", "1/0", "1.5", "a", "1/", "/2", "1//2", " 1", "1 /2", "--1", "1/-2"}) {
        CHECK_THROWS_AS(Rat::parse(bad), std::invalid_argument);
    }
}

TEST_CASE("height is max of |num| and den") {
    CHECK(height(Rat::parse("-21/16")) == 21);
    CHECK(height(Rat::parse("3/16")) == 16);
    CHECK(height(Rat(0)) == 1);
}

TEST_CASE("division by zero is rejected") {
    CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
}

TEST_CASE("is_square on rationals") {
    CHECK(is_square(Rat::parse("9/16")).value() == Rat::parse("3/4"));
    CHECK(is_square(Rat(0)).value() == Rat(0));
    CHECK_FALSE(is_square(Rat::parse("3/4")).has_value());
    CHECK_FALSE(is_square(Rat::parse("-9/16")).has_value());
}

TEST_CASE("isqrt agrees with the defining inequality on random inputs") {
    std::mt19937_64 rng(12345);
    for (int i = 0; i < 500; ++i) {
        Int n = rng();
        n *= Int(rng());
        n *= Int(rng() % 1000 + 1);
        Int r = isqrt(n);
        CHECK(r * r <= n);
        CHECK((r + 1) * (r + 1) > n);
        CHECK(exact_sqrt(r * r).value() == r);
    }
    CHECK_THROWS_AS(isqrt(Int(-1)), std::domain_error);
}

TEST_CASE("field axioms hold on random rationals") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> num(-1000, 1000), den(1, 1000);
    auto draw = [&] { return Rat::normalize(num(rng), den(rng)); };
    for (int i = 0; i < 2000; ++i) {
        Rat a = draw(), b = draw(), c = draw();
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Rat(0));
        if (!a.is_zero()) CHECK(a / a == Rat(1));
        CHECK(Rat::parse(a.str()) == a);
    }
}
