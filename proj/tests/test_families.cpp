#include "doctest.h"

#include "quadorbit/families.hpp"

#include <stdexcept>

using namespace quadorbit;

namespace {
Rat q(const char* s) { return Rat::parse(s); }
}  // namespace

TEST_CASE("shipped catalog") {
    const Catalog& cat = catalog();
    CHECK(cat.families.size() == 5);
    CHECK(cat.family("F-22a").lemma == "2.3");
    CHECK_THROWS_AS(cat.family("F-99"), std::out_of_range);
    CHECK(cat.sporadic_from("2.3").size() == 5);
    CHECK(cat.sporadic_from("theorem").size() == 2);
    CHECK(cat.sporadic_from("nowhere").empty());
}

TEST_CASE("every family is closed in Q(t)") {
    for (const auto& f : catalog().families) {
        CAPTURE(f.id);
        SymbolicCheck s = family_verify_symbolic(f);
        CHECK(s.ok);
        CHECK(s.failures.empty());
    }
}

TEST_CASE("a broken stable set is caught") {
    // F-22a without the last two elements of its stable set.
    FamilyDef f = make_family("F-bad", "2.3", "t",
                              {"(-7*t^4 - 2*t^2 - 7)/(4*(t^2 - 1)^2)", "(-3*t^4 - 10*t^2 - 3)/(4*(t^2 - 1)^2)"},
                              {2, 2}, "(-3*t^2 - 1)/(2*(t^2 - 1))", {"P", "f2(P)"});
    SymbolicCheck s = family_verify_symbolic(f);
    CHECK_FALSE(s.ok);
    CHECK_FALSE(s.failures.empty());
}

TEST_CASE("specializations") {
    const FamilyDef& f = catalog().family("F-12a");
    // y = 3 gives x^2 - 2 and x^2 - 3 with P = 2.
    auto [maps, p] = family_instance(f, Rat(3));
    CHECK(maps.cs() == std::vector<Rat>{Rat(-2), Rat(-3)});
    CHECK(p == Rat(2));
    CHECK(monoid_orbit(maps, p).finite());
    for (const Rat& t : f.excluded) CHECK_THROWS_AS(family_instance(f, t), std::domain_error);
    CHECK(family_match(f, {Rat(-2), Rat(-3)}, Rat(2)) == std::vector<Rat>{Rat(3)});
    CHECK(family_match(f, {Rat(-2), Rat(-3)}, Rat(5)).empty());
}

TEST_CASE("random admissible specializations are finite") {
    for (const auto& f : catalog().families) {
        CAPTURE(f.id);
        auto ts = random_admissible_parameters(f, 20, 7);
        CHECK(ts.size() == 20);
        FamilyCheck c = family_check(f, 10, 3);
        CHECK(c.ok());
        CHECK(c.specializations.size() == 10);
    }
    // Same seed, same parameters.
    const FamilyDef& f = catalog().family("F-11b");
    CHECK(random_admissible_parameters(f, 5, 9) == random_admissible_parameters(f, 5, 9));
}

TEST_CASE("sporadic tuples admit finite basepoints") {
    for (const auto& s : catalog().sporadic) {
        CAPTURE(s.source);
        auto pts = finite_orbit_points(MapSet(s.cs));
        CHECK_FALSE(pts.empty());
        for (const Rat& p : s.basepoints) CHECK(std::binary_search(pts.begin(), pts.end(), p));
    }
}

TEST_CASE("orbit expressions") {
    std::vector<Rat> cs = {q("-21/16"), q("-13/16")};
    CHECK(eval_orbit_expr("f2(P)", cs, q("1/4")) == q("-3/4"));
    CHECK(eval_orbit_expr("-f1(f2(P))", cs, q("1/4")) == q("3/4"));
    CHECK_THROWS_AS(eval_orbit_expr("f3(P)", cs, q("1/4")), std::invalid_argument);
}

TEST_CASE("catalog parsing rejects malformed documents") {
    CHECK_THROWS_AS(parse_catalog("{"), std::invalid_argument);
    CHECK_THROWS_AS(parse_catalog(R"({"families": [{"id": "x"}], "sporadic": []})"), std::invalid_argument);
}
