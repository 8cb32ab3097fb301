#include "doctest.h"

#include "quadorbit/verifier.hpp"

#include <algorithm>
#include <stdexcept>

using namespace quadorbit;

namespace {

Rat q(const char* s) { return Rat::parse(s); }

std::vector<Rat> rats(std::initializer_list<const char*> xs) {
    std::vector<Rat> out;
    for (const char* x : xs) out.push_back(q(x));
    std::sort(out.begin(), out.end());
    return out;
}

const SubcaseReport& subcase(const CaseReport& c, const std::string& id) {
    for (const auto& s : c.subcases)
        if (s.id == id) return s;
    throw std::out_of_range(id);
}

}  // namespace

TEST_CASE("every case closes and covers its lemma conclusions") {
    for (int n = 1; n <= 10; ++n) {
        CAPTURE(n);
        CaseReport c = verify_theorem_case(n);
        CHECK(c.number == n);
        CHECK(c.ok);
        CHECK(c.coverage_ok);
        CHECK(c.cycle_types.size() == 3);
        for (const auto& s : c.subcases) {
            CAPTURE(s.id);
            CHECK(s.ok);
            // Every excluded tuple is independently infinite, every survivor finite.
            for (const auto& p : s.points)
                if (p.kind == Disposition::Contradiction) CHECK_FALSE(monoid_orbit(MapSet(p.cs), p.p).finite());
            for (const auto& v : s.survivors) CHECK(monoid_orbit(MapSet(v.cs), v.p).finite());
        }
    }
    CHECK_THROWS_AS(verify_theorem_case(0), std::invalid_argument);
    CHECK_THROWS_AS(verify_theorem_case(11), std::invalid_argument);
}

TEST_CASE("witness roots in the fixed-point/two-cycle case") {
    CaseReport c = verify_theorem_case(4);
    const SubcaseReport& s = subcase(c, "4.2");
    // Roots in t (poles t = +-1 removed) of the relation factors of
    // x^2 + c3 at Q = (f1∘f1∘f2∘f3)(P) after substituting y = -4t^2/(t^2 - 1);
    // computed independently with sympy (factor_list over Q).
    CHECK(s.witness_roots == rats({"0", "1/3", "-1/3"}));
    CHECK_FALSE(s.values_match);
    CHECK_FALSE(s.flags.empty());
    for (const auto& p : s.points)
        if (p.p == q("3/4")) CHECK(p.kind == Disposition::Contradiction);
}

TEST_CASE("survivors are exactly the two triples") {
    TheoremOptions opt;
    opt.verify_lemmas = false;
    opt.integral_bound = 50;
    TheoremSummary s = verify_theorem(opt);
    CHECK(s.case_split_ok);
    CHECK(s.survivors_match);
    CHECK(s.triples_match);
    REQUIRE(s.survivors.size() == 2);
    CHECK(s.survivors[0].first == rats({"-21/16", "-13/16", "-5/16"}));
    CHECK(s.survivors[0].second == rats({"-3/4", "-1/4", "5/4"}));
    CHECK(s.survivors[1].first == rats({"-13/16", "-5/16", "3/16"}));
    CHECK(s.survivors[1].second == rats({"-1/4", "1/4", "3/4"}));
    CHECK(s.merged_ok);
    CHECK(s.integral_ok);
    CHECK(s.sharp_ok);
    CHECK(s.pass);
}
