#include "doctest.h"

#include "quadorbit/report.hpp"

#include "json.hpp"

#include <stdexcept>

using namespace quadorbit;

namespace {
Rat q(const char* s) { return Rat::parse(s); }
}  // namespace

TEST_CASE("finite orbit reports round-trip") {
    MapSet s({q("-5/16"), q("-13/16"), q("-21/16")});
    std::string doc = orbit_report(s, q("1/4"), monoid_orbit(s, q("1/4")));
    auto j = nlohmann::json::parse(doc);
    CHECK(j["verdict"] == "finite");
    CHECK(j["size"] == 6);
    CHECK(j["orbit"][0] == "-5/4");
    CHECK(verify_orbit_report(doc));

    // A report whose orbit is not closed does not verify.
    j["orbit"].erase(j["orbit"].size() - 1);
    j["words"].erase(j["words"].size() - 1);
    j["size"] = 5;
    CHECK_FALSE(verify_orbit_report(j.dump()));
}

TEST_CASE("infinite orbit reports round-trip") {
    MapSet s({q("3/16"), q("-5/16"), q("-13/16"), q("-21/16")});
    std::string doc = orbit_report(s, q("3/4"), monoid_orbit(s, q("3/4")));
    CHECK(verify_orbit_report(doc));
    auto j = nlohmann::json::parse(doc);
    j["escape"]["witness"] = "1/4";
    CHECK_FALSE(verify_orbit_report(j.dump()));
}

TEST_CASE("malformed reports are rejected") {
    CHECK_THROWS_AS(verify_orbit_report("{"), std::invalid_argument);
    CHECK_THROWS_AS(verify_orbit_report(R"({"maps": ["1"], "point": "0"})"), std::invalid_argument);
    CHECK_THROWS_AS(verify_orbit_report(R"({"maps": ["1"], "point": "0", "verdict": "maybe"})"),
                    std::invalid_argument);
}

TEST_CASE("report documents have stable fields") {
    auto p = nlohmann::json::parse(preperiodic_report(Rat(1), Rat(0), is_preperiodic(QuadMap{Rat(1)}, Rat(0))));
    CHECK(p["preperiodic"] == false);
    CHECK(p["reason"] == "escape-bound");

    MapSet two({q("-29/16"), q("-21/16")});
    auto m = nlohmann::json::parse(mu_report(two, mu_set(two)));
    CHECK(m["mu"] == 3);
    CHECK(m["period_bound_holds"] == true);

    auto per = nlohmann::json::parse(periodic_report(q("-29/16"), 3, periodic_points(QuadMap{q("-29/16")}, 3)));
    CHECK(per["points"] == nlohmann::json({"-7/4", "-1/4", "5/4"}));

    auto l = nlohmann::json::parse(lemma_report(verify_lemma("2.4")));
    CHECK(l["id"] == "2.4");
    CHECK(l["finite_orbit_points"] == false);
    CHECK(l["pass"] == true);
    CHECK(l["axioms"].size() >= 1);

    auto c = nlohmann::json::parse(case_report(verify_theorem_case(7)));
    CHECK(c["case"] == 7);
    CHECK(c["flag_count"].get<int>() >= 1);
    CHECK(c["ok"] == true);

    auto f = nlohmann::json::parse(family_report(family_check(catalog().family("F-22a"), 5)));
    CHECK(f["symbolic_ok"] == true);
    CHECK(f["specializations"].size() == 5);
    CHECK_THROWS_AS(family_report(FamilyCheck{}), std::invalid_argument);

    SearchSpec spec;
    spec.set_size = 4;
    auto s = nlohmann::json::parse(search_report(spec, search(spec)));
    CHECK(s["hits"].empty());
    CHECK(s["spec"]["set_size"] == 4);
}

TEST_CASE("theorem summary aggregates counts") {
    TheoremOptions opt;
    opt.verify_lemmas = false;
    opt.integral_bound = 10;
    auto t = nlohmann::json::parse(theorem_report(verify_theorem(opt)));
    CHECK(t["summary"]["cases"] == 10);
    CHECK(t["summary"]["cases_pass"] == 10);
    CHECK(t["summary"]["flags"].get<int>() >= 4);
    CHECK(t["merged"]["word"] == "f4∘f2∘f1∘f4");
    CHECK(t["pass"] == true);
}
