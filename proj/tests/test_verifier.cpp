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

std::vector<Rat> sorted(std::vector<Rat> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST_CASE("criterion f^4 = f^2") {
    QuadMap f{q("-13/16")};
    // Fixed points and 2-cycle points of x^2 - 13/16 satisfy it.
    CHECK(poonen_criterion(f, q("1/4")));
    CHECK(poonen_criterion(f, q("-3/4")));
    CHECK(poonen_criterion(f, q("3/4")));
    CHECK_FALSE(poonen_criterion(f, Rat(5)));
    CHECK(tail_bound_applies(f));
    CHECK_FALSE(tail_bound_applies(QuadMap{q("-29/16")}));
}

TEST_CASE("words parse in application order") {
    CHECK(parse_word("f1∘f2∘f3") == Word{2, 1, 0});
    CHECK(parse_word("phi2∘phi3") == Word{2, 1});
    CHECK(parse_word("f2 o f1") == Word{0, 1});
    CHECK(parse_word("f1*f1") == Word{0, 0});
    CHECK_THROWS_AS(parse_word("g1∘f2"), std::invalid_argument);
    CHECK(word_str(parse_word("f4∘f2∘f1∘f4")) == "f4∘f2∘f1∘f4");
}

TEST_CASE("witnesses re-verify and are rejected when tampered") {
    MapSet s({q("3/16"), q("-5/16"), q("-13/16"), q("-21/16")});
    auto w = find_poonen_witness(s, q("1/4"));
    REQUIRE(w.has_value());
    CHECK(check_witness(s, q("1/4"), *w));
    PoonenWitness bad = *w;
    bad.q = bad.q + Rat(1);
    CHECK_FALSE(check_witness(s, q("1/4"), bad));
    // No witness exists for a finite orbit.
    CHECK_FALSE(find_poonen_witness(MapSet({q("-5/16"), q("-13/16"), q("-21/16")}), q("1/4")).has_value());
}

TEST_CASE("point dispositions") {
    auto eq = dispose_point({q("-5/16"), q("-5/16")}, q("1/4"));
    CHECK(eq.kind == Disposition::EqualMaps);

    auto fin = dispose_point({q("-5/16"), q("-13/16"), q("-21/16")}, q("1/4"));
    CHECK(fin.kind == Disposition::Finite);
    CHECK(fin.orbit == rats({"1/4", "-1/4", "3/4", "-3/4", "5/4", "-5/4"}));

    auto inf = dispose_point({q("3/16"), q("-5/16"), q("-13/16"), q("-21/16")}, q("3/4"));
    CHECK(inf.kind == Disposition::Contradiction);
    REQUIRE(inf.escape.has_value());

    // F-12a at y = 3: x^2 - 2 and x^2 - 3 with P = 2.
    const FamilyDef* f = &catalog().family("F-12a");
    auto mem = dispose_point({Rat(-2), Rat(-3)}, Rat(2), {f});
    CHECK(mem.kind == Disposition::FamilyMember);
    CHECK(mem.family == "F-12a");
    CHECK(mem.family_param == Rat(3));
}

TEST_CASE("axioms carry citations") {
    for (Axiom a : {Axiom::PeriodBound, Axiom::TailBound, Axiom::ThreeCycleEntry}) {
        CHECK_FALSE(axiom_name(a).empty());
        CHECK(axiom_citation(a).find("Poonen") != std::string::npos);
    }
}

TEST_CASE("two-map lemmas, resultant route") {
    CHECK(lemma_ids().size() == 6);
    CHECK_THROWS_AS(verify_lemma("2.7"), std::invalid_argument);

    LemmaReport a = verify_lemma("2.1");
    CHECK(a.pass);
    CHECK(a.components_ok);
    CHECK(sorted(a.candidate_values) == rats({"1", "-1", "2", "-2", "3/2", "-3/2"}));
    CHECK(a.families == std::vector<std::string>{"F-11a", "F-11b"});

    LemmaReport b = verify_lemma("2.2");
    CHECK(b.pass);
    CHECK(sorted(b.candidate_values) == rats({"0", "1/2", "-1/2"}));

    LemmaReport d = verify_lemma("2.4");
    CHECK(d.pass);
    CHECK(sorted(d.candidate_values) == rats({"0", "-1"}));
    CHECK(d.sporadic.empty());
    CHECK(d.families.empty());
    // Every exclusion in the report re-verifies by BFS.
    for (const auto& c : d.candidates)
        for (const auto& p : c.points)
            if (p.verdict.kind == Disposition::Contradiction)
                CHECK_FALSE(monoid_orbit(MapSet(p.verdict.cs), p.verdict.p).finite());

    LemmaReport e = verify_lemma("2.5");
    CHECK(e.pass);
    CHECK(sorted(e.v1_values) == rats({"3/2", "-3/2", "5/2", "-5/2"}));
    CHECK(e.sporadic == std::vector<std::pair<Rat, Rat>>{{q("-21/16"), q("-29/16")}});
}

TEST_CASE("lemma conclusion pairs consumed by the cases") {
    CHECK(lemma_conclusion_pairs("2.4").empty());
    CHECK(lemma_conclusion_pairs("2.5") == std::vector<std::pair<Rat, Rat>>{{q("-21/16"), q("-29/16")}});
    CHECK(lemma_conclusion_pairs("2.6") == lemma_conclusion_pairs("2.5"));
}
