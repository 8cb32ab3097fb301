#include "doctest.h"

#include "quadorbit/dynamics.hpp"
#include "quadorbit/search.hpp"

#include <algorithm>
#include <stdexcept>

using namespace quadorbit;

namespace {
Rat q(const char* s) { return Rat::parse(s); }
}  // namespace

TEST_CASE("grid construction") {
    SearchSpec s;
    s.denominators = {Int(1), Int(2)};
    s.numerator_bound = 2;
    // k/1 and k/2 for |k| <= 2, deduplicated.
    CHECK(s.grid().size() == 7);
    s.denominators = {Int(0)};
    CHECK_THROWS_AS(s.grid(), std::invalid_argument);
}

TEST_CASE("pruned and naive search agree on the full grid") {
    SearchSpec s;  // k/16, |k| <= 40, triples
    SearchResult pruned = search(s);
    s.subset_pruning = false;
    SearchResult naive = search(s);
    CHECK(pruned.hits == naive.hits);
    CHECK(naive.sets_examined == 81 * 80 * 79 / 6);
    REQUIRE(pruned.hits.size() == 2);
}

TEST_CASE("results do not depend on worker count") {
    SearchSpec s;
    s.set_size = 2;
    s.numerator_bound = 24;
    SearchResult one = search(s);
    s.workers = 3;
    CHECK(search(s).hits == one.hits);
    for (const auto& h : one.hits) CHECK(finite_orbit_points(MapSet(h.cs)) == h.basepoints);
}

TEST_CASE("integer pairs") {
    SearchSpec s;
    s.denominators = {Int(1)};
    s.numerator_bound = 5;
    s.set_size = 2;
    SearchResult r = search(s);
    SearchHit sharp{{Rat(-3), Rat(-2)}, {Rat(-2), Rat(-1), Rat(1), Rat(2)}};
    CHECK(std::find(r.hits.begin(), r.hits.end(), sharp) != r.hits.end());
    CHECK(format_hits({sharp}) == "-3,-2: -2 -1 1 2\n");
}

TEST_CASE("search spec parsing") {
    SearchSpec s = parse_search_spec(R"({"denominators": [4, "16"], "numerator_bound": 8, "set_size": 2,
                                         "extra": ["-29/16"], "workers": 2})");
    CHECK(s.denominators == std::vector<Int>{Int(4), Int(16)});
    CHECK(s.numerator_bound == 8);
    CHECK(s.set_size == 2);
    CHECK(s.extra == std::vector<Rat>{q("-29/16")});
    CHECK(s.workers == 2);
    CHECK_THROWS_AS(parse_search_spec(R"({"set_size": 9})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_search_spec(R"({"bogus": 1})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_search_spec("[1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_search_spec(R"({"extra": ["0.5"]})"), std::invalid_argument);
}
