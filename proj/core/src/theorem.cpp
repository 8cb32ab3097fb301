#include "quadorbit/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <thread>

namespace quadorbit {

namespace {

// Runs jobs on up to `workers` threads; each job writes only its own slot.
void run_jobs(std::vector<std::function<void()>>& jobs, unsigned workers) {
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(jobs.size())));
    if (workers == 1) {
        for (auto& j : jobs) j();
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t k = next++; k < jobs.size(); k = next++) jobs[k]();
        });
    for (auto& t : pool) t.join();
}

std::vector<Rat> sorted(std::vector<Rat> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

bool same_pairs(std::vector<std::pair<Rat, Rat>> a, std::vector<std::pair<Rat, Rat>> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

// Every 3-multiset of {1, 2, 3} occurs exactly once among the cases.
bool check_case_split(const std::vector<CaseReport>& cases) {
    std::map<std::vector<int>, int> seen;
    for (const auto& c : cases) {
        auto t = c.cycle_types;
        std::sort(t.begin(), t.end());
        seen[t]++;
    }
    int expected = 0;
    for (int a = 1; a <= 3; ++a)
        for (int b = a; b <= 3; ++b)
            for (int c = b; c <= 3; ++c) {
                ++expected;
                auto it = seen.find({a, b, c});
                if (it == seen.end() || it->second != 1) return false;
            }
    return static_cast<int>(seen.size()) == expected;
}

bool is_square_int(const Int& n) { return n >= 0 && exact_sqrt(n).has_value(); }

}  // namespace

TheoremSummary verify_theorem(const TheoremOptions& opt) {
    auto start = std::chrono::steady_clock::now();
    TheoremSummary sum;
    sum.cases.resize(10);
    std::vector<std::function<void()>> jobs;
    for (int n = 1; n <= 10; ++n) jobs.emplace_back([&sum, n] { sum.cases[n - 1] = verify_theorem_case(n); });
    if (opt.verify_lemmas) {
        sum.lemmas.resize(lemma_ids().size());
        for (std::size_t k = 0; k < lemma_ids().size(); ++k)
            jobs.emplace_back([&sum, k] { sum.lemmas[k] = verify_lemma(lemma_ids()[k]); });
    }
    run_jobs(jobs, opt.workers);

    sum.case_split_ok = check_case_split(sum.cases);
    sum.lemmas_ok = true;
    for (const auto& l : sum.lemmas) {
        bool ok = l.pass;
        // The families-free lemmas must conclude with exactly the pairs the cases consume.
        if (l.id == "2.4" || l.id == "2.5" || l.id == "2.6") ok = ok && same_pairs(l.sporadic, lemma_conclusion_pairs(l.id));
        sum.lemmas_ok = sum.lemmas_ok && ok;
    }

    std::map<std::vector<Rat>, std::set<Rat>> surv;
    for (const auto& c : sum.cases)
        for (const auto& s : c.subcases)
            for (const auto& v : s.survivors) surv[sorted(v.cs)].insert(v.p);
    for (const auto& [cs, ps] : surv) sum.survivors.emplace_back(cs, std::vector<Rat>(ps.begin(), ps.end()));

    std::vector<std::pair<std::vector<Rat>, std::vector<Rat>>> stated;
    for (const auto& t : catalog().sporadic_from("theorem")) stated.emplace_back(sorted(t.cs), sorted(t.basepoints));
    std::sort(stated.begin(), stated.end());
    std::vector<std::vector<Rat>> got_triples, want_triples;
    for (const auto& s : sum.survivors) got_triples.push_back(s.first);
    for (const auto& s : stated) want_triples.push_back(s.first);
    sum.survivors_match = got_triples == want_triples;
    sum.triples_match = true;
    for (const auto& [cs, ps] : stated) {
        auto pts = finite_orbit_points(MapSet(cs));
        sum.triples.emplace_back(cs, pts);
        sum.triples_match = sum.triples_match && pts == ps;
    }

    // Four maps: the union of the two triples.
    sum.merged_cs = {Rat::parse("3/16"), Rat::parse("-5/16"), Rat::parse("-13/16"), Rat::parse("-21/16")};
    MapSet merged(sum.merged_cs);
    sum.merged_word = "f4∘f2∘f1∘f4";
    sum.merged_map = 0;
    Word w = parse_word(sum.merged_word);
    sum.merged_ok = tail_bound_applies(merged[sum.merged_map]);
    for (const char* p : {"1/4", "-1/4", "3/4", "-3/4"}) {
        Rat x = Rat::parse(p);
        PointVerdict v = dispose_point(sum.merged_cs, x);
        Rat q = apply_word(merged, w, x);
        std::vector<std::size_t> failing;
        for (std::size_t k = 0; k < merged.size(); ++k)
            if (tail_bound_applies(merged[k]) && !poonen_criterion(merged[k], q)) failing.push_back(k);
        bool stated_fails = std::find(failing.begin(), failing.end(), sum.merged_map) != failing.end();
        sum.merged_ok = sum.merged_ok && v.kind == Disposition::Contradiction && stated_fails;
        sum.merged_failing_maps.emplace_back(q, failing);
        sum.merged.emplace_back(x, std::move(v));
    }

    // Integral coefficients: fixed points iff 1 - 4c is a square, 2-cycles iff
    // -3 - 4c is a square, and no 3-cycles.
    sum.integral_bound = opt.integral_bound;
    sum.integral_ok = true;
    for (int c = -opt.integral_bound; c <= opt.integral_bound; ++c) {
        QuadMap f{Rat(c)};
        bool fixed = is_square_int(Int(1 - 4 * c));
        bool two = is_square_int(Int(-3 - 4 * c));
        bool ok = fixed == !periodic_points(f, 1).empty() && two == !periodic_points(f, 2).empty() &&
                  periodic_points(f, 3).empty();
        sum.integral_ok = sum.integral_ok && ok;
    }
    // An integral surviving triple would contradict the integral corollary.
    for (const auto& [cs, ps] : sum.survivors)
        if (std::all_of(cs.begin(), cs.end(), [](const Rat& r) { return r.is_integer(); })) sum.integral_ok = false;
    {
        OrbitResult r = monoid_orbit(MapSet({Rat(-2), Rat(-3)}), Rat(2));
        sum.sharp_ok = r.finite();
    }

    bool cases_ok = std::all_of(sum.cases.begin(), sum.cases.end(), [](const CaseReport& c) { return c.ok; });
    sum.pass = cases_ok && sum.case_split_ok && (!opt.verify_lemmas || sum.lemmas_ok) && sum.survivors_match &&
               sum.triples_match && sum.merged_ok && sum.integral_ok && sum.sharp_ok;
    sum.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return sum;
}

}  // namespace quadorbit
