#include "quadorbit/report.hpp"

#include "json.hpp"

#include <algorithm>
#include <stdexcept>

namespace quadorbit {

namespace {

using nlohmann::ordered_json;
using J = ordered_json;

J rat(const Rat& r) { return r.str(); }

J rats(const std::vector<Rat>& v) {
    J a = J::array();
    for (const Rat& r : v) a.push_back(rat(r));
    return a;
}

J pairs(const std::vector<std::pair<Rat, Rat>>& v) {
    J a = J::array();
    for (const auto& [x, y] : v) a.push_back(J::array({rat(x), rat(y)}));
    return a;
}

J word(const Word& w) {
    J a = J::array();
    for (int k : w) a.push_back(k + 1);
    return a;
}

J strings(const std::vector<std::string>& v) { return J(v); }

J axioms(const std::vector<Axiom>& v) {
    J a = J::array();
    for (Axiom x : v) a.push_back({{"name", axiom_name(x)}, {"citation", axiom_citation(x)}});
    return a;
}

J witness(const PoonenWitness& w) {
    return {{"word", word(w.word)},
            {"q", rat(w.q)},
            {"map", w.map + 1},
            {"f2", rat(w.f2)},
            {"f4", rat(w.f4)},
            {"text", w.str()}};
}

J escape(const InfiniteOrbit& e) {
    return {{"witness", rat(e.witness)},
            {"map", e.map_index + 1},
            {"reason", to_string(e.reason)},
            {"word", word(e.word)}};
}

J verdict(const PointVerdict& v) {
    J j = {{"kind", to_string(v.kind)}, {"cs", rats(v.cs)}, {"p", rat(v.p)}, {"detail", v.detail}};
    if (v.kind == Disposition::FamilyMember) {
        j["family"] = v.family;
        j["parameter"] = rat(v.family_param);
    }
    if (v.kind == Disposition::Finite) {
        j["orbit"] = rats(v.orbit);
        j["degenerate"] = v.degenerate;
    }
    if (v.escape) j["escape"] = escape(*v.escape);
    if (v.witness) j["witness"] = witness(*v.witness);
    return j;
}

J lemma_json(const LemmaReport& r) {
    J gens = J::array();
    for (const auto& [name, deg] : r.generators) gens.push_back({{"name", name}, {"degree", deg}});
    J comps = J::array();
    for (const auto& c : r.components) {
        J pts = J::array();
        for (const auto& [t, v] : c.condition_points) pts.push_back({{"parameter", rat(t)}, {"verdict", verdict(v)}});
        J exc = J::array();
        for (const auto& p : c.exceptional)
            exc.push_back({{r.v1, rat(p.v1)}, {r.v2, rat(p.v2)}, {"verdict", verdict(p.verdict)}});
        comps.push_back({{"poly", c.poly.str()},
                         {"kind", c.kind},
                         {"detail", c.detail},
                         {"chart_map", c.chart_map},
                         {"chart_verified", c.chart_verified},
                         {"family", c.family},
                         {"condition", c.condition},
                         {"condition_map", c.condition_map + 1},
                         {"condition_roots", rats(c.condition_roots)},
                         {"condition_points", pts},
                         {"exceptional", exc},
                         {"ok", c.ok}});
    }
    J cands = J::array();
    for (const auto& c : r.candidates) {
        J pts = J::array();
        for (const auto& p : c.points) pts.push_back({{r.v1, rat(p.v1)}, {"verdict", verdict(p.verdict)}});
        cands.push_back({{r.v2, rat(c.v2)}, {r.v1 + "_values", rats(c.v1_values)}, {"points", pts}});
    }
    J j = {{"id", r.id},
           {"route", to_string(r.route)},
           {"variables", {r.v1, r.v2}},
           {"generators", gens},
           {"components", comps},
           {"eliminant_degree", r.eliminant_degree},
           {"eliminant_roots", rats(r.eliminant_roots)},
           {"candidates", cands},
           {"candidate_values", rats(r.candidate_values)},
           {"expected_candidates", rats(r.expected_candidates)},
           {"v1_values", rats(r.v1_values)}};
    j["expected_v1_values"] = r.expected_v1_values ? rats(*r.expected_v1_values) : J(nullptr);
    j["families"] = strings(r.families);
    j["expected_families"] = strings(r.expected_families);
    j["sporadic"] = pairs(r.sporadic);
    j["expected_sporadic"] = pairs(r.expected_sporadic);
    j["degenerate"] = pairs(r.degenerate);
    j["finite_orbit_points"] = !r.sporadic.empty() || !r.families.empty();
    if (r.groebner) {
        const auto& g = *r.groebner;
        j["groebner"] = {{"completed", g.completed},
                         {"note", g.note},
                         {"basis_size", g.basis_size},
                         {"pairs_processed", g.pairs_processed},
                         {"quotient_found", g.quotient_found},
                         {"quotient_degree", g.quotient_degree},
                         {"quotient_squarefree_degree", g.quotient_squarefree_degree},
                         {"expected_degree", g.expected_degree},
                         {"quotient_roots", rats(g.quotient_roots)},
                         {"consistent", g.consistent},
                         {"membership", g.membership},
                         {"seconds", g.seconds}};
    } else {
        j["groebner"] = nullptr;
    }
    j["notes"] = strings(r.notes);
    j["axioms"] = axioms(r.axioms);
    j["checks"] = {{"candidates_match", r.candidates_match},
                   {"v1_values_match", r.v1_values_match},
                   {"families_match", r.families_match},
                   {"sporadic_match", r.sporadic_match},
                   {"components_ok", r.components_ok}};
    j["pass"] = r.pass;
    j["seconds"] = r.seconds;
    return j;
}

J subcase_json(const SubcaseReport& s) {
    J pts = J::array();
    for (const auto& v : s.points) pts.push_back(verdict(v));
    J surv = J::array();
    for (const auto& v : s.survivors) surv.push_back(verdict(v));
    J j = {{"id", s.id},
           {"kind", s.kind},
           {"left", s.left},
           {"right", s.right},
           {"deductions", strings(s.deductions)},
           {"relations_exhaustive", s.relations_exhaustive},
           {"constraint_roots", rats(s.constraint_roots)},
           {"witness_word", s.witness_word},
           {"witness_map", s.witness_word.empty() ? J(nullptr) : J(s.witness_map + 1)},
           {"witness_roots", rats(s.witness_roots)}};
    j["expected_values"] = s.expected_values ? rats(*s.expected_values) : J(nullptr);
    j["values_match"] = s.values_match;
    j["curve_points"] = pairs(s.curve_points);
    j["points"] = pts;
    j["survivors"] = surv;
    j["notes"] = strings(s.notes);
    j["flags"] = strings(s.flags);
    j["ok"] = s.ok;
    return j;
}

J case_json(const CaseReport& c) {
    J subs = J::array();
    std::size_t flags = 0, survivors = 0;
    for (const auto& s : c.subcases) {
        subs.push_back(subcase_json(s));
        flags += s.flags.size();
        survivors += s.survivors.size();
    }
    return {{"case", c.number},
            {"description", c.description},
            {"cycle_types", c.cycle_types},
            {"lemmas", strings(c.lemmas)},
            {"subcase_count", c.subcases.size()},
            {"flag_count", flags},
            {"survivor_count", survivors},
            {"coverage_ok", c.coverage_ok},
            {"axioms", axioms(c.axioms)},
            {"subcases", subs},
            {"ok", c.ok},
            {"seconds", c.seconds}};
}

J tuples(const std::vector<std::pair<std::vector<Rat>, std::vector<Rat>>>& v) {
    J a = J::array();
    for (const auto& [cs, ps] : v) a.push_back({{"cs", rats(cs)}, {"basepoints", rats(ps)}});
    return a;
}

std::string dump(const J& j) { return j.dump(2); }

}  // namespace

std::string orbit_report(const MapSet& s, const Rat& p, const OrbitResult& r) {
    J j = {{"maps", rats(s.cs())}, {"point", rat(p)}};
    if (r.finite()) {
        const auto& o = r.orbit();
        J words = J::array();
        for (const auto& w : o.words) words.push_back(word(w));
        j["verdict"] = "finite";
        j["size"] = o.points.size();
        j["orbit"] = rats(o.points);
        j["words"] = words;
    } else {
        j["verdict"] = "infinite";
        j["escape"] = escape(r.infinite());
    }
    return dump(j);
}

std::string preperiodic_report(const Rat& c, const Rat& x, const PreperiodicityReport& r) {
    J j = {{"c", rat(c)}, {"point", rat(x)}, {"preperiodic", r.preperiodic}};
    if (r.preperiodic) {
        j["tail"] = r.tail;
        j["cycle"] = r.cycle;
        j["cycle_points"] = rats(r.cycle_points);
    } else {
        j["reason"] = r.reason ? to_string(*r.reason) : "";
        j["witness"] = rat(r.witness);
        j["witness_step"] = r.witness_step;
    }
    return dump(j);
}

std::string mu_report(const MapSet& s, const MuReport& r) {
    J hits = J::array();
    bool beyond = false;
    for (const auto& h : r.hits) {
        hits.push_back({{"map", h.map + 1}, {"period", h.period}, {"point", rat(h.point)}});
        beyond = beyond || h.period > 3;
    }
    return dump({{"maps", rats(s.cs())},
                 {"mu", r.mu},
                 {"max_period_checked", r.max_period},
                 {"period_bound_holds", !beyond},
                 {"hits", hits}});
}

std::string periodic_report(const Rat& c, int n, const std::vector<Rat>& points) {
    return dump({{"c", rat(c)}, {"n", n}, {"points", rats(points)}});
}

std::string lemma_report(const LemmaReport& r) { return dump(lemma_json(r)); }

std::string case_report(const CaseReport& r) { return dump(case_json(r)); }

std::string theorem_report(const TheoremSummary& s) {
    J cases = J::array();
    std::size_t pass = 0, subcases = 0, flags = 0;
    for (const auto& c : s.cases) {
        cases.push_back(case_json(c));
        pass += c.ok;
        subcases += c.subcases.size();
        for (const auto& sc : c.subcases) flags += sc.flags.size();
    }
    J lemmas = J::array();
    std::size_t lemma_pass = 0;
    for (const auto& l : s.lemmas) {
        lemmas.push_back(lemma_json(l));
        lemma_pass += l.pass;
    }
    J merged = J::array();
    for (std::size_t i = 0; i < s.merged.size(); ++i) {
        J failing = J::array();
        for (std::size_t k : s.merged_failing_maps[i].second) failing.push_back(k + 1);
        merged.push_back({{"p", rat(s.merged[i].first)},
                          {"q", rat(s.merged_failing_maps[i].first)},
                          {"failing_maps", failing},
                          {"verdict", verdict(s.merged[i].second)}});
    }
    J j = {{"summary",
            {{"cases", s.cases.size()},
             {"cases_pass", pass},
             {"cases_fail", s.cases.size() - pass},
             {"subcases", subcases},
             {"flags", flags},
             {"lemmas", s.lemmas.size()},
             {"lemmas_pass", lemma_pass},
             {"lemmas_fail", s.lemmas.size() - lemma_pass}}},
           {"case_split_ok", s.case_split_ok},
           {"lemmas_ok", s.lemmas_ok},
           {"survivors", tuples(s.survivors)},
           {"triples", tuples(s.triples)},
           {"survivors_match", s.survivors_match},
           {"triples_match", s.triples_match},
           {"merged",
            {{"cs", rats(s.merged_cs)},
             {"word", s.merged_word},
             {"map", s.merged_map + 1},
             {"points", merged},
             {"ok", s.merged_ok}}},
           {"integral", {{"bound", s.integral_bound}, {"ok", s.integral_ok}, {"sharp_ok", s.sharp_ok}}},
           {"cases_detail", cases},
           {"lemmas_detail", lemmas},
           {"pass", s.pass},
           {"seconds", s.seconds}};
    return dump(j);
}

std::string family_report(const FamilyCheck& c) {
    if (!c.family) throw std::invalid_argument("family report without a family");
    const FamilyDef& f = *c.family;
    J specs = J::array();
    for (const auto& [t, fin] : c.specializations) {
        specs.push_back({{"parameter", rat(t)}, {"finite", fin}});
    }
    J j = {{"id", f.id},
           {"lemma", f.lemma},
           {"parameter", f.parameter},
           {"maps", f.map_text},
           {"basepoint", f.basepoint_text},
           {"stable_set", f.stable_text},
           {"cycle_types", f.cycle_types},
           {"excluded", rats(f.excluded)},
           {"symbolic_ok", c.symbolic.ok},
           {"failures", c.symbolic.failures},
           {"specializations", specs},
           {"pass", c.ok()}};
    return dump(j);
}

std::string search_report(const SearchSpec& spec, const SearchResult& r) {
    J hits = J::array();
    for (const auto& h : r.hits) hits.push_back({{"cs", rats(h.cs)}, {"basepoints", rats(h.basepoints)}});
    J dens = J::array();
    for (const Int& d : spec.denominators) dens.push_back(d.get_str());
    return dump({{"spec",
                  {{"denominators", dens},
                   {"numerator_bound", spec.numerator_bound.get_str()},
                   {"extra", rats(spec.extra)},
                   {"set_size", spec.set_size}}},
                 {"grid_size", r.grid_size},
                 {"sets_examined", r.sets_examined},
                 {"hits", hits},
                 {"seconds", r.seconds}});
}

bool verify_orbit_report(const std::string& json_text) {
    J j;
    try {
        j = J::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed orbit report: ") + e.what());
    }
    try {
        std::vector<Rat> cs;
        for (const auto& c : j.at("maps")) cs.push_back(Rat::parse(c.get<std::string>()));
        MapSet s(cs);
        Rat p = Rat::parse(j.at("point").get<std::string>());
        auto read_word = [&](const J& a) {
            Word w;
            for (const auto& k : a) {
                int i = k.get<int>();
                if (i < 1 || static_cast<std::size_t>(i) > s.size()) throw std::invalid_argument("map index out of range");
                w.push_back(i - 1);
            }
            return w;
        };
        const std::string v = j.at("verdict").get<std::string>();
        if (v == "finite") {
            std::vector<Rat> pts;
            for (const auto& x : j.at("orbit")) pts.push_back(Rat::parse(x.get<std::string>()));
            const J& words = j.at("words");
            if (words.size() != pts.size() || j.at("size").get<std::size_t>() != pts.size()) return false;
            if (std::find(pts.begin(), pts.end(), p) == pts.end()) return false;
            for (std::size_t i = 0; i < pts.size(); ++i)
                if (apply_word(s, read_word(words[i]), p) != pts[i]) return false;
            return is_stable_set(s, pts);
        }
        if (v == "infinite") {
            const J& e = j.at("escape");
            Word w = read_word(e.at("word"));
            Rat x = Rat::parse(e.at("witness").get<std::string>());
            std::size_t k = e.at("map").get<std::size_t>();
            if (k < 1 || k > s.size() || apply_word(s, w, p) != x) return false;
            auto g = guard_violation(s[k - 1].c, x);
            return g && to_string(*g) == e.at("reason").get<std::string>();
        }
        throw std::invalid_argument("unknown verdict '" + v + "'");
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed orbit report: ") + e.what());
    }
}

}  // namespace quadorbit
