#include "cli.hpp"

#include "quadorbit/dynamics.hpp"
#include "quadorbit/families.hpp"
#include "quadorbit/report.hpp"
#include "quadorbit/search.hpp"
#include "quadorbit/verifier.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace quadorbit::cli {

namespace {

std::vector<Rat> parse_list(const std::string& text) {
    std::vector<Rat> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto b = item.find_first_not_of(" \t");
        auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos) throw std::invalid_argument("empty entry in map list '" + text + "'");
        out.push_back(Rat::parse(item.substr(b, e - b + 1)));
    }
    if (out.empty()) throw std::invalid_argument("empty map list");
    return out;
}

std::string join(const std::vector<Rat>& v, const char* sep = " ") {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i].str();
    return s;
}

std::string pair_list(const std::vector<std::pair<Rat, Rat>>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + ("(" + v[i].first.str() + ", " + v[i].second.str() + ")");
    return s.empty() ? "none" : s;
}

const char* yes(bool b) { return b ? "yes" : "NO"; }

void text_orbit(std::ostream& out, const MapSet& s, const Rat& p, const OrbitResult& r) {
    out << "maps " << s.str() << ", point " << p << "\n";
    if (r.finite()) {
        const auto& o = r.orbit();
        out << "finite orbit of size " << o.points.size() << ": " << join(o.points) << "\n";
        for (std::size_t i = 0; i < o.points.size(); ++i) out << "  " << o.points[i] << " = " << word_str(o.words[i]) << "(P)\n";
    } else {
        const auto& e = r.infinite();
        out << "infinite orbit: " << word_str(e.word) << "(P) = " << e.witness << " trips " << to_string(e.reason)
            << " for f" << e.map_index + 1 << "\n";
    }
}

void text_preperiodic(std::ostream& out, const Rat& c, const Rat& x, const PreperiodicityReport& r) {
    out << "x^2 + " << c << ", point " << x << "\n";
    if (r.preperiodic) {
        out << "preperiodic: tail " << r.tail << ", cycle of length " << r.cycle << ": " << join(r.cycle_points) << "\n";
    } else {
        out << "not preperiodic: iterate " << r.witness_step << " = " << r.witness << " trips "
            << (r.reason ? to_string(*r.reason) : "?") << "\n";
    }
}

void text_lemma(std::ostream& out, const LemmaReport& r) {
    out << "lemma " << r.id << " (" << to_string(r.route) << " route, variables " << r.v1 << ", " << r.v2 << ")\n";
    out << "  eliminant degree " << r.eliminant_degree << ", rational roots: " << join(r.eliminant_roots) << "\n";
    out << "  candidate " << r.v2 << " values: " << join(r.candidate_values) << " (expected " << join(r.expected_candidates)
        << ")\n";
    if (r.expected_v1_values)
        out << "  " << r.v1 << " values: " << join(r.v1_values) << " (expected " << join(*r.expected_v1_values) << ")\n";
    for (const auto& c : r.components)
        out << "  component " << c.poly.str() << ": " << c.kind << (c.family.empty() ? "" : " " + c.family)
            << (c.ok ? "" : " [NOT OK]") << "\n";
    if (r.families.empty() && r.sporadic.empty()) {
        out << "  no finite orbit points\n";
    } else {
        out << "  families:";
        for (const auto& f : r.families) out << " " << f;
        out << "\n  sporadic pairs: " << pair_list(r.sporadic) << "\n";
    }
    if (!r.degenerate.empty()) out << "  degenerate pairs: " << pair_list(r.degenerate) << "\n";
    if (r.groebner) {
        const auto& g = *r.groebner;
        out << "  groebner: " << (g.completed ? "completed" : "stopped (" + g.note + ")") << ", basis "
            << g.basis_size << ", pairs " << g.pairs_processed;
        if (g.quotient_found)
            out << ", quotient degree " << g.quotient_degree << " (squarefree " << g.quotient_squarefree_degree
                << ", expected " << g.expected_degree << "), membership " << yes(g.membership) << ", consistent "
                << yes(g.consistent);
        out << "\n";
    }
    for (const auto& n : r.notes) out << "  note: " << n << "\n";
    for (Axiom a : r.axioms) out << "  axiom " << axiom_name(a) << ": " << axiom_citation(a) << "\n";
    out << (r.pass ? "PASS" : "FAIL") << " (" << r.seconds << " s)\n";
}

void text_case(std::ostream& out, const CaseReport& c) {
    out << "case " << c.number << ": " << c.description << "\n";
    for (const auto& s : c.subcases) {
        out << "  " << s.id << " [" << s.kind << "] " << s.left << " / " << s.right << ": "
            << (s.ok ? "ok" : "NOT OK");
        if (!s.survivors.empty()) out << ", " << s.survivors.size() << " surviving tuple(s)";
        out << "\n";
        for (const auto& f : s.flags) out << "    flag: " << f << "\n";
    }
    out << "  coverage " << yes(c.coverage_ok) << "\n";
    out << (c.ok ? "PASS" : "FAIL") << " (" << c.seconds << " s)\n";
}

void text_theorem(std::ostream& out, const TheoremSummary& s) {
    for (const auto& c : s.cases) {
        std::size_t flags = 0;
        for (const auto& sc : c.subcases) flags += sc.flags.size();
        out << "case " << c.number << ": " << (c.ok ? "ok" : "NOT OK") << ", " << c.subcases.size() << " subcases, "
            << flags << " flag(s)\n";
    }
    for (const auto& l : s.lemmas) out << "lemma " << l.id << ": " << (l.pass ? "ok" : "NOT OK") << "\n";
    out << "case split covers all cycle types: " << yes(s.case_split_ok) << "\n";
    for (const auto& [cs, ps] : s.survivors) out << "surviving triple " << join(cs, ", ") << " with P in " << join(ps) << "\n";
    out << "survivors match the stated triples: " << yes(s.survivors_match) << "\n";
    out << "stated triples have the stated basepoints: " << yes(s.triples_match) << "\n";
    out << "four maps " << join(s.merged_cs, ", ") << " admit no finite orbit point: " << yes(s.merged_ok) << "\n";
    out << "integral coefficients (|c| <= " << s.integral_bound << "): " << yes(s.integral_ok) << ", sharpness "
        << yes(s.sharp_ok) << "\n";
    out << (s.pass ? "PASS" : "FAIL") << " (" << s.seconds << " s)\n";
}

void text_family(std::ostream& out, const FamilyCheck& c) {
    const FamilyDef& f = *c.family;
    out << "family " << f.id << " (lemma " << f.lemma << ", parameter " << f.parameter << ")\n";
    out << "  maps:";
    for (const auto& m : f.map_text) out << " " << m << ";";
    out << "\n  basepoint: " << f.basepoint_text << "\n";
    out << "  stable set closed in Q(" << f.parameter << "): " << yes(c.symbolic.ok) << "\n";
    for (const auto& s : c.symbolic.failures) out << "    " << s << "\n";
    std::size_t finite = 0;
    for (const auto& [t, fin] : c.specializations) finite += fin;
    out << "  specializations with finite orbit: " << finite << "/" << c.specializations.size() << "\n";
    out << (c.ok() ? "PASS" : "FAIL") << "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite orbits of sets of maps x^2 + c over the rationals", "quadorbit"};
    app.require_subcommand(1);
    std::string format = "text";
    unsigned workers = 1;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--workers", workers, "Worker threads (verify theorem, search)")->check(CLI::Range(1u, 256u));

    auto sub = [&](CLI::App* parent, const char* name, const char* help) {
        auto* s = parent->add_subcommand(name, help);
        s->fallthrough();
        return s;
    };

    std::string maps, point, c, id, route = "resultant", spec_path;
    int n = 0, case_no = 0;
    double budget = 600;
    bool skip_lemmas = false;
    std::size_t specializations = 20;

    auto* orbit = sub(&app, "orbit", "Orbit of a point under the monoid generated by the maps");
    orbit->add_option("--maps", maps, "Comma-separated c values")->required();
    orbit->add_option("--point", point, "Basepoint p/q")->required();

    auto* prep = sub(&app, "preperiodic", "Decide preperiodicity of a point under one map");
    prep->add_option("--c", c, "c as p/q")->required();
    prep->add_option("--point", point, "Point p/q")->required();

    auto* mu = sub(&app, "mu", "Largest exact rational period over the maps");
    mu->add_option("--maps", maps, "Comma-separated c values")->required();

    auto* periodic = sub(&app, "periodic", "Rational points of exact period n");
    periodic->add_option("--c", c, "c as p/q")->required();
    periodic->add_option("--n", n, "Period (1, 2 or 3)")->required()->check(CLI::IsMember({1, 2, 3}));

    auto* verify = sub(&app, "verify", "Re-verify a lemma or the three-map classification");
    verify->require_subcommand(1);
    auto* vlemma = sub(verify, "lemma", "Re-verify a two-map lemma");
    vlemma->add_option("--id", id, "Lemma id (2.1 .. 2.6)")->required();
    vlemma->add_option("--route", route, "Elimination route")->check(CLI::IsMember({"resultant", "groebner"}));
    vlemma->add_option("--budget-seconds", budget, "Time budget for the Groebner route")->check(CLI::PositiveNumber);
    auto* vthm = sub(verify, "theorem", "Re-verify the three-map classification");
    vthm->add_option("--case", case_no, "Only this case (1 .. 10)")->check(CLI::Range(1, 10));
    vthm->add_flag("--skip-lemmas", skip_lemmas, "Do not re-run the two-map lemmas");

    auto* family = sub(&app, "family", "Catalog families");
    family->require_subcommand(1);
    auto* fverify = sub(family, "verify", "Check a family symbolically and at specializations");
    fverify->add_option("--id", id, "Family id, e.g. F-11b")->required();
    fverify->add_option("--specializations", specializations, "Random admissible specializations");

    auto* search_cmd = sub(&app, "search", "Exhaustive search over a grid of c values");
    search_cmd->add_option("--spec", spec_path, "JSON search specification")->required();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? Pass : Usage;
    }
    const bool json = format == "json";

    try {
        if (orbit->parsed()) {
            MapSet s(parse_list(maps));
            Rat p = Rat::parse(point);
            OrbitResult r = monoid_orbit(s, p);
            if (json)
                out << orbit_report(s, p, r) << "\n";
            else
                text_orbit(out, s, p, r);
            return r.finite() ? Pass : Fail;
        }
        if (prep->parsed()) {
            Rat cv = Rat::parse(c), x = Rat::parse(point);
            PreperiodicityReport r = is_preperiodic(QuadMap{cv}, x);
            if (json)
                out << preperiodic_report(cv, x, r) << "\n";
            else
                text_preperiodic(out, cv, x, r);
            return r.preperiodic ? Pass : Fail;
        }
        if (mu->parsed()) {
            MapSet s(parse_list(maps));
            MuReport r = mu_set(s);
            bool bound = r.mu <= 3;
            if (json) {
                out << mu_report(s, r) << "\n";
            } else {
                out << "maps " << s.str() << "\nmu = " << r.mu << " (periods 1.." << r.max_period << " checked)\n";
                for (const auto& h : r.hits) out << "  f" << h.map + 1 << ": period " << h.period << " point " << h.point << "\n";
            }
            return bound ? Pass : Fail;
        }
        if (periodic->parsed()) {
            Rat cv = Rat::parse(c);
            auto pts = periodic_points(QuadMap{cv}, n);
            if (json)
                out << periodic_report(cv, n, pts) << "\n";
            else
                out << "x^2 + " << cv << ": " << pts.size() << " rational point(s) of exact period " << n
                    << (pts.empty() ? "" : ": " + join(pts)) << "\n";
            return Pass;
        }
        if (vlemma->parsed()) {
            LemmaOptions opt;
            opt.route = route == "groebner" ? Route::Groebner : Route::Resultant;
            opt.groebner_max_seconds = budget;
            LemmaReport r = verify_lemma(id, opt);
            if (json)
                out << lemma_report(r) << "\n";
            else
                text_lemma(out, r);
            if (r.groebner && !r.groebner->completed) return BudgetExhausted;
            return r.pass ? Pass : Fail;
        }
        if (vthm->parsed()) {
            if (case_no != 0) {
                CaseReport r = verify_theorem_case(case_no);
                if (json)
                    out << case_report(r) << "\n";
                else
                    text_case(out, r);
                return r.ok ? Pass : Fail;
            }
            TheoremOptions opt;
            opt.workers = workers;
            opt.verify_lemmas = !skip_lemmas;
            TheoremSummary s = verify_theorem(opt);
            if (json)
                out << theorem_report(s) << "\n";
            else
                text_theorem(out, s);
            return s.pass ? Pass : Fail;
        }
        if (fverify->parsed()) {
            FamilyCheck fc = family_check(catalog().family(id), specializations);
            if (json)
                out << family_report(fc) << "\n";
            else
                text_family(out, fc);
            return fc.ok() ? Pass : Fail;
        }
        if (search_cmd->parsed()) {
            SearchSpec spec = parse_search_spec(read_file(spec_path));
            if (app.get_option("--workers")->count() > 0) spec.workers = workers;
            SearchResult r = search(spec);
            if (json)
                out << search_report(spec, r) << "\n";
            else
                out << format_hits(r.hits) << r.hits.size() << " hit(s), grid of " << r.grid_size << " values, "
                    << r.seconds << " s\n";
            return Pass;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return Usage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return Usage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return Usage;
    }
    err << app.help();
    return Usage;
}

}  // namespace quadorbit::cli
