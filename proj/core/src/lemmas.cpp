#include "quadorbit/groebner.hpp"
#include "quadorbit/roots.hpp"
#include "quadorbit/variety.hpp"
#include "quadorbit/verifier.hpp"

#include "bifrac.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>
#include <stdexcept>

namespace quadorbit {

namespace {

using detail::BiFrac;
using detail::BiFracContext;
using detail::PoleFactor;

std::vector<Rat> rats(std::initializer_list<const char*> xs) {
    std::vector<Rat> out;
    for (const char* x : xs) out.push_back(Rat::parse(x));
    std::sort(out.begin(), out.end());
    return out;
}

// A chart of a one-dimensional component K: T = t_num/t_den maps K to the
// parameter line, and the tuple (c1, c2, P) restricted to K equals a known
// rational curve evaluated at T.
struct ChartSpec {
    std::string component;
    std::string t_num, t_den = "1";
    /// Family chart: the family's own parametrization is used.
    std::string family;
    /// Condition chart: explicit (c1, c2, P) in the variable t, together with
    /// an orbit expression that must satisfy f^4 = f^2 under `witness_map`.
    std::vector<std::string> tuple;
    std::string witness;
    std::size_t witness_map = 0;
};

struct Built {
    std::vector<std::pair<std::string, FactoredPoly>> generators;
    /// c1, c2, P as fractions in (v1, v2).
    std::vector<BiFrac> tuple;
};

struct LemmaSpec {
    std::string id, v1, v2;
    std::vector<PoleFactor> poles;
    std::vector<Rat> expected_candidates;
    std::optional<std::vector<Rat>> expected_v1;
    std::vector<std::string> families;
    std::string sporadic_source;
    /// Degree of the v2-only factor of the last lex basis element.
    int groebner_degree = 0;
    /// Which map carries P, the exact period P must have there, and the exact
    /// period the other map must admit.
    std::size_t p_map = 0;
    int p_period = 1;
    int other_period = 1;
    std::vector<ChartSpec> charts;
    std::vector<Axiom> axioms;
    std::vector<std::string> notes;
    std::function<Built(const BiFracContext&)> build;
};

// Parametrizations of a map with a rational point of the given period.
const char* kFixedC = "(1 - v^2)/4";
const char* kFixedP = "(1 + v)/2";
const char* kTwoC = "-(3 + v^2)/4";
const char* kTwoP = "(-1 + v)/2";
const char* kThreeC = "-(v^6 + 2*v^5 + 4*v^4 + 8*v^3 + 9*v^2 + 4*v + 1)/(4*v^2*(v + 1)^2)";
const char* kThreeP[3] = {"(v^3 - v - 1)/(2*v*(v + 1))", "(v^3 + 2*v^2 + v + 1)/(2*v*(v + 1))",
                          "-(v^3 + 2*v^2 + 3*v + 1)/(2*v*(v + 1))"};

std::string in_var(std::string s, const std::string& v) {
    for (std::size_t i; (i = s.find('v')) != std::string::npos;) s.replace(i, 1, v);
    return s;
}

BiFrac frac(const BiFracContext& ctx, const std::string& text, const std::string& v) {
    RatFunc r = RatFunc::parse(in_var(text, v), v);
    int which = v == ctx.v1() ? 0 : 1;
    return BiFrac{detail::embed(r.num(), which, ctx), detail::embed(r.den(), which, ctx), &ctx}.reduced();
}

// Nonconstant numerators of the six factors of f^4(x) - f^2(x).
FactoredPoly relation(const BiFrac& x, const BiFrac& c) {
    FactoredPoly out;
    for (const auto& f : detail::preperiodic_factors(c, x)) {
        BiPoly n = f.numerator();
        if (!n.is_constant()) out.factors.push_back(n);
    }
    return out;
}

Built build_fixed_pair(const BiFracContext& ctx, const char* c2_text) {
    BiFrac c1 = frac(ctx, kFixedC, ctx.v1()), p = frac(ctx, kFixedP, ctx.v1());
    BiFrac c2 = frac(ctx, c2_text, ctx.v2());
    BiFrac q = detail::quad(c2, detail::quad(c2, p));
    return {{{"F1: f2^4(P) - f2^2(P)", relation(p, c2)}, {"F2: f1^4(Q) - f1^2(Q), Q = f2(f2(P))", relation(q, c1)}},
            {c1, c2, p}};
}

Built build_two_cycles(const BiFracContext& ctx) {
    BiFrac c1 = frac(ctx, kTwoC, ctx.v1()), p = frac(ctx, kTwoP, ctx.v1());
    BiFrac c2 = frac(ctx, kTwoC, ctx.v2());
    BiFrac q1 = detail::quad(c2, p);
    BiFrac q2 = detail::quad(c1, detail::quad(c2, detail::quad(c1, p)));
    return {{{"N: f2^4(P) - f2^2(P)", relation(p, c2)},
             {"A1: f1^4(Q1) - f1^2(Q1), Q1 = f2(P)", relation(q1, c1)},
             {"A2: f2^4(Q2) - f2^2(Q2), Q2 = f1(f2(f1(P)))", relation(q2, c2)}},
            {c1, c2, p}};
}

Built build_three_cycles(const BiFracContext& ctx) {
    BiFrac c1 = frac(ctx, kThreeC, ctx.v1()), c2 = frac(ctx, kThreeC, ctx.v2());
    BiFrac q1 = frac(ctx, kThreeP[0], ctx.v2());
    FactoredPoly n, a;
    for (const char* pi : kThreeP) {
        BiFrac p = frac(ctx, pi, ctx.v1());
        n.factors.push_back((detail::quad(c1, q1) - p).numerator());
        a.factors.push_back((detail::quad(c1, detail::quad(c2, q1)) - p).numerator());
    }
    return {{{"N: prod_i numer(f1(Q1) - P_i)", n}, {"A: prod_i numer(f1(f2(Q1)) - P_i)", a}}, {c1, c2, q1}};
}

Built build_with_three_cycle(const BiFracContext& ctx, const char* c1_text) {
    BiFrac c1 = frac(ctx, c1_text, ctx.v1());
    BiFrac c2 = frac(ctx, kThreeC, ctx.v2());
    BiFrac q1 = frac(ctx, kThreeP[0], ctx.v2());
    BiFrac q = detail::quad(c2, detail::quad(c2, q1));
    return {{{"N: f1^4(P1) - f1^2(P1)", relation(q1, c1)}, {"A: f1^4(Q) - f1^2(Q), Q = f2(f2(P1))", relation(q, c1)}},
            {c1, c2, q1}};
}

const std::vector<PoleFactor> kThreePoles = {{0, Rat(0)}, {0, Rat(-1)}, {1, Rat(0)}, {1, Rat(-1)}};

const std::vector<LemmaSpec>& specs() {
    static const std::vector<LemmaSpec> all = [] {
        std::vector<LemmaSpec> v;
        {
            LemmaSpec s;
            s.id = "2.1";
            s.v1 = "y";
            s.v2 = "z";
            s.expected_candidates = rats({"1", "-1", "3/2", "-3/2", "2", "-2"});
            s.families = {"F-11a", "F-11b"};
            s.sporadic_source = "2.1";
            s.groebner_degree = 28;
            s.p_period = 1;
            s.other_period = 1;
            s.charts = {
                {"y^2 + 4*y - z^2 + 4", "y", "1", "F-11a", {}, "", 0},
                {"y^2 - z^2 + 4", "y", "z - 2", "F-11b", {}, "", 0},
                {"y^2 + 4*y - z^2 + 8",
                 "y + 2",
                 "z - 2",
                 "",
                 {"(-3*t^4 + 16*t^3 - 10*t^2 - 16*t - 3)/(4*(t^2 - 1)^2)", "(-3*t^4 - 10*t^2 - 3)/(4*(t^2 - 1)^2)",
                  "(-t^2 + 4*t + 1)/(2*(t^2 - 1))"},
                 "f2(P)",
                 0},
            };
            s.axioms = {Axiom::PeriodBound, Axiom::TailBound};
            s.build = [](const BiFracContext& ctx) { return build_fixed_pair(ctx, kFixedC); };
            v.push_back(std::move(s));
        }
        {
            LemmaSpec s;
            s.id = "2.2";
            s.v1 = "y";
            s.v2 = "z";
            s.expected_candidates = rats({"0", "1/2", "-1/2"});
            s.families = {"F-12a", "F-12b"};
            s.sporadic_source = "2.2";
            s.groebner_degree = 30;
            s.p_period = 1;
            s.other_period = 2;
            s.charts = {
                {"y^2 - z^2", "y", "1", "F-12a", {}, "", 0},
                {"y^2 + 4*y - z^2", "y", "z", "F-12b", {}, "", 0},
                {"y^2 + 4*y - z^2 + 4",
                 "y",
                 "1",
                 "",
                 {"(1 - t^2)/4", "(-3 - (t + 2)^2)/4", "(1 + t)/2"},
                 "f2(f1(f2(f1(f2(f2(P))))))",
                 0},
            };
            s.axioms = {Axiom::PeriodBound, Axiom::TailBound};
            s.build = [](const BiFracContext& ctx) { return build_fixed_pair(ctx, kTwoC); };
            v.push_back(std::move(s));
        }
        {
            LemmaSpec s;
            s.id = "2.3";
            s.v1 = "y";
            s.v2 = "z";
            s.expected_candidates = rats({"0", "1", "-1", "2", "-2", "1/2", "-1/2", "3/2", "-3/2"});
            s.families = {"F-22a"};
            s.sporadic_source = "2.3";
            s.groebner_degree = 64;
            s.p_period = 2;
            s.other_period = 2;
            s.expected_v1 = rats({"0", "1", "-1", "2", "-2", "1/2", "-1/2", "3/2", "-3/2", "5/2", "-5/2"});
            s.charts = {{"y^2 - z^2 - 4", "z", "y + 2", "F-22a", {}, "", 0}};
            s.axioms = {Axiom::PeriodBound, Axiom::TailBound};
            s.notes = {"the F-22a curve is parametrized as (y, z) = ((-2t^2 - 2)/(t^2 - 1), -4t/(t^2 - 1)); "
                       "the chart identity is checked by exact division"};
            s.build = build_two_cycles;
            v.push_back(std::move(s));
        }
        {
            LemmaSpec s;
            s.id = "2.4";
            s.v1 = "y";
            s.v2 = "t";
            s.poles = kThreePoles;
            s.expected_candidates = rats({"0", "-1"});
            s.sporadic_source = "2.4";
            s.groebner_degree = 38;
            s.p_map = 1;
            s.p_period = 3;
            s.other_period = 3;
            s.axioms = {Axiom::PeriodBound, Axiom::ThreeCycleEntry};
            s.notes = {"P is taken to be the first point Q1 of the 3-cycle of f2, which lies in every "
                       "preperiodic f2-orbit"};
            s.build = build_three_cycles;
            v.push_back(std::move(s));
        }
        for (int k = 0; k < 2; ++k) {
            LemmaSpec s;
            s.id = k == 0 ? "2.5" : "2.6";
            s.v1 = "y";
            s.v2 = "t";
            s.poles = kThreePoles;
            s.expected_candidates = rats({"1", "-2", "-1/2"});
            s.expected_v1 = k == 0 ? rats({"3/2", "-3/2", "5/2", "-5/2"})
                                   : rats({"1/2", "-1/2", "3/2", "-3/2", "5/2", "-5/2"});
            s.sporadic_source = "2.5";
            s.groebner_degree = 68;
            s.p_map = 1;
            s.p_period = 3;
            s.other_period = k == 0 ? 1 : 2;
            s.axioms = {Axiom::PeriodBound, Axiom::TailBound, Axiom::ThreeCycleEntry};
            s.notes = {"second relation uses Q = f2(f2(P1)), the third point of the 3-cycle"};
            const char* c1 = k == 0 ? kFixedC : kTwoC;
            s.build = [c1](const BiFracContext& ctx) { return build_with_three_cycle(ctx, c1); };
            v.push_back(std::move(s));
        }
        return v;
    }();
    return all;
}

const LemmaSpec& spec(const std::string& id) {
    for (const auto& s : specs())
        if (s.id == id) return s;
    throw std::invalid_argument("unknown lemma id '" + id + "' (expected 2.1 .. 2.6)");
}

bool divisible(const BiPoly& p, const BiPoly& k) {
    if (p.is_zero()) return true;
    try {
        exact_divide(p, k);
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

bool same_curve(const BiPoly& a, const BiPoly& b) {
    if (a.total_degree() != b.total_degree()) return false;
    try {
        return exact_divide(a, b).is_constant();
    } catch (const std::domain_error&) {
        return false;
    }
}

int exact_period(const QuadMap& f, const Rat& x, int max) {
    Rat y = x;
    for (int k = 1; k <= max; ++k) {
        y = f(y);
        if (y == x) return k;
    }
    return 0;
}

bool is_degenerate(const LemmaSpec& s, const std::vector<Rat>& cs, const Rat& p) {
    QuadMap base{cs[s.p_map]}, other{cs[1 - s.p_map]};
    if (exact_period(base, p, s.p_period) != s.p_period) return true;
    return periodic_points(other, s.other_period).empty();
}

std::vector<const FamilyDef*> lemma_families(const LemmaSpec& s) {
    std::vector<const FamilyDef*> out;
    for (const auto& id : s.families) out.push_back(&catalog().family(id));
    return out;
}

PointVerdict dispose_tuple(const LemmaSpec& s, const std::vector<Rat>& cs, const Rat& p) {
    PointVerdict v = dispose_point(cs, p, lemma_families(s));
    if (v.kind == Disposition::Finite) v.degenerate = is_degenerate(s, cs, p);
    return v;
}

LemmaPoint dispose_at(const LemmaSpec& s, const std::vector<BiFrac>& tuple, const Rat& a, const Rat& b) {
    LemmaPoint pt{a, b, {}};
    std::vector<Rat> vals;
    try {
        for (const auto& f : tuple) vals.push_back(f.eval(a, b));
    } catch (const std::domain_error&) {
        pt.verdict.kind = Disposition::Pole;
        pt.verdict.detail = "parametrization has a pole at (" + s.v1 + ", " + s.v2 + ") = (" + a.str() + ", " +
                            b.str() + ")";
        return pt;
    }
    pt.verdict = dispose_tuple(s, {vals[0], vals[1]}, vals[2]);
    return pt;
}

// Rational points of K meeting the curve g = 0.
std::vector<std::pair<Rat, Rat>> meet(const BiPoly& k, const BiPoly& g) {
    std::vector<std::pair<Rat, Rat>> out;
    if (g.is_constant()) return out;
    PlaneSolution sol = solve_plane_cofactors({FactoredPoly{{k}}, FactoredPoly{{g}}});
    for (const auto& c : sol.candidates)
        for (const auto& a : c.v1_values) out.emplace_back(a, c.v2);
    return out;
}

ComponentReport process_component(const LemmaSpec& s, const BiFracContext& ctx, const BiPoly& k,
                                  const std::vector<BiFrac>& tuple) {
    ComponentReport rep;
    rep.poly = k;
    if (divisible((tuple[0] - tuple[1]).numerator(), k)) {
        rep.kind = "equal-maps";
        rep.detail = "c1 - c2 vanishes identically on the component";
        rep.ok = true;
        return rep;
    }
    const ChartSpec* chart = nullptr;
    for (const auto& c : s.charts)
        if (same_curve(k, ctx.parse(c.component))) chart = &c;
    if (!chart) {
        rep.kind = "unhandled";
        rep.detail = "no chart for this component";
        return rep;
    }
    BiFrac t = detail::make_frac(ctx, chart->t_num, chart->t_den);
    rep.chart_map = chart->t_den == "1" ? chart->t_num : "(" + chart->t_num + ")/(" + chart->t_den + ")";

    std::vector<RatFunc> curve;
    std::vector<Rat> chart_poles;
    const FamilyDef* fam = nullptr;
    if (!chart->family.empty()) {
        fam = &catalog().family(chart->family);
        curve = {fam->cs[0], fam->cs[1], fam->basepoint};
        chart_poles = fam->excluded;
        rep.kind = "family";
        rep.family = fam->id;
    } else {
        for (const auto& text : chart->tuple) curve.push_back(RatFunc::parse(text, "t"));
        std::set<Rat> poles;
        for (const auto& f : curve)
            for (const Rat& r : rational_roots(f.den()).values()) poles.insert(r);
        chart_poles.assign(poles.begin(), poles.end());
        rep.kind = "condition";
    }

    rep.chart_verified = true;
    for (std::size_t i = 0; i < 3; ++i)
        if (!divisible((tuple[i] - detail::substitute(curve[i], t)).numerator(), k)) rep.chart_verified = false;

    // Points of K the chart does not reach, or reaches at an excluded value.
    std::set<std::pair<Rat, Rat>> seen;
    auto add_points = [&](const BiPoly& g) {
        for (const auto& [a, b] : meet(k, g))
            if (seen.insert({a, b}).second) rep.exceptional.push_back(dispose_at(s, tuple, a, b));
    };
    add_points(t.den);
    for (const Rat& s0 : chart_poles) add_points(t.num - t.den * s0);

    bool condition_ok = true;
    if (fam) {
        rep.detail = "tuple = " + fam->id + "(T) on the component";
    } else {
        rep.condition = chart->witness;
        rep.condition_map = chart->witness_map;
        RatFunc w = eval_orbit_expr(chart->witness, {curve[0], curve[1]}, curve[2]);
        auto factors = preperiodic_relation_factors(w, curve[chart->witness_map], RatFunc::constant(Rat(1), "t"));
        std::set<Rat> roots;
        for (const auto& f : factors) {
            if (f.is_zero()) {
                condition_ok = false;
                continue;
            }
            for (const Rat& r : rational_roots(f.num()).values()) roots.insert(r);
        }
        rep.condition_roots.assign(roots.begin(), roots.end());
        for (const Rat& r : rep.condition_roots) {
            if (std::binary_search(chart_poles.begin(), chart_poles.end(), r)) continue;
            Rat c1 = curve[0].specialize(r), c2 = curve[1].specialize(r), p = curve[2].specialize(r);
            rep.condition_points.emplace_back(r, dispose_tuple(s, {c1, c2}, p));
        }
        rep.detail = "f" + std::to_string(chart->witness_map + 1) + "^4(W) = f" +
                     std::to_string(chart->witness_map + 1) + "^2(W) for W = " + chart->witness +
                     " holds only at the listed parameter values";
    }
    rep.ok = rep.chart_verified && condition_ok;
    return rep;
}

bool same_set(std::vector<Rat> a, std::vector<Rat> b) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    return a == b;
}

void collect(const PointVerdict& v, std::set<std::pair<Rat, Rat>>& sporadic,
             std::set<std::pair<Rat, Rat>>& degenerate) {
    if (v.kind != Disposition::Finite) return;
    (v.degenerate ? degenerate : sporadic).insert({v.cs[0], v.cs[1]});
}

// Candidate v2 values from a lex basis: roots of the v2-only factor of the
// last element, kept when the cofactors of the generators share a root there.
void groebner_route(const LemmaSpec& s, const std::vector<FactoredPoly>& gens, const PlaneSolution& sol,
                    const LemmaOptions& opt, LemmaReport& rep) {
    GroebnerAttempt att;
    att.expected_degree = s.groebner_degree;
    std::vector<MPoly> polys;
    for (const auto& g : gens) polys.push_back(MPoly::from_bipoly(g.expand()));
    GroebnerBudget budget{opt.groebner_max_pairs, opt.groebner_max_bits, opt.groebner_max_seconds};
    GroebnerResult gb = buchberger(polys, budget);
    att.completed = gb.completed;
    att.note = gb.note;
    att.basis_size = gb.basis.generators.size();
    att.pairs_processed = gb.pairs_processed;
    att.seconds = gb.seconds;
    if (!gb.completed) {
        rep.groebner = att;
        rep.notes.push_back("Groebner route stopped (" + gb.note + "); candidates come from the resultant route");
        return;
    }
    BiPoly last = gb.basis.generators.back().to_bipoly();
    BiPoly prod = BiPoly::constant(Rat(1), s.v1, s.v2);
    for (const auto& c : sol.components) prod = prod * c;
    try {
        BiPoly q = exact_divide(last, prod);
        if (q.degree_v1() == 0) {
            att.quotient_found = true;
            UniPoly qz = q.specialize_v1(Rat(0));
            att.quotient_degree = qz.degree();
            att.quotient_squarefree_degree = squarefree_part(qz).degree();
            att.quotient_roots = rational_roots(qz).values();
            att.membership = normal_form(MPoly::from_bipoly(q * prod), gb.basis).is_zero();
        }
    } catch (const std::domain_error&) {
    }
    if (!att.quotient_found) {
        rep.groebner = att;
        rep.notes.push_back("last Groebner basis element is not a v2-only multiple of the components; "
                            "candidates come from the resultant route");
        return;
    }

    // Back-substitution through the cofactors.
    BiPoly g;
    std::vector<BiPoly> expanded;
    for (const auto& f : gens) expanded.push_back(f.expand());
    g = expanded[0];
    for (std::size_t i = 1; i < expanded.size(); ++i) g = gcd(g, expanded[i]);
    std::vector<BiPoly> cof;
    for (const auto& e : expanded) cof.push_back(exact_divide(e, g));
    std::vector<Rat> cands;
    for (const Rat& z : att.quotient_roots) {
        UniPoly h = cof[0].specialize_v2(z);
        for (std::size_t i = 1; i < cof.size(); ++i) h = gcd(h, cof[i].specialize_v2(z));
        if (!h.is_zero() && h.degree() < 1) continue;
        cands.push_back(z);
    }
    std::vector<Rat> resultant_cands = sol.candidate_values();
    att.consistent = same_set(cands, resultant_cands);
    for (const Rat& r : att.quotient_roots)
        if (!std::binary_search(sol.eliminant_roots.begin(), sol.eliminant_roots.end(), r)) att.consistent = false;
    rep.groebner = att;
    rep.candidate_values = cands;
}

}  // namespace

const std::vector<std::string>& lemma_ids() {
    static const std::vector<std::string> ids = {"2.1", "2.2", "2.3", "2.4", "2.5", "2.6"};
    return ids;
}

LemmaReport verify_lemma(const std::string& id, const LemmaOptions& opt) {
    auto t0 = std::chrono::steady_clock::now();
    const LemmaSpec& s = spec(id);
    BiFracContext ctx(s.v1, s.v2, s.poles);
    Built b = s.build(ctx);

    LemmaReport rep;
    rep.id = s.id;
    rep.route = opt.route;
    rep.v1 = s.v1;
    rep.v2 = s.v2;
    rep.notes = s.notes;
    rep.axioms = s.axioms;
    std::vector<FactoredPoly> gens;
    for (const auto& [name, f] : b.generators) {
        rep.generators.emplace_back(name, f.expand().total_degree());
        gens.push_back(f);
    }

    PlaneSolution sol = solve_plane_cofactors(gens);
    rep.eliminant_degree = sol.eliminant_degree;
    rep.eliminant_roots = sol.eliminant_roots;
    rep.candidate_values = sol.candidate_values();
    if (opt.route == Route::Groebner) groebner_route(s, gens, sol, opt, rep);

    // Back-substitution through the full generators, so points of the
    // components lying over a candidate are examined as well.
    std::vector<BiPoly> expanded;
    for (const auto& f : gens) expanded.push_back(f.expand());
    std::set<std::pair<Rat, Rat>> sporadic, degenerate, on_components;
    std::set<Rat> v1_union;
    for (const Rat& z : rep.candidate_values) {
        LemmaCandidate cand;
        cand.v2 = z;
        UniPoly h = expanded[0].specialize_v2(z);
        for (std::size_t i = 1; i < expanded.size(); ++i) h = gcd(h, expanded[i].specialize_v2(z));
        if (!h.is_zero()) cand.v1_values = rational_roots(h).values();
        for (const Rat& a : cand.v1_values) {
            v1_union.insert(a);
            cand.points.push_back(dispose_at(s, b.tuple, a, z));
            const PointVerdict& v = cand.points.back().verdict;
            collect(v, sporadic, degenerate);
            if (v.kind == Disposition::FamilyMember) on_components.insert({v.cs[0], v.cs[1]});
        }
        rep.candidates.push_back(std::move(cand));
    }
    rep.v1_values.assign(v1_union.begin(), v1_union.end());

    std::set<std::string> fams;
    rep.components_ok = true;
    for (const auto& k : sol.components) {
        ComponentReport cr = process_component(s, ctx, k, b.tuple);
        if (!cr.ok) rep.components_ok = false;
        if (cr.kind == "family" && cr.chart_verified) fams.insert(cr.family);
        for (const auto& pt : cr.exceptional) collect(pt.verdict, sporadic, degenerate);
        for (const auto& [r, v] : cr.condition_points) collect(v, sporadic, degenerate);
        rep.components.push_back(std::move(cr));
    }
    rep.families.assign(fams.begin(), fams.end());
    rep.expected_families = s.families;
    std::sort(rep.expected_families.begin(), rep.expected_families.end());
    rep.sporadic.assign(sporadic.begin(), sporadic.end());
    rep.degenerate.assign(degenerate.begin(), degenerate.end());
    for (const auto& t : catalog().sporadic_from(s.sporadic_source)) rep.expected_sporadic.emplace_back(t.cs[0], t.cs[1]);
    std::sort(rep.expected_sporadic.begin(), rep.expected_sporadic.end());

    rep.expected_candidates = s.expected_candidates;
    rep.expected_v1_values = s.expected_v1;
    rep.candidates_match = same_set(rep.candidate_values, rep.expected_candidates);
    rep.v1_values_match = !s.expected_v1 || same_set(rep.v1_values, *s.expected_v1);
    rep.families_match = rep.families == rep.expected_families;
    // Every non-degenerate survivor is stated, and every stated pair survives
    // (possibly at a point where the hypotheses degenerate).
    std::set<std::pair<Rat, Rat>> all = sporadic;
    all.insert(degenerate.begin(), degenerate.end());
    std::set<std::pair<Rat, Rat>> expected(rep.expected_sporadic.begin(), rep.expected_sporadic.end());
    for (const auto& pr : expected) {
        if (all.count(pr) || !on_components.count(pr)) continue;
        all.insert(pr);
        rep.notes.push_back("stated pair (" + pr.first.str() + ", " + pr.second.str() +
                            ") lies over a candidate and is also a member of a listed family");
    }
    rep.sporadic_match = std::includes(expected.begin(), expected.end(), sporadic.begin(), sporadic.end()) &&
                         std::includes(all.begin(), all.end(), expected.begin(), expected.end());
    rep.pass = rep.candidates_match && rep.v1_values_match && rep.families_match && rep.sporadic_match &&
               rep.components_ok;
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

}  // namespace quadorbit
