#include "quadorbit/elliptic.hpp"
#include "quadorbit/roots.hpp"
#include "quadorbit/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <stdexcept>

namespace quadorbit {

namespace {

std::vector<Rat> rats(std::initializer_list<const char*> xs) {
    std::vector<Rat> out;
    for (const char* x : xs) out.push_back(Rat::parse(x));
    std::sort(out.begin(), out.end());
    return out;
}

RatFunc relabel(const RatFunc& f, const std::string& v) {
    return RatFunc(f.num().relabeled(v), f.den().relabeled(v));
}

// One conclusion of a two-map lemma about (phi_1, phi_k, P): a family, or a
// list of sporadic (c1, ck) pairs with P left free.
struct Option {
    const FamilyDef* fam = nullptr;
    std::vector<std::pair<Rat, Rat>> pairs;
};

// A component of "equal basepoints" solved for one parameter in terms of the
// other.
struct Relation {
    bool solve_left;
    std::string expr;
};

struct StatedWitness {
    std::string word;
    std::size_t map;
};

struct SubcaseDef {
    std::string id;
    int left;
    std::vector<int> right;
    std::vector<Relation> relations;
    bool genus_one = false;
    std::string witness;
    std::size_t witness_map = 0;
    std::vector<StatedWitness> stated;
    std::optional<std::vector<Rat>> expected;
    std::vector<std::string> notes;
};

// A constraint on (c_i, c_j) from a lemma without families.
struct PairConstraint {
    std::size_t i, j;
    std::string lemma;
};

struct CaseDef {
    int number;
    std::vector<int> cycle_types;
    std::string description;
    // Parametric cases: lemma for (phi1, phi2) and for (phi1, phi3).
    std::string left_lemma, right_lemma;
    std::vector<SubcaseDef> subcases;
    // Constraint cases.
    std::vector<PairConstraint> constraints;
    std::vector<std::string> notes;
};

// The subcases for Lemma 2.2's conclusions treat its two sporadic pairs apart.
std::vector<Option> options_of(const std::string& lemma) {
    bool split_sporadic = lemma == "2.2";
    std::vector<Option> out;
    for (const auto& f : catalog().families)
        if (f.lemma == lemma) out.push_back({&f, {}});
    auto pairs = lemma_conclusion_pairs(lemma);
    if (split_sporadic) {
        for (const auto& pr : pairs) out.push_back({nullptr, {pr}});
    } else if (!pairs.empty()) {
        out.push_back({nullptr, pairs});
    }
    return out;
}

std::string option_str(const Option& o, const std::string& var, std::size_t k) {
    std::string ck = "c" + std::to_string(k + 1);
    if (o.fam) return "(c1, " + ck + ", P) in " + o.fam->id + "(" + var + ")";
    std::string s = "(c1, " + ck + ") in {";
    for (std::size_t i = 0; i < o.pairs.size(); ++i)
        s += (i ? ", (" : "(") + o.pairs[i].first.str() + ", " + o.pairs[i].second.str() + ")";
    return s + "}";
}

const std::vector<CaseDef>& case_defs() {
    static const std::vector<CaseDef> defs = [] {
        std::vector<CaseDef> d;
        auto R = [](bool left, const char* e) { return Relation{left, e}; };
        // The words for the mirrored subcases exchange maps 2 and 3.
        d.push_back({1,
                     {1, 1, 1},
                     "every map's orbit of P enters a fixed point",
                     "2.1",
                     "2.1",
                     {
                         {"1.1", 0, {0}, {R(true, "u")}},
                         {"1.2", 0, {1}, {R(true, "4*t/(t^2 - 1)")}, false,
                          "phi2∘phi2∘phi3∘phi1∘phi3∘phi3", 2, {}, rats({"0"})},
                         {"1.3", 0, {2}, {}, false, "", 0, {{"phi3", 0}, {"phi2", 0}},
                          rats({"5/2", "-5/2", "1/2", "-1/2"})},
                         {"1.4", 1, {0}, {R(false, "4*t/(t^2 - 1)")}, false,
                          "phi3∘phi3∘phi2∘phi1∘phi2∘phi2", 1, {}, rats({"0"}),
                          {"witness word is the one for 1.2 with maps 2 and 3 exchanged"}},
                         {"1.5", 1, {1}, {R(false, "t"), R(false, "-1/t")}},
                         {"1.6", 1, {2}, {}, false, "", 0, {}, rats({})},
                         {"1.7", 2, {0}, {}, false, "", 0, {{"phi2", 0}, {"phi3", 0}},
                          rats({"5/2", "-5/2", "1/2", "-1/2"})},
                         {"1.8", 2, {1}, {}, false, "", 0, {}, rats({})},
                         {"1.9", 2, {2}},
                     },
                     {}});
        d.push_back({2,
                     {1, 1, 2},
                     "P enters a fixed point for phi1 and phi2 and a 2-cycle for phi3",
                     "2.1",
                     "2.2",
                     {
                         {"2.1", 0, {0}, {R(false, "y")}, false, "phi1∘phi1∘phi1∘phi2∘phi3", 1, {},
                          rats({"0", "-1", "-1/2"})},
                         {"2.2", 0, {1}, {R(true, "-4*t^2/(t^2 - 1)")}},
                         {"2.3", 0, {2}, {}, false, "", 0, {{"phi1∘phi2∘phi3", 1}}, rats({"3/2", "-3/2"})},
                         {"2.4", 0, {3}, {}, false, "", 0, {{"phi3", 1}, {"phi1∘phi3", 1}},
                          rats({"5/2", "-5/2"})},
                         {"2.5", 1, {0}, {R(false, "4*t/(t^2 - 1)")}},
                         {"2.6", 1, {1}, {}, true},
                         {"2.7", 1, {2}, {}, false, "", 0, {}, rats({"3", "-3", "1/3", "-1/3"})},
                         {"2.8", 1, {3}, {}, false, "", 0, {}, rats({})},
                         {"2.9", 2, {0}, {}, false, "", 0, {{"phi2", 2}}, rats({"5/2", "-5/2", "1/2", "-1/2"})},
                         {"2.10", 2, {1}, {}, false, "", 0, {{"phi3∘phi2", 0}}, rats({"1/3", "-1/3"})},
                         {"2.11", 2, {2, 3}},
                     },
                     {}});
        d.push_back({3, {1, 1, 3}, "P enters a fixed point for phi1 and phi2 and a 3-cycle for phi3", "", "", {},
                     {{0, 2, "2.5"}, {1, 2, "2.5"}}});
        d.push_back({4,
                     {1, 2, 2},
                     "P enters a fixed point for phi1 and a 2-cycle for phi2 and phi3",
                     "2.2",
                     "2.2",
                     {
                         {"4.1", 0, {0}, {R(false, "y")}},
                         {"4.2", 0, {1}, {R(true, "-4*t^2/(t^2 - 1)")}, false, "phi1∘phi1∘phi2∘phi3", 2, {},
                          rats({"0"})},
                         {"4.3", 0, {2}, {}, false, "", 0, {}, rats({"3/2", "-3/2"})},
                         {"4.4", 0, {3}, {}, false, "", 0, {{"phi2∘phi3∘phi2", 2}}, rats({"5/2", "-5/2"})},
                         {"4.5", 1, {0}, {R(false, "-4*t^2/(t^2 - 1)")}, false, "phi1∘phi1∘phi3∘phi2", 1, {},
                          rats({"0"}), {"witness word is the one for 4.2 with maps 2 and 3 exchanged"}},
                         {"4.6", 1, {1}, {R(false, "t"), R(false, "-t")}},
                         {"4.7", 1, {2}, {}, false, "", 0, {}, rats({})},
                         {"4.8", 1, {3}, {}, false, "", 0, {}, rats({})},
                         {"4.9", 2, {0}, {}, false, "", 0, {}, rats({"3/2", "-3/2"})},
                         {"4.10", 2, {1}, {}, false, "", 0, {}, rats({})},
                         {"4.11", 2, {2}},
                         {"4.12", 2, {3}},
                         {"4.13", 3, {0}, {}, false, "", 0, {{"phi3∘phi2∘phi3", 1}}, rats({"5/2", "-5/2"})},
                         {"4.14", 3, {1}, {}, false, "", 0, {}, rats({})},
                         {"4.15", 3, {2}},
                         {"4.16", 3, {3}},
                     },
                     {}});
        d.push_back({5, {1, 3, 3}, "P enters a fixed point for phi1 and a 3-cycle for phi2 and phi3", "", "", {},
                     {{1, 2, "2.4"}}});
        d.push_back({6, {1, 2, 3}, "P enters a fixed point for phi1, a 2-cycle for phi2 and a 3-cycle for phi3", "",
                     "", {}, {{0, 2, "2.5"}, {1, 2, "2.6"}}});
        d.push_back({7,
                     {2, 2, 2},
                     "every map's orbit of P enters a 2-cycle",
                     "2.3",
                     "2.3",
                     {
                         {"7.1", 0, {0}, {R(false, "t"), R(false, "-t")}},
                         {"7.2", 0, {1}, {}, false, "", 0, {}, rats({"0"})},
                         {"7.3", 1, {0}, {}, false, "", 0, {}, rats({"0"})},
                         {"7.4", 1, {1}},
                     },
                     {}});
        d.push_back({8, {3, 3, 3}, "every map's orbit of P enters a 3-cycle", "", "", {}, {{0, 1, "2.4"}}});
        d.push_back({9, {2, 2, 3}, "P enters a 2-cycle for phi1 and phi2 and a 3-cycle for phi3", "", "", {},
                     {{0, 2, "2.6"}, {1, 2, "2.6"}}});
        d.push_back({10, {2, 3, 3}, "P enters a 2-cycle for phi1 and a 3-cycle for phi2 and phi3", "", "", {},
                     {{1, 2, "2.4"}}});
        return d;
    }();
    return defs;
}

// Concrete tuple (c1, c2, c3, P): equal maps, BFS, and for infinite orbits
// the stated witness words before a searched one.
PointVerdict dispose3(const std::vector<Rat>& cs, const Rat& p, const std::vector<StatedWitness>& stated,
                      std::vector<std::string>& notes) {
    PointVerdict v = dispose_point(cs, p);
    if (v.kind != Disposition::Contradiction) return v;
    MapSet s(cs);
    for (const auto& sw : stated) {
        Word w = parse_word(sw.word);
        Rat q = apply_word(s, w, p);
        const QuadMap& f = s[sw.map];
        if (!tail_bound_applies(f) || poonen_criterion(f, q)) continue;
        Rat f2 = f(f(q));
        v.witness = PoonenWitness{w, q, sw.map, f2, f(f(f2))};
        v.detail = v.witness->str() + " (stated word)";
        return v;
    }
    if (!stated.empty())
        notes.push_back("P = " + p.str() + ": no stated word applies; " +
                        (v.witness ? "searched word " + word_str(v.witness->word) : "guard certificate") + " used");
    return v;
}

PointVerdict pole_verdict(const std::string& what) {
    PointVerdict v;
    v.kind = Disposition::Pole;
    v.detail = what;
    return v;
}

struct Tuple {
    std::vector<RatFunc> cs;
    RatFunc p;
};

// Tuple at a parameter value, or nullopt at a pole.
std::optional<std::pair<std::vector<Rat>, Rat>> specialize(const Tuple& t, const Rat& s0) {
    try {
        std::vector<Rat> cs;
        for (const auto& c : t.cs) cs.push_back(c.specialize(s0));
        return std::make_pair(cs, t.p.specialize(s0));
    } catch (const std::domain_error&) {
        return std::nullopt;
    }
}

void record(SubcaseReport& rep, PointVerdict v) {
    if (v.kind == Disposition::Finite) rep.survivors.push_back(v);
    rep.points.push_back(std::move(v));
}

bool certified(const PointVerdict& v) {
    switch (v.kind) {
        case Disposition::Pole:
        case Disposition::EqualMaps:
        case Disposition::Finite:
            return true;
        case Disposition::Contradiction:
            return v.escape.has_value() && (!v.witness || check_witness(MapSet(v.cs), v.p, *v.witness));
        case Disposition::FamilyMember:
            return false;
    }
    return false;
}

void check_expected(SubcaseReport& rep, const std::vector<Rat>& got) {
    if (!rep.expected_values) return;
    std::vector<Rat> a = got, b = *rep.expected_values;
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    rep.values_match = a == b;
    if (!rep.values_match) {
        std::string s = "computed parameter values {";
        for (std::size_t i = 0; i < a.size(); ++i) s += (i ? ", " : "") + a[i].str();
        s += "} differ from the stated {";
        for (std::size_t i = 0; i < b.size(); ++i) s += (i ? ", " : "") + b[i].str();
        rep.flags.push_back(s + "}");
    }
}

// Both sides families: equal basepoints cut out a curve in (left, right).
void family_family(SubcaseReport& rep, const SubcaseDef& def, const FamilyDef& lf, const FamilyDef& rf,
                   const std::string& lv, const std::string& rv) {
    RatFunc pl = relabel(lf.basepoint, lv), pr = relabel(rf.basepoint, rv);
    auto lift = [&](const UniPoly& p, int which) { return BiPoly::from_uni(p, which, lv, rv); };
    BiPoly g = lift(pl.num(), 0) * lift(pr.den(), 1) - lift(pr.num(), 1) * lift(pl.den(), 0);
    rep.deductions.push_back("P(" + lv + ") = P(" + rv + ") <=> " + g.str() + " = 0");

    if (def.genus_one) {
        CurveMap cm = reference_curve_map();
        bool same = false;
        try {
            same = exact_divide(g, cm.curve).is_constant();
        } catch (const std::domain_error&) {
        }
        rep.relations_exhaustive = same;
        rep.deductions.push_back("(" + lv + ", " + rv + ") lies on C: " + cm.curve.str() + " = 0");
        CurvePointsReport pts = curve_rational_points();
        rep.curve_points = pts.points;
        rep.notes.push_back("C(Q) from the rank-zero curve " + reference_curve().str() +
                            ": preimages of its torsion points plus the points with " + rv + " = 0");
        for (const auto& c : pts.certificates) rep.notes.push_back("certificate: " + c);
        for (const auto& [a, b] : pts.points) {
            Tuple lt{{lf.cs[0], lf.cs[1]}, lf.basepoint}, rt{{rf.cs[0], rf.cs[1]}, rf.basepoint};
            auto l = specialize(lt, a);
            auto r = specialize(rt, b);
            if (!l || !r) {
                auto v = pole_verdict("(" + lv + ", " + rv + ") = (" + a.str() + ", " + b.str() +
                                      ") is a pole of a parametrization");
                record(rep, v);
                continue;
            }
            std::vector<std::string> unused;
            record(rep, dispose3({l->first[0], l->first[1], r->first[1]}, l->second, {}, unused));
        }
        return;
    }

    BiPoly prod = BiPoly::constant(Rat(1), lv, rv);
    std::vector<std::pair<Tuple, std::string>> families;
    for (const auto& rel : def.relations) {
        const std::string& solved = rel.solve_left ? lv : rv;
        const std::string& free = rel.solve_left ? rv : lv;
        RatFunc e = RatFunc::parse(rel.expr, free);
        int which = rel.solve_left ? 0 : 1;
        BiPoly k = BiPoly::variable(which, lv, rv) * lift(e.den(), 1 - which) - lift(e.num(), 1 - which);
        prod = prod * k;
        rep.deductions.push_back(solved + " = " + e.str());

        // Tuple in the free parameter.
        auto on = [&](const RatFunc& f, bool is_left) {
            bool sub = is_left == rel.solve_left;
            return sub ? compose(f, e) : relabel(f, free);
        };
        RatFunc c1l = on(lf.cs[0], true), c1r = on(rf.cs[0], false);
        RatFunc pL = on(lf.basepoint, true), pR = on(rf.basepoint, false);
        if (!(pL == pR)) {
            rep.relations_exhaustive = false;
            rep.notes.push_back(solved + " = " + e.str() + " does not equate the basepoints");
        }
        if (!(c1l == c1r)) {
            rep.relations_exhaustive = false;
            rep.notes.push_back(solved + " = " + e.str() + " does not equate c1");
        }
        Tuple t{{c1l, on(lf.cs[1], true), on(rf.cs[1], false)}, pL};
        families.emplace_back(std::move(t), free);
    }
    try {
        BiPoly rest = exact_divide(g, prod);
        if (!rest.is_constant()) {
            rep.relations_exhaustive = false;
            rep.notes.push_back("unexplained factor " + rest.str());
        }
    } catch (const std::domain_error&) {
        rep.relations_exhaustive = false;
        rep.notes.push_back("stated relations do not divide the basepoint equation");
    }

    std::vector<Rat> all_roots;
    for (const auto& [t, free] : families) {
        if (t.cs[1] == t.cs[2]) {
            rep.deductions.push_back("c2 = c3 = " + t.cs[1].str() + " identically in " + free);
            continue;
        }
        rep.deductions.push_back("(c1, c2, c3, P) = (" + t.cs[0].str() + ", " + t.cs[1].str() + ", " +
                                 t.cs[2].str() + ", " + t.p.str() + ")");
        if (def.witness.empty()) {
            rep.relations_exhaustive = false;
            rep.notes.push_back("one-parameter family left without a witness");
            continue;
        }
        rep.witness_word = def.witness;
        rep.witness_map = def.witness_map;
        Word w = parse_word(def.witness);
        RatFunc q = t.p;
        for (int k : w) q = apply_quadmap(t.cs[k], q);
        auto factors = preperiodic_relation_factors(q, t.cs[def.witness_map], RatFunc::constant(Rat(1), free));
        std::set<Rat> roots;
        for (const auto& f : factors) {
            if (f.is_zero()) {
                rep.relations_exhaustive = false;
                rep.notes.push_back("the witness relation vanishes identically");
                continue;
            }
            for (const Rat& r : rational_roots(f.num()).values()) roots.insert(r);
        }
        for (const Rat& r : roots) {
            auto v = specialize(t, r);
            if (!v) {
                record(rep, pole_verdict(free + " = " + r.str() + " is a pole"));
                continue;
            }
            rep.witness_roots.push_back(r);
            all_roots.push_back(r);
            record(rep, dispose3(v->first, v->second, {}, rep.notes));
        }
    }
    if (!def.witness.empty()) check_expected(rep, all_roots);
}

// One side sporadic, the other a family: c1 pins the family parameter.
void family_sporadic(SubcaseReport& rep, const SubcaseDef& def, const FamilyDef& fam, const Option& spor,
                     bool family_left, const std::string& var) {
    RatFunc c1 = relabel(fam.cs[0], var);
    std::vector<Rat> roots;
    for (const auto& [a, b] : spor.pairs) {
        RatFunc diff = c1 - RatFunc::constant(a, var);
        std::vector<Rat> rs = diff.is_zero() ? std::vector<Rat>{} : rational_roots(diff.num()).values();
        rep.deductions.push_back("c1(" + var + ") = " + a.str() + ": " +
                                 (rs.empty() ? std::string("no rational solution") : std::to_string(rs.size()) +
                                                                                         " rational solution(s)"));
        for (const Rat& r : rs) {
            roots.push_back(r);
            Tuple t{{fam.cs[0], fam.cs[1]}, fam.basepoint};
            auto v = specialize(t, r);
            if (!v) {
                record(rep, pole_verdict(var + " = " + r.str() + " is a pole"));
                continue;
            }
            std::vector<Rat> cs = family_left ? std::vector<Rat>{v->first[0], v->first[1], b}
                                              : std::vector<Rat>{v->first[0], b, v->first[1]};
            record(rep, dispose3(cs, v->second, def.stated, rep.notes));
        }
    }
    std::sort(roots.begin(), roots.end());
    rep.constraint_roots = roots;
    check_expected(rep, roots);
}

void sporadic_sporadic(SubcaseReport& rep, const std::vector<std::pair<Rat, Rat>>& left,
                       const std::vector<std::pair<Rat, Rat>>& right, int period) {
    for (const auto& [a, b] : left)
        for (const auto& [a2, c] : right) {
            std::string tag = "(" + a.str() + ", " + b.str() + ") with (" + a2.str() + ", " + c.str() + ")";
            if (a != a2) {
                rep.deductions.push_back(tag + ": c1 differs");
                continue;
            }
            if (b == c) {
                PointVerdict v;
                v.kind = Disposition::EqualMaps;
                v.cs = {a, b, c};
                v.detail = "c2 = c3 = " + b.str();
                rep.deductions.push_back(tag + ": c2 = c3");
                record(rep, v);
                continue;
            }
            auto ps = periodic_points(QuadMap{a}, period);
            rep.deductions.push_back(tag + ": P ranges over the " + std::to_string(ps.size()) +
                                     " rational points of exact period " + std::to_string(period) + " of phi1");
            for (const Rat& p : ps) record(rep, dispose3({a, b, c}, p, {}, rep.notes));
        }
}

CaseReport parametric_case(const CaseDef& cd) {
    CaseReport rep;
    rep.lemmas = {cd.left_lemma, cd.right_lemma};
    rep.axioms = {Axiom::PeriodBound, Axiom::TailBound};
    std::vector<Option> lo = options_of(cd.left_lemma);
    std::vector<Option> ro = options_of(cd.right_lemma);
    int period = cd.cycle_types[0];

    std::map<std::pair<int, int>, int> covered;
    for (const auto& def : cd.subcases)
        for (int r : def.right) covered[{def.left, r}]++;
    rep.coverage_ok = true;
    for (int i = 0; i < static_cast<int>(lo.size()); ++i)
        for (int j = 0; j < static_cast<int>(ro.size()); ++j)
            if (covered[{i, j}] != 1) rep.coverage_ok = false;
    if (covered.size() != lo.size() * ro.size()) rep.coverage_ok = false;

    bool all_ok = rep.coverage_ok;
    for (const auto& def : cd.subcases) {
        SubcaseReport s;
        s.id = def.id;
        s.notes = def.notes;
        s.expected_values = def.expected;
        const Option& l = lo.at(def.left);
        std::string lv = l.fam ? l.fam->parameter : "";
        std::string rv;
        if (def.right.size() == 1 && ro.at(def.right[0]).fam) {
            rv = ro[def.right[0]].fam->parameter;
            if (rv == lv) rv = "u";
        }
        s.left = option_str(l, lv, 1);
        std::vector<std::pair<Rat, Rat>> rpairs;
        for (std::size_t k = 0; k < def.right.size(); ++k) {
            const Option& r = ro.at(def.right[k]);
            s.right += (k ? " or " : "") + option_str(r, rv, 2);
            rpairs.insert(rpairs.end(), r.pairs.begin(), r.pairs.end());
        }
        const Option& r0 = ro.at(def.right[0]);
        if (l.fam && r0.fam) {
            s.kind = "family x family";
            family_family(s, def, *l.fam, *r0.fam, lv, rv);
        } else if (l.fam) {
            s.kind = "family x sporadic";
            family_sporadic(s, def, *l.fam, r0, true, lv);
        } else if (r0.fam) {
            s.kind = "sporadic x family";
            family_sporadic(s, def, *r0.fam, l, false, rv);
        } else {
            s.kind = "sporadic x sporadic";
            sporadic_sporadic(s, l.pairs, rpairs, period);
        }
        s.ok = s.relations_exhaustive;
        for (const auto& v : s.points) s.ok = s.ok && certified(v);
        all_ok = all_ok && s.ok;
        rep.subcases.push_back(std::move(s));
    }
    rep.ok = all_ok;
    return rep;
}

CaseReport constraint_case(const CaseDef& cd) {
    CaseReport rep;
    rep.coverage_ok = true;
    rep.axioms = {Axiom::PeriodBound, Axiom::ThreeCycleEntry};
    SubcaseReport s;
    s.id = std::to_string(cd.number);
    s.kind = "constraint";
    std::vector<std::vector<std::pair<Rat, Rat>>> opts;
    for (const auto& pc : cd.constraints) {
        rep.lemmas.push_back(pc.lemma);
        opts.push_back(lemma_conclusion_pairs(pc.lemma));
        std::string txt = "(c" + std::to_string(pc.i + 1) + ", c" + std::to_string(pc.j + 1) + ") by " + pc.lemma;
        s.left += (s.left.empty() ? "" : "; ") + txt;
        if (opts.back().empty()) s.deductions.push_back(pc.lemma + " leaves no finite orbit point for the pair");
    }
    // Every combination of conclusions.
    std::vector<std::size_t> idx(opts.size(), 0);
    bool any = std::all_of(opts.begin(), opts.end(), [](const auto& o) { return !o.empty(); });
    while (any) {
        std::vector<std::optional<Rat>> cs(3);
        bool consistent = true;
        for (std::size_t k = 0; k < opts.size(); ++k) {
            const auto& pc = cd.constraints[k];
            const auto& [a, b] = opts[k][idx[k]];
            for (auto [pos, val] : {std::pair{pc.i, a}, std::pair{pc.j, b}}) {
                if (cs[pos] && *cs[pos] != val) consistent = false;
                cs[pos] = val;
            }
        }
        PointVerdict v;
        std::string desc;
        for (std::size_t k = 0; k < 3; ++k) {
            v.cs.push_back(cs[k].value_or(Rat(0)));
            desc += std::string(k ? ", " : "") + "c" + std::to_string(k + 1) + " = " +
                    (cs[k] ? cs[k]->str() : std::string("free"));
        }
        if (!consistent) {
            v.kind = Disposition::Contradiction;
            v.detail = "the conclusions disagree on a shared coefficient";
        } else {
            std::optional<std::string> equal;
            for (std::size_t a = 0; a < 3 && !equal; ++a)
                for (std::size_t b = a + 1; b < 3 && !equal; ++b)
                    if (cs[a] && cs[b] && *cs[a] == *cs[b])
                        equal = "c" + std::to_string(a + 1) + " = c" + std::to_string(b + 1) + " = " + cs[a]->str();
            if (equal) {
                v.kind = Disposition::EqualMaps;
                v.detail = *equal;
                s.deductions.push_back(desc + ": " + *equal);
            } else {
                // Distinct coefficients survive the constraints: not excluded here.
                v.kind = Disposition::Finite;
                v.detail = desc + " is not excluded";
            }
        }
        record(s, v);
        std::size_t k = 0;
        while (k < idx.size() && ++idx[k] == opts[k].size()) idx[k++] = 0;
        if (k == idx.size()) break;
    }
    s.ok = s.survivors.empty();
    rep.ok = s.ok;
    rep.subcases.push_back(std::move(s));
    return rep;
}

}  // namespace

std::vector<std::pair<Rat, Rat>> lemma_conclusion_pairs(const std::string& id) {
    // Lemma 2.6 concludes with the same pair as 2.5, with c1 carrying the 2-cycle.
    std::string source = id == "2.6" ? "2.5" : id;
    std::vector<std::pair<Rat, Rat>> out;
    if (id == "2.4") return out;
    if (std::find(lemma_ids().begin(), lemma_ids().end(), id) == lemma_ids().end())
        throw std::invalid_argument("unknown lemma id '" + id + "'");
    for (const auto& t : catalog().sporadic_from(source))
        if (t.cs.size() == 2) out.emplace_back(t.cs[0], t.cs[1]);
    return out;
}

CaseReport verify_theorem_case(int number) {
    auto start = std::chrono::steady_clock::now();
    const auto& defs = case_defs();
    if (number < 1 || number > static_cast<int>(defs.size()))
        throw std::invalid_argument("case number must be in 1..10, got " + std::to_string(number));
    const CaseDef& cd = defs[number - 1];
    CaseReport rep = cd.constraints.empty() ? parametric_case(cd) : constraint_case(cd);
    rep.number = cd.number;
    rep.description = cd.description;
    rep.cycle_types = cd.cycle_types;
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

}  // namespace quadorbit
