#pragma once

// Re-verification of the two-map classification lemmas and of the
// three-map case analysis, producing reports in which every disposition is
// backed by an exact computation (BFS orbit, identity check, or an explicit
// point failing f^4(Q) = f^2(Q)).

#include "quadorbit/bipoly.hpp"
#include "quadorbit/dynamics.hpp"
#include "quadorbit/families.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace quadorbit {

// ---- facts about single maps consumed without proof ---------------------

enum class Axiom {
    /// No rational point of exact period > 3 (the standing hypothesis mu <= 3).
    PeriodBound,
    /// A map with a rational fixed point or 2-cycle and no rational 3-cycle
    /// satisfies f^4(x) = f^2(x) at every rational preperiodic x.
    TailBound,
    /// Every rational preperiodic orbit of a map with a rational 3-cycle
    /// contains the cycle, and for c != -29/16 enters it after one step.
    ThreeCycleEntry,
};

std::string axiom_name(Axiom a);
/// The published source of the fact.
std::string axiom_citation(Axiom a);

/// f^4(x) == f^2(x), exactly.
bool poonen_criterion(const QuadMap& f, const Rat& x);

/// True when TailBound applies to f: f has no rational point of exact
/// period 3 (so, under mu <= 3, preperiodic points satisfy f^4 = f^2).
bool tail_bound_applies(const QuadMap& f);

/// Q = word(P) together with a map k for which TailBound applies and
/// f_k^4(Q) != f_k^2(Q). Since Q lies in the orbit of P, P has infinite orbit.
struct PoonenWitness {
    Word word;
    Rat q;
    std::size_t map = 0;
    Rat f2, f4;
    std::string str() const;
};

/// Re-checks a witness from scratch.
bool check_witness(const MapSet& s, const Rat& p, const PoonenWitness& w);

/// Shortest word (length <= max_len, breadth first over distinct points) whose
/// image of p fails the criterion under some map to which TailBound applies.
std::optional<PoonenWitness> find_poonen_witness(const MapSet& s, const Rat& p, int max_len = 8);

/// Parses a composition "f1∘f2∘f3" (also accepts 'o' or '*' as the operator
/// and phi in place of f) into a word in application order.
Word parse_word(const std::string& text);

// ---- dispositions --------------------------------------------------------

enum class Disposition {
    /// Some coordinate of the tuple is infinite.
    Pole,
    /// Two of the c values coincide.
    EqualMaps,
    /// The tuple is an admissible member of a catalog family.
    FamilyMember,
    /// BFS confirms a finite orbit: the tuple survives.
    Finite,
    /// BFS confirms an infinite orbit: excluded.
    Contradiction,
};
std::string to_string(Disposition d);

/// Outcome of testing one concrete tuple (c_1, ..., c_s, P).
struct PointVerdict {
    Disposition kind = Disposition::Contradiction;
    std::vector<Rat> cs;
    Rat p;
    std::string detail;
    /// FamilyMember: family id and parameter value.
    std::string family;
    Rat family_param;
    /// Finite: the orbit.
    std::vector<Rat> orbit;
    /// Contradiction: the guard certificate and, when found, a witness.
    std::optional<InfiniteOrbit> escape;
    std::optional<PoonenWitness> witness;
    /// The hypotheses of the lemma fail at this point (a required exact
    /// period is missing); relevant only for Finite outcomes.
    bool degenerate = false;
};

// ---- lemmas --------------------------------------------------------------

enum class Route { Resultant, Groebner };
std::string to_string(Route r);

struct LemmaPoint {
    Rat v1, v2;
    PointVerdict verdict;
};

struct LemmaCandidate {
    Rat v2;
    /// Rational v1 at which every cofactor vanishes.
    std::vector<Rat> v1_values;
    std::vector<LemmaPoint> points;
};

struct ComponentReport {
    BiPoly poly;
    /// "equal-maps", "family" or "condition".
    std::string kind;
    std::string detail;
    /// Chart parameter as a function of (v1, v2), when a chart is used.
    std::string chart_map;
    /// The chart identity (tuple(v1, v2) = chart(T(v1, v2)) on the component)
    /// was verified by exact division.
    bool chart_verified = false;
    /// Family charts: the family id.
    std::string family;
    /// Condition charts: the witness expression, its map and the parameter
    /// values it allows, each disposed concretely.
    std::string condition;
    std::size_t condition_map = 0;
    std::vector<Rat> condition_roots;
    /// (parameter value, verdict) for each allowed parameter value.
    std::vector<std::pair<Rat, PointVerdict>> condition_points;
    /// Points of the component the chart does not reach (chart parameter
    /// infinite or at a pole of the chart), disposed concretely.
    std::vector<LemmaPoint> exceptional;
    bool ok = false;
};

struct GroebnerAttempt {
    bool completed = false;
    /// Why the attempt stopped, when it did not complete.
    std::string note;
    std::size_t basis_size = 0;
    std::size_t pairs_processed = 0;
    /// The last basis element divided exactly by the common components:
    /// degree of the quotient, which lies in v2 alone when found.
    bool quotient_found = false;
    int quotient_degree = -1;
    /// Degree of the squarefree part of the quotient.
    int quotient_squarefree_degree = -1;
    /// Degree stated for the v2-only factor.
    int expected_degree = 0;
    std::vector<Rat> quotient_roots;
    /// Rational roots of the quotient are all resultant-route eliminant roots.
    bool consistent = false;
    /// The quotient times the components is in the ideal (normal form 0).
    bool membership = false;
    double seconds = 0;
};

struct LemmaReport {
    std::string id;
    Route route = Route::Resultant;
    std::string v1, v2;
    /// Names and total degrees of the generators.
    std::vector<std::pair<std::string, int>> generators;
    std::vector<ComponentReport> components;
    int eliminant_degree = 0;
    std::vector<Rat> eliminant_roots;
    std::vector<LemmaCandidate> candidates;
    std::vector<Rat> candidate_values;
    std::vector<Rat> expected_candidates;
    /// Union of the v1-values over the candidates, when the lemma states it.
    std::vector<Rat> v1_values;
    std::optional<std::vector<Rat>> expected_v1_values;

    std::vector<std::string> families;
    std::vector<std::string> expected_families;
    /// Surviving (c1, c2) pairs outside the families.
    std::vector<std::pair<Rat, Rat>> sporadic;
    /// Finite pairs at which the lemma's hypotheses fail.
    std::vector<std::pair<Rat, Rat>> degenerate;
    std::vector<std::pair<Rat, Rat>> expected_sporadic;

    std::optional<GroebnerAttempt> groebner;
    std::vector<std::string> notes;
    std::vector<Axiom> axioms;

    bool candidates_match = false;
    bool v1_values_match = true;
    bool families_match = false;
    bool sporadic_match = false;
    bool components_ok = false;
    bool pass = false;
    double seconds = 0;
};

struct LemmaOptions {
    Route route = Route::Resultant;
    /// Budget for the Groebner route (ignored otherwise).
    std::size_t groebner_max_pairs = 20000;
    std::size_t groebner_max_bits = 200000;
    double groebner_max_seconds = 600;
};

const std::vector<std::string>& lemma_ids();
/// Throws std::invalid_argument for unknown ids.
LemmaReport verify_lemma(const std::string& id, const LemmaOptions& opt = {});

// ---- three maps ----------------------------------------------------------

struct SubcaseReport {
    std::string id;
    /// "family x family", "family x sporadic", "sporadic x family",
    /// "sporadic x sporadic" or "constraint".
    std::string kind;
    /// Human-readable form of the two assumptions combined.
    std::string left, right;
    /// Relations between the parameters deduced from equal basepoints or
    /// equal c1, as strings, and whether they exhaust the constraint.
    std::vector<std::string> deductions;
    bool relations_exhaustive = true;
    /// Parameter values solving c1(left) = c1(right) when one side is sporadic.
    std::vector<Rat> constraint_roots;
    /// Composition word and map used to cut a one-parameter family down.
    std::string witness_word;
    std::size_t witness_map = 0;
    std::vector<Rat> witness_roots;
    /// Parameter values the case analysis states (constraint or witness
    /// roots), when it states them, and whether the computation agrees.
    std::optional<std::vector<Rat>> expected_values;
    bool values_match = true;
    /// Rational points of a genus-one component, when one occurs.
    std::vector<std::pair<Rat, Rat>> curve_points;
    /// Every concrete tuple examined.
    std::vector<PointVerdict> points;
    /// Finite (c1, c2, c3, P) tuples.
    std::vector<PointVerdict> survivors;
    std::vector<std::string> notes;
    /// Discrepancies with the stated argument that do not affect the outcome.
    std::vector<std::string> flags;
    bool ok = false;
};

struct CaseReport {
    int number = 0;
    std::string description;
    /// Exact period of the cycle each map's orbit enters.
    std::vector<int> cycle_types;
    std::vector<std::string> lemmas;
    std::vector<SubcaseReport> subcases;
    /// Every combination of lemma conclusions is covered by exactly one subcase.
    bool coverage_ok = false;
    std::vector<Axiom> axioms;
    bool ok = false;
    double seconds = 0;
};

CaseReport verify_theorem_case(int number);

struct TheoremSummary {
    std::vector<CaseReport> cases;
    /// The ten cases cover every multiset of cycle types {1, 2, 3}^3.
    bool case_split_ok = false;
    /// The two-map lemmas whose conclusions the cases consume.
    std::vector<LemmaReport> lemmas;
    bool lemmas_ok = false;
    /// Distinct surviving triples (sorted c values) with their basepoints
    /// from the case analysis.
    std::vector<std::pair<std::vector<Rat>, std::vector<Rat>>> survivors;
    /// The stated triples and their full finite-orbit point sets from BFS.
    std::vector<std::pair<std::vector<Rat>, std::vector<Rat>>> triples;
    bool survivors_match = false;
    bool triples_match = false;
    /// Four-map exclusion: every P in {+-1/4, +-3/4} is infinite for the
    /// merged set, and the stated word gives a failing point under a map.
    std::vector<std::pair<Rat, PointVerdict>> merged;
    std::vector<Rat> merged_cs;
    std::string merged_word;
    std::size_t merged_map = 0;
    /// Per basepoint: Q = word(P) and the maps under which Q fails the criterion.
    std::vector<std::pair<Rat, std::vector<std::size_t>>> merged_failing_maps;
    bool merged_ok = false;
    /// Integral coefficients: 1 - 4c and -3 - 4c squares tested and no
    /// integral 3-cycles for |c| <= bound; sharp example checked.
    int integral_bound = 0;
    bool integral_ok = false;
    bool sharp_ok = false;
    bool pass = false;
    double seconds = 0;
};

struct TheoremOptions {
    unsigned workers = 1;
    /// Re-run the two-map lemma verifications the cases rely on.
    bool verify_lemmas = true;
    int integral_bound = 200;
};

/// Conclusion pairs (c1, c2) of a lemma outside its families: the sporadic
/// pairs consumed by the case analysis.
std::vector<std::pair<Rat, Rat>> lemma_conclusion_pairs(const std::string& id);

/// Runs every case, distributing cases and lemmas over worker threads.
TheoremSummary verify_theorem(const TheoremOptions& opt = {});

/// Dispose of a concrete tuple against a set of catalog families (checked in
/// order) and by BFS.
PointVerdict dispose_point(const std::vector<Rat>& cs, const Rat& p,
                           const std::vector<const FamilyDef*>& families = {});

}  // namespace quadorbit
