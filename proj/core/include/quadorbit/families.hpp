#pragma once

// Catalog of parametrized finite-orbit families and sporadic tuples, with
// exact verification in Q(t) and at specializations.

#include "quadorbit/dynamics.hpp"
#include "quadorbit/ratfunc.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace quadorbit {

struct FamilyDef {
    std::string id;
    /// Lemma whose classification lists the family.
    std::string lemma;
    std::string parameter;
    /// Source text of the c values, basepoint and stable set, as stored.
    std::vector<std::string> map_text;
    std::string basepoint_text;
    std::vector<std::string> stable_text;
    /// Period of the cycle each map is assumed to carry (1 fixed, 2 two-cycle).
    std::vector<int> cycle_types;

    std::vector<RatFunc> cs;
    RatFunc basepoint;
    /// Stable set expanded to reduced rational functions.
    std::vector<RatFunc> stable_set;
    /// Parameter values that are poles of some c or the basepoint, or make two
    /// c values coincide. Sorted.
    std::vector<Rat> excluded;
};

struct SporadicTuple {
    std::string source;
    std::vector<Rat> cs;
    /// Basepoints stated alongside the tuple (may be empty).
    std::vector<Rat> basepoints;
};

struct Catalog {
    std::vector<FamilyDef> families;
    std::vector<SporadicTuple> sporadic;

    /// Throws std::out_of_range for unknown ids.
    const FamilyDef& family(const std::string& id) const;
    std::vector<SporadicTuple> sporadic_from(const std::string& source) const;
};

/// The shipped catalog (parsed once; immutable).
const Catalog& catalog();

/// Parses a catalog document (same schema as the shipped file). Throws
/// std::invalid_argument on malformed input.
Catalog parse_catalog(const std::string& json_text);

/// Builds the derived fields (expanded stable set, exclusions) of a family
/// from its text fields. Throws std::invalid_argument on malformed text.
FamilyDef make_family(std::string id, std::string lemma, std::string parameter, std::vector<std::string> maps,
                      std::vector<int> cycle_types, std::string basepoint, std::vector<std::string> stable);

/// Evaluates a stable-set expression such as "-f1(f2(P))" over Q(t).
RatFunc eval_orbit_expr(const std::string& expr, const std::vector<RatFunc>& cs, const RatFunc& p);
Rat eval_orbit_expr(const std::string& expr, const std::vector<Rat>& cs, const Rat& p);

struct SymbolicCheck {
    bool ok = false;
    /// "f<i>(<element>) not in set" descriptions of the failures.
    std::vector<std::string> failures;
};

/// Every map sends every stable-set element to a stable-set element, as an
/// identity in Q(t); and the basepoint lies in the set.
SymbolicCheck family_verify_symbolic(const FamilyDef& fam);

/// Specialization at t0. Throws std::domain_error naming the violated
/// condition when t0 is excluded.
std::pair<MapSet, Rat> family_instance(const FamilyDef& fam, const Rat& t0);

/// Parameter values t0 (admissible) at which the family specializes to the
/// given c values and basepoint.
std::vector<Rat> family_match(const FamilyDef& fam, const std::vector<Rat>& cs, const Rat& p);

/// Value of the family tuple as the parameter goes to infinity, when finite:
/// (c values, basepoint).
std::optional<std::pair<std::vector<Rat>, Rat>> family_at_infinity(const FamilyDef& fam);

/// `count` distinct admissible parameter values p/q (|p| <= 60, 1 <= q <= 24)
/// drawn from a seeded generator, so runs are reproducible.
std::vector<Rat> random_admissible_parameters(const FamilyDef& fam, std::size_t count, std::uint64_t seed);

struct FamilyCheck {
    const FamilyDef* family = nullptr;
    SymbolicCheck symbolic;
    /// (parameter value, BFS verdict is finite) for each specialization tried.
    std::vector<std::pair<Rat, bool>> specializations;
    bool ok() const;
};

/// Symbolic identity check plus BFS at random admissible specializations.
FamilyCheck family_check(const FamilyDef& fam, std::size_t specializations = 20, std::uint64_t seed = 1);

}  // namespace quadorbit
