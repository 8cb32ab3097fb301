#pragma once

// Structured (JSON) reports with stable field names. Rationals are written as
// exact "p/q" strings everywhere.

#include "quadorbit/dynamics.hpp"
#include "quadorbit/families.hpp"
#include "quadorbit/search.hpp"
#include "quadorbit/verifier.hpp"

#include <string>

namespace quadorbit {

std::string orbit_report(const MapSet& s, const Rat& p, const OrbitResult& r);
std::string preperiodic_report(const Rat& c, const Rat& x, const PreperiodicityReport& r);
std::string mu_report(const MapSet& s, const MuReport& r);
std::string periodic_report(const Rat& c, int n, const std::vector<Rat>& points);
std::string lemma_report(const LemmaReport& r);
std::string case_report(const CaseReport& r);
/// Aggregates pass/fail/flag counts over the cases on top of the details.
std::string theorem_report(const TheoremSummary& s);

std::string family_report(const FamilyCheck& c);
std::string search_report(const SearchSpec& spec, const SearchResult& r);

/// Re-parses an orbit report and re-verifies it from scratch: for a finite
/// verdict the point set must be stable under the maps and every listed
/// word must reach its point; for an infinite verdict the word must reach
/// the witness and the witness must trip the named guard. Throws
/// std::invalid_argument when the document is malformed.
bool verify_orbit_report(const std::string& json_text);

}  // namespace quadorbit
