#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "iips/exact/json_io.hpp"
#include "iips/hunter/sampling.hpp"
#include "iips/rol/reverse_order.hpp"

namespace iips::hunter {

using core::WeightTriple;
using exact::Json;

enum class SearchMode { Random, Exhaustive };

std::string_view to_string(SearchMode m);
SearchMode search_mode_from_string(std::string_view s);

struct SearchConfig {
  std::uint64_t seed = 42;
  std::uint64_t trials = 1000;
  long max_dim = 2;
  long entry_bound = 1;
  WeightKind weight_kind = WeightKind::Signature;
  SearchMode mode = SearchMode::Random;
  // Worker threads; the summary does not depend on it.
  unsigned threads = 1;
};

/// Throws ConfigError: trials >= 1, max_dim >= 1, entry_bound >= 1, and
/// exhaustive mode needs max_dim <= 2 and entry_bound <= 1.
void validate_config(const SearchConfig& c);

/// Number of grid points an exhaustive search enumerates (ignores `trials`).
std::uint64_t exhaustive_grid_size(const SearchConfig& c);

struct TrialRecord {
  std::uint64_t trial_index = 0;
  std::uint64_t derived_seed = 0;
  std::array<std::size_t, 3> dims{};  // (m, n, l)
  Matrix a;
  Matrix b;
  WeightTriple weights;
  // Absent when A^[+] or B^[+] does not exist (the pair is filtered out).
  std::optional<rol::RolReport> report;
  std::vector<std::string> theorem_violations;
  bool is_open_problem_candidate = false;
};

/// Classifies (A, B) under w and cross-checks every applicable proven
/// statement. `euclidean` additionally checks the classical Greville
/// equivalence (only meaningful for identity weights).
struct PairVerdict {
  std::optional<rol::RolReport> report;
  std::vector<std::string> violations;
  bool candidate = false;
};

PairVerdict evaluate_pair(const Matrix& a, const Matrix& b, const WeightTriple& w, bool euclidean);

/// Builds and evaluates trial `trial_index`. Never throws for a valid config.
TrialRecord run_trial(const SearchConfig& c, std::uint64_t trial_index);

struct HuntSummary {
  SearchConfig config;
  std::uint64_t trials_run = 0;
  std::uint64_t mp_pairs_found = 0;
  std::uint64_t rol_holds_count = 0;
  std::uint64_t ab_missing_count = 0;
  std::uint64_t unequal_count = 0;
  std::uint64_t hypothesis_true_count = 0;
  std::vector<TrialRecord> candidates;
  std::vector<TrialRecord> violations;
};

/// Runs the search. When `jsonl` is given, every candidate or violating
/// record is written to it as one JSON line, in trial order.
HuntSummary hunt(const SearchConfig& c, std::ostream* jsonl = nullptr);

Json config_to_json(const SearchConfig& c);
Json trial_record_to_json(const TrialRecord& r);
Json hunt_summary_to_json(const HuntSummary& s);

/// Re-derives the classification of a serialised candidate from its matrices
/// and weights alone. True iff it is again HoldsEqual with some Greville flag
/// false and the rank hypothesis false.
bool reverify_candidate(const Json& record);

}  // namespace iips::hunter
