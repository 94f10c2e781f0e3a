#include "iips/hunter/hunter.hpp"

#include <algorithm>
#include <ostream>
#include <thread>

#include "iips/core/json_io.hpp"
#include "iips/errors.hpp"
#include "iips/exact/linalg.hpp"
#include "iips/rol/identities.hpp"
#include "iips/rol/json_io.hpp"

namespace iips::hunter {

using exact::GaussianRational;
using rol::IdentityId;
using rol::RolStatus;

namespace {

// Sub-streams of a trial's derived seed.
enum Stream : std::uint64_t { kDims = 0, kMatrixA = 1, kMatrixB = 2, kWeightM = 3, kWeightN = 4, kWeightL = 5 };

std::uint64_t weight_choices(const SearchConfig& c, std::size_t dim) {
  return c.weight_kind == WeightKind::Signature ? (std::uint64_t{1} << dim) - 1 : 1;
}

std::uint64_t ipow(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  for (std::size_t k = 0; k < exp; ++k) r *= base;
  return r;
}

std::uint64_t exhaustive_block_size(const SearchConfig& c, std::size_t m, std::size_t n, std::size_t l) {
  const std::uint64_t side = 2 * static_cast<std::uint64_t>(c.entry_bound) + 1;
  const std::uint64_t values = side * side;
  return weight_choices(c, m) * weight_choices(c, n) * weight_choices(c, l) * ipow(values, m * n) *
         ipow(values, n * l);
}

// Digits of `code` in base (2b+1)^2, lowest first, as Gaussian integers.
Matrix decode_matrix(std::uint64_t code, std::size_t rows, std::size_t cols, long bound) {
  const auto side = static_cast<std::uint64_t>(2 * bound + 1);
  Matrix out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const std::uint64_t digit = code % (side * side);
      code /= side * side;
      out(i, j) = GaussianRational(exact::Rational(static_cast<long>(digit / side) - bound),
                                   exact::Rational(static_cast<long>(digit % side) - bound));
    }
  }
  return out;
}

Weight enumerated_weight(const SearchConfig& c, std::uint64_t choice, std::size_t dim,
                         std::uint64_t derived, Stream stream) {
  switch (c.weight_kind) {
    case WeightKind::Signature: return signature_weight(dim, choice + 1);
    case WeightKind::Identity: return Weight::identity(dim);
    case WeightKind::RandomHermitian: break;
  }
  return gen_weight(mix_seed(derived, stream), dim, c.weight_kind);
}

TrialRecord make_record(std::uint64_t index, std::uint64_t derived, std::size_t m, std::size_t n,
                        std::size_t l, Matrix a, Matrix b, WeightTriple w) {
  return TrialRecord{index, derived, {m, n, l}, std::move(a), std::move(b), std::move(w), std::nullopt, {}, false};
}

TrialRecord build_random_trial(const SearchConfig& c, std::uint64_t index) {
  const std::uint64_t derived = mix_seed(c.seed, index);
  Rng dims(mix_seed(derived, kDims));
  const auto m = static_cast<std::size_t>(dims.uniform(1, c.max_dim));
  const auto n = static_cast<std::size_t>(dims.uniform(1, c.max_dim));
  const auto l = static_cast<std::size_t>(dims.uniform(1, c.max_dim));
  return make_record(index, derived, m, n, l, gen_matrix(mix_seed(derived, kMatrixA), m, n, c.entry_bound),
                     gen_matrix(mix_seed(derived, kMatrixB), n, l, c.entry_bound),
                     WeightTriple{gen_weight(mix_seed(derived, kWeightM), m, c.weight_kind),
                                  gen_weight(mix_seed(derived, kWeightN), n, c.weight_kind),
                                  gen_weight(mix_seed(derived, kWeightL), l, c.weight_kind)});
}

TrialRecord build_exhaustive_trial(const SearchConfig& c, std::uint64_t index) {
  const std::uint64_t derived = mix_seed(c.seed, index);
  std::uint64_t rest = index;
  const auto max_dim = static_cast<std::size_t>(c.max_dim);
  for (std::size_t m = 1; m <= max_dim; ++m) {
    for (std::size_t n = 1; n <= max_dim; ++n) {
      for (std::size_t l = 1; l <= max_dim; ++l) {
        const std::uint64_t size = exhaustive_block_size(c, m, n, l);
        if (rest >= size) {
          rest -= size;
          continue;
        }
        const std::uint64_t side = 2 * static_cast<std::uint64_t>(c.entry_bound) + 1;
        const std::uint64_t a_codes = ipow(side * side, m * n);
        const std::uint64_t b_codes = ipow(side * side, n * l);
        const std::uint64_t a_code = rest % a_codes;
        rest /= a_codes;
        const std::uint64_t b_code = rest % b_codes;
        rest /= b_codes;
        const std::uint64_t wm = rest % weight_choices(c, m);
        rest /= weight_choices(c, m);
        const std::uint64_t wn = rest % weight_choices(c, n);
        rest /= weight_choices(c, n);
        const std::uint64_t wl = rest;
        return make_record(index, derived, m, n, l, decode_matrix(a_code, m, n, c.entry_bound),
                           decode_matrix(b_code, n, l, c.entry_bound),
                           WeightTriple{enumerated_weight(c, wm, m, derived, kWeightM),
                                        enumerated_weight(c, wn, n, derived, kWeightN),
                                        enumerated_weight(c, wl, l, derived, kWeightL)});
      }
    }
  }
  throw ConfigError("exhaustive trial index beyond the grid");
}

void check_identity(IdentityId id, const rol::Operands& ops, const WeightTriple& w,
                    std::vector<std::string>& violations) {
  try {
    if (!rol::evaluate_rank_identity(id, ops, w).holds) violations.emplace_back(rol::to_string(id));
  } catch (const PreconditionError&) {
    // Every identity checked here has only MP-existence hypotheses, which the
    // caller has established; reaching this is itself a violation.
    violations.emplace_back(std::string(rol::to_string(id)) + ":precondition");
  }
}

struct Partial {
  std::uint64_t trials_run = 0;
  std::uint64_t mp_pairs_found = 0;
  std::uint64_t rol_holds_count = 0;
  std::uint64_t ab_missing_count = 0;
  std::uint64_t unequal_count = 0;
  std::uint64_t hypothesis_true_count = 0;
  std::vector<TrialRecord> kept;
};

void run_range(const SearchConfig& c, std::uint64_t begin, std::uint64_t end, Partial& out) {
  for (std::uint64_t i = begin; i < end; ++i) {
    TrialRecord r = run_trial(c, i);
    ++out.trials_run;
    if (r.report) {
      ++out.mp_pairs_found;
      switch (r.report->status) {
        case RolStatus::HoldsEqual: ++out.rol_holds_count; break;
        case RolStatus::AbDagMissing: ++out.ab_missing_count; break;
        case RolStatus::ExistsButUnequal: ++out.unequal_count; break;
        case RolStatus::FactorDagMissing: break;
      }
      if (r.report->rank_hypothesis.value_or(false)) ++out.hypothesis_true_count;
    }
    if (r.is_open_problem_candidate || !r.theorem_violations.empty()) out.kept.push_back(std::move(r));
  }
}

Json weights_json(const WeightTriple& w) { return core::weights_to_json(w); }

}  // namespace

std::string_view to_string(SearchMode m) { return m == SearchMode::Random ? "random" : "exhaustive"; }

SearchMode search_mode_from_string(std::string_view s) {
  if (s == "random") return SearchMode::Random;
  if (s == "exhaustive") return SearchMode::Exhaustive;
  throw ConfigError("unknown search mode \"" + std::string(s) + "\"");
}

void validate_config(const SearchConfig& c) {
  if (c.trials < 1) throw ConfigError("trials must be at least 1");
  if (c.max_dim < 1) throw ConfigError("max_dim must be at least 1");
  if (c.entry_bound < 1) throw ConfigError("entry_bound must be at least 1");
  if (c.threads < 1) throw ConfigError("threads must be at least 1");
  if (c.mode == SearchMode::Exhaustive && (c.max_dim > 2 || c.entry_bound > 1)) {
    throw ConfigError("exhaustive mode requires max_dim <= 2 and entry_bound <= 1");
  }
  if (c.mode == SearchMode::Random && c.max_dim > 16) throw ConfigError("max_dim must be at most 16");
}

std::uint64_t exhaustive_grid_size(const SearchConfig& c) {
  std::uint64_t total = 0;
  const auto max_dim = static_cast<std::size_t>(c.max_dim);
  for (std::size_t m = 1; m <= max_dim; ++m) {
    for (std::size_t n = 1; n <= max_dim; ++n) {
      for (std::size_t l = 1; l <= max_dim; ++l) total += exhaustive_block_size(c, m, n, l);
    }
  }
  return total;
}

PairVerdict evaluate_pair(const Matrix& a, const Matrix& b, const WeightTriple& w, bool euclidean) {
  PairVerdict v;
  if (!core::mp_exists(a, w.m, w.n).exists || !core::mp_exists(b, w.n, w.l).exists) return v;

  try {
    v.report = rol::rol_classify(a, b, w);
  } catch (const InternalInconsistency&) {
    v.violations.emplace_back("PenroseVerification");
    return v;
  }
  const rol::RolReport& rep = *v.report;
  const rol::GrevilleFlags& g = *rep.greville;
  const bool holds = rep.status == RolStatus::HoldsEqual;
  auto& out = v.violations;

  if (!g.agree()) out.emplace_back("GrevilleEquivalence");
  if (*rep.rank_criterion != holds) out.emplace_back("RankCriterionEquivalence");
  if (g.all() && !(*rep.rank_criterion && holds)) out.emplace_back("GrevilleImpliesRol");
  if (*rep.rank_hypothesis && holds != g.all()) out.emplace_back("ConditionalEquivalence");
  if (euclidean && holds != g.all()) out.emplace_back("EuclideanGreville");

  const Matrix& ad = *rep.a_dag;
  const Matrix& bd = *rep.b_dag;
  const Matrix p = b * bd;
  const Matrix q = ad * a;
  if (exact::rank(a * b) != exact::rank(p * q)) out.emplace_back("ProjectorProductRank");
  const Matrix as = core::adjoint(a, w.m, w.n);
  const Matrix bs = core::adjoint(b, w.n, w.l);
  if (exact::index(as * a) != 1 || exact::index(b * bs) != 1) out.emplace_back("GramIndexOne");

  const rol::Operands pair{{"A", a}, {"B", b}};
  check_identity(IdentityId::GapCor13, pair, w, out);
  check_identity(IdentityId::CommutatorThm15, pair, w, out);
  check_identity(IdentityId::HermitianIdempotentCommutator, {{"P", p}, {"Q", q}}, w, out);
  check_identity(IdentityId::AdjointSwap, {{"A", as}, {"B", b}}, WeightTriple{w.n, w.m, w.l}, out);

  v.candidate = holds && !g.all();
  return v;
}

TrialRecord run_trial(const SearchConfig& c, std::uint64_t trial_index) {
  TrialRecord r = c.mode == SearchMode::Random ? build_random_trial(c, trial_index)
                                               : build_exhaustive_trial(c, trial_index);
  PairVerdict v = evaluate_pair(r.a, r.b, r.weights, c.weight_kind == WeightKind::Identity);
  r.report = std::move(v.report);
  r.theorem_violations = std::move(v.violations);
  r.is_open_problem_candidate = v.candidate;
  return r;
}

HuntSummary hunt(const SearchConfig& c, std::ostream* jsonl) {
  validate_config(c);
  const std::uint64_t total =
      c.mode == SearchMode::Random ? c.trials : std::min(c.trials, exhaustive_grid_size(c));

  const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(c.threads, total));
  std::vector<Partial> parts(workers);
  if (workers == 1) {
    run_range(c, 0, total, parts[0]);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned k = 0; k < workers; ++k) {
      const std::uint64_t begin = total * k / workers;
      const std::uint64_t end = total * (k + 1) / workers;
      pool.emplace_back([&c, &parts, k, begin, end] { run_range(c, begin, end, parts[k]); });
    }
  }

  HuntSummary s;
  s.config = c;
  // Ranges are contiguous and in worker order, so concatenation keeps trial order.
  for (auto& p : parts) {
    s.trials_run += p.trials_run;
    s.mp_pairs_found += p.mp_pairs_found;
    s.rol_holds_count += p.rol_holds_count;
    s.ab_missing_count += p.ab_missing_count;
    s.unequal_count += p.unequal_count;
    s.hypothesis_true_count += p.hypothesis_true_count;
    for (auto& r : p.kept) {
      if (jsonl) *jsonl << trial_record_to_json(r).dump() << '\n';
      if (!r.theorem_violations.empty()) s.violations.push_back(r);
      if (r.is_open_problem_candidate) s.candidates.push_back(std::move(r));
    }
  }
  return s;
}

Json config_to_json(const SearchConfig& c) {
  Json out;
  out["seed"] = c.seed;
  out["trials"] = c.trials;
  out["max_dim"] = c.max_dim;
  out["entry_bound"] = c.entry_bound;
  out["weights"] = std::string(to_string(c.weight_kind));
  out["mode"] = std::string(to_string(c.mode));
  return out;
}

Json trial_record_to_json(const TrialRecord& r) {
  Json out;
  out["trial_index"] = r.trial_index;
  out["derived_seed"] = r.derived_seed;
  out["dims"] = {r.dims[0], r.dims[1], r.dims[2]};
  out["a"] = exact::matrix_to_json(r.a);
  out["b"] = exact::matrix_to_json(r.b);
  out["weights"] = weights_json(r.weights);
  out["report"] = r.report ? rol::rol_report_to_json(*r.report) : Json(nullptr);
  out["theorem_violations"] = r.theorem_violations;
  out["is_open_problem_candidate"] = r.is_open_problem_candidate;
  return out;
}

Json hunt_summary_to_json(const HuntSummary& s) {
  Json out;
  out["config"] = config_to_json(s.config);
  out["trials_run"] = s.trials_run;
  out["mp_pairs_found"] = s.mp_pairs_found;
  out["rol_holds_count"] = s.rol_holds_count;
  out["ab_missing_count"] = s.ab_missing_count;
  out["unequal_count"] = s.unequal_count;
  out["rank_hypothesis_true_count"] = s.hypothesis_true_count;
  Json cands = Json::array();
  for (const auto& r : s.candidates) cands.push_back(trial_record_to_json(r));
  out["candidates"] = std::move(cands);
  Json viol = Json::array();
  for (const auto& r : s.violations) viol.push_back(trial_record_to_json(r));
  out["violations"] = std::move(viol);
  return out;
}

bool reverify_candidate(const Json& record) {
  const Matrix a = exact::matrix_from_json(record.at("a"), "record.a");
  const Matrix b = exact::matrix_from_json(record.at("b"), "record.b");
  const WeightTriple w = core::weights_from_json(record.at("weights")).triple();
  const rol::RolReport rep = rol::rol_classify(a, b, w);
  return rep.status == RolStatus::HoldsEqual && rep.greville && !rep.greville->all() &&
         rep.rank_hypothesis == false;
}

}  // namespace iips::hunter
