#include "lcsapx/multi_solver.hpp"

#include <algorithm>

#include "lcsapx/errors.hpp"
#include "lcsapx/oracles.hpp"

namespace lcsapx {

namespace {

Ratio as_ratio(std::size_t v) { return Ratio(static_cast<std::int64_t>(v)); }

void require_shared_alphabet(const SymbolString& a, const SymbolString& b) {
  if (!(a.alphabet_ptr() == b.alphabet_ptr() || a.alphabet() == b.alphabet())) {
    throw Error(ErrorCode::precondition, "inputs must share one alphabet");
  }
}

std::string branch_of(const std::string& strategy) {
  return strategy.substr(0, strategy.find(':'));
}

// Validates every candidate and picks the first longest.
void finish(SolveReport& report, const SymbolString& a, const SymbolString& b) {
  for (const auto& c : report.candidates) {
    if (!validate_witness(a, b, c.witness)) {
      throw Error(ErrorCode::invalid_witness, "candidate " + c.strategy + " does not validate");
    }
  }
  report.answer = longest(report.candidates);
  report.path = branch_of(report.answer.strategy);
}

std::vector<Candidate> prefixed(std::string_view branch, std::vector<Candidate> list) {
  for (auto& c : list) c.strategy = std::string(branch) + ":" + c.strategy;
  return list;
}

std::string subset_label(std::span<const Symbol> ids) {
  std::string out = "{";
  for (std::size_t k = 0; k < ids.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(ids[k]);
  }
  return out + "}";
}

}  // namespace

ConstantSchedule derive_schedule(std::size_t s, Ratio c) {
  if (s < 2 || c < Ratio(1)) {
    throw Error(ErrorCode::precondition, "derive_schedule needs s >= 2 and c >= 1");
  }
  const Ratio sr = as_ratio(s);
  ConstantSchedule k;
  k.c = c;
  k.rho = (sr - 1) / (Ratio(2) * c * sr * sr);
  k.gamma = (sr - 1) / (Ratio(2) * sr * (Ratio(1) + c * sr));
  k.beta = k.rho / Ratio(40);
  k.delta = min(Ratio(2) * k.rho, k.beta / Ratio(4));
  k.rho_prime = k.beta / Ratio(4);
  k.epsilon_prime = k.beta / Ratio(4);
  k.epsilon = k.epsilon_prime / sr;
  return k;
}

bool validate_schedule(const ConstantSchedule& k, std::size_t s) {
  if (s < 2) return false;
  const Ratio zero(0);
  for (auto v : {k.rho, k.rho_prime, k.beta, k.gamma, k.delta, k.epsilon_prime, k.epsilon}) {
    if (!(v > zero)) return false;
  }
  if (k.c < Ratio(1) || !(k.rho < Ratio(1))) return false;
  const Ratio sr = as_ratio(s);
  return k.beta < k.rho / Ratio(20) && k.delta <= Ratio(2) * k.rho &&
         k.gamma <= (sr - 1 - k.c * sr * sr * k.rho) / (sr * (Ratio(1) + k.c * sr)) &&
         k.epsilon == k.epsilon_prime / sr;
}

SolveReport alphabet_reduce(const SymbolString& a, const SymbolString& b, std::size_t ell,
                            const SubSolver& solver) {
  require_shared_alphabet(a, b);
  const std::size_t s = a.alphabet_size();
  if (ell < 2 || ell >= s) {
    throw Error(ErrorCode::precondition, "subalphabet size " + std::to_string(ell) +
                                             " outside [2, " + std::to_string(s) + ")");
  }
  SolveReport report;
  std::vector<Symbol> sub(ell);
  for (std::size_t k = 0; k < ell; ++k) sub[k] = static_cast<Symbol>(k);
  for (;;) {
    const auto ra = restrict_to(a, sub);
    const auto rb = restrict_to(b, sub);
    report.reduction.scanned_positions += a.size() + b.size();
    auto c = solver(ra.restricted, rb.restricted);
    if (!validate_witness(ra.restricted, rb.restricted, c.witness)) {
      throw Error(ErrorCode::invalid_witness, "sub-solver witness does not validate on " + subset_label(sub));
    }
    auto lifted = lift_witness(ra, rb, c.witness);
    ++report.reduction.subinstances;
    report.reduction.lifted_pairs += lifted.size();
    report.candidates.push_back({"reduce" + subset_label(sub) + ":" + c.strategy, std::move(lifted)});

    // next ell-subset in lexicographic order
    std::size_t k = ell;
    while (k > 0 && sub[k - 1] == s - ell + k - 1) --k;
    if (k == 0) break;
    ++sub[k - 1];
    for (std::size_t t = k; t < ell; ++t) sub[t] = static_cast<Symbol>(sub[t - 1] + 1);
  }
  finish(report, a, b);
  report.path = "reduce";
  report.guarantee = "baseline-only";
  return report;
}

SolveReport equal_length_lcs_approx(const SymbolString& a, const SymbolString& b,
                                    const ConstantSchedule& schedule, const EdApproximator& ed) {
  require_shared_alphabet(a, b);
  if (a.size() != b.size()) {
    throw Error(ErrorCode::precondition, "equal_length_lcs_approx needs equal lengths, got " +
                                             std::to_string(a.size()) + " and " +
                                             std::to_string(b.size()));
  }
  SolveReport report;
  report.schedule = schedule;
  report.guarantee = "1/s+eps";
  const std::size_t s = a.alphabet_size();
  if (s == 2) {
    report.candidates = prefixed("binary", binary_candidates(a, b, schedule, ed));
    finish(report, a, b);
    return report;
  }

  report.candidates = prefixed("unary", {best_match(a, b)});
  const Ratio radius = schedule.rho * as_ratio(s);
  if (is_balanced(a, radius) || is_balanced(b, radius)) {
    report.candidates.push_back(balanced_lcs_approx(a, b, radius, ed));
    report.candidates.back().strategy = "balanced:" + report.candidates.back().strategy;
  } else {
    const auto pair = find_imbalanced_pair(a, b, radius);
    const auto ra = restrict_to(a, pair);
    const auto rb = restrict_to(b, pair);
    auto c = binary_lcs_approx(ra.restricted, rb.restricted, schedule, ed);
    report.candidates.push_back({"restricted:" + c.strategy, lift_witness(ra, rb, c.witness)});
    report.restricted_pair = pair;
  }
  finish(report, a, b);
  return report;
}

std::string_view to_string(SolveMode mode) {
  switch (mode) {
    case SolveMode::automatic: return "auto";
    case SolveMode::equal: return "equal";
    case SolveMode::binary: return "binary";
    case SolveMode::reduce: return "reduce";
  }
  return "auto";
}

SolveMode parse_solve_mode(std::string_view text) {
  for (auto mode : {SolveMode::automatic, SolveMode::equal, SolveMode::binary, SolveMode::reduce}) {
    if (text == to_string(mode)) return mode;
  }
  throw Error(ErrorCode::spec, "unknown mode '" + std::string(text) + "'");
}

namespace {

SolveReport reduce_with(const SymbolString& a, const SymbolString& b, std::size_t ell,
                        const ConstantSchedule& schedule, const EdApproximator& ed) {
  SubSolver solver;
  if (ell == 2) {
    solver = [&](const SymbolString& x, const SymbolString& y) {
      return binary_lcs_approx(x, y, schedule, ed);
    };
  } else {
    solver = [&](const SymbolString& x, const SymbolString& y) {
      if (x.size() == y.size()) return equal_length_lcs_approx(x, y, schedule, ed).answer;
      return reduce_with(x, y, 2, schedule, ed).answer;
    };
  }
  auto report = alphabet_reduce(a, b, ell, solver);
  report.schedule = schedule;
  return report;
}

}  // namespace

SolveReport lcs_approx(const SymbolString& a, const SymbolString& b, const SolverConfig& config) {
  require_shared_alphabet(a, b);
  const std::size_t s = a.alphabet_size();
  ConstantSchedule schedule;
  if (config.schedule) {
    if (!validate_schedule(*config.schedule, s)) {
      throw Error(ErrorCode::spec, "schedule violates its constraints for s = " + std::to_string(s));
    }
    schedule = *config.schedule;
  } else {
    schedule = derive_schedule(s, config.ed.ratio);
  }

  SolveMode mode = config.mode;
  if (mode == SolveMode::automatic) {
    mode = a.size() == b.size() ? SolveMode::equal : (s == 2 ? SolveMode::binary : SolveMode::reduce);
  }

  SolveReport report;
  switch (mode) {
    case SolveMode::equal:
      report = equal_length_lcs_approx(a, b, schedule, config.ed);
      break;
    case SolveMode::binary:
      if (s != 2) {
        throw Error(ErrorCode::precondition, "binary mode needs a two-symbol alphabet");
      }
      report.schedule = schedule;
      report.candidates = prefixed("binary", binary_candidates(a, b, schedule, config.ed));
      finish(report, a, b);
      break;
    case SolveMode::reduce:
    case SolveMode::automatic:
      report = reduce_with(a, b, config.ell, schedule, config.ed);
      break;
  }
  report.guarantee = a.size() == b.size() && mode != SolveMode::reduce ? "1/s+eps" : "baseline-only";

  if (config.exact_cap > 0 && (a.empty() || b.size() <= config.exact_cap / a.size())) {
    report.exact = lcs_length(a, b, config.exact_cap);
  }
  return report;
}

}  // namespace lcsapx
