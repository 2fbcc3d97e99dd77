#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lcsapx/binary_solver.hpp"
#include "lcsapx/core.hpp"
#include "lcsapx/primitives.hpp"
#include "lcsapx/restriction.hpp"

namespace lcsapx {

/*
 * rho = (s-1)/(2cs^2), gamma = (s-1)/(2s(1+cs)), beta = rho/40,
 * delta = min(2 rho, beta/4), rho' = eps' = beta/4, eps = eps'/s.
 */
ConstantSchedule derive_schedule(std::size_t s, Ratio c = Ratio(1));

bool validate_schedule(const ConstantSchedule& schedule, std::size_t s);

struct ReductionStats {
  std::size_t subinstances = 0;
  std::size_t scanned_positions = 0;  // input positions read while restricting
  std::size_t lifted_pairs = 0;
};

struct SolveReport {
  Candidate answer;
  std::vector<Candidate> candidates;  // strategies are "branch:detail"
  std::string path;                   // branch of the answer
  std::string guarantee;              // "1/s+eps" or "baseline-only"
  ConstantSchedule schedule;
  std::optional<std::size_t> exact;
  std::optional<SymbolPair> restricted_pair;
  ReductionStats reduction;
};

using SubSolver = std::function<Candidate(const SymbolString&, const SymbolString&)>;

// Best lifted answer over all subalphabets of size ell (2 <= ell < s).
SolveReport alphabet_reduce(const SymbolString& a, const SymbolString& b, std::size_t ell,
                            const SubSolver& solver);

SolveReport equal_length_lcs_approx(const SymbolString& a, const SymbolString& b,
                                    const ConstantSchedule& schedule, const EdApproximator& ed);

enum class SolveMode { automatic, equal, binary, reduce };

std::string_view to_string(SolveMode mode);
SolveMode parse_solve_mode(std::string_view text);

struct SolverConfig {
  SolveMode mode = SolveMode::automatic;
  std::size_t ell = 2;
  std::optional<ConstantSchedule> schedule;  // derived from s and ed.ratio when empty
  EdApproximator ed = exact_ed_approximator();
  std::size_t exact_cap = 0;  // attach the exact length when n*m <= exact_cap
};

SolveReport lcs_approx(const SymbolString& a, const SymbolString& b, const SolverConfig& config = {});

}  // namespace lcsapx
