#pragma once

#include <functional>
#include <string>

#include "lcsapx/core.hpp"
#include "lcsapx/oracles.hpp"

namespace lcsapx {

// A strategy's output. The witness refers to the pair the strategy was run on.
struct Candidate {
  std::string strategy;
  Witness witness;

  std::size_t length() const noexcept { return witness.size(); }

  friend bool operator==(const Candidate&, const Candidate&) = default;
};

struct EdEstimate {
  std::size_t distance = 0;
  Witness alignment;  // matched positions of an alignment costing `distance`
};

/*
 * Edit-distance oracle used by the ED-based candidates. An implementation
 * must return distance in [ed, ratio * ed] together with an alignment of
 * that cost, and must be safe to call concurrently.
 */
struct EdApproximator {
  Ratio ratio{1};
  std::function<EdEstimate(const SymbolString&, const SymbolString&)> estimate;
};

// Exact banded edit distance (ratio 1).
EdApproximator exact_ed_approximator(BandConfig config = {});

Candidate match_sym(const SymbolString& a, const SymbolString& b, Symbol sigma);

// Longest single-symbol common subsequence; the smallest id wins ties.
Candidate best_match(const SymbolString& a, const SymbolString& b);

/*
 * max over splits B = B1 B2 of bm(A1, B1) + bm(A2, B2), binary only.
 * The witness is against the pair (A1 A2, B).
 */
Candidate greedy_split(const SymbolString& a1, const SymbolString& a2, const SymbolString& b);

// Common subsequence of length n - ceil(ed~/2) read off the estimator's
// alignment. Equal lengths only.
Candidate approx_ed_lcs(const SymbolString& a, const SymbolString& b, const EdApproximator& ed);

/*
 * The longer of best_match and approx_ed_lcs (best_match on ties). Requires
 * equal lengths and that a or b is balanced at `radius`.
 */
Candidate balanced_lcs_approx(const SymbolString& a, const SymbolString& b, Ratio radius,
                              const EdApproximator& ed);
Candidate balanced_lcs_approx(const SymbolString& a, const SymbolString& b,
                              const ConstantSchedule& schedule, const EdApproximator& ed);

}  // namespace lcsapx
