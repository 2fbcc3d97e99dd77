#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lcsapx/core.hpp"
#include "lcsapx/primitives.hpp"

namespace lcsapx {

// S = L M R with |L| = |R| = end.
struct SegmentSplit {
  std::size_t end = 0;
  SymbolString left;
  SymbolString middle;
  SymbolString right;
};

// Ends of length floor(alpha * m); throws segmentation if they would be
// empty or overlap.
SegmentSplit segment(const SymbolString& s, Ratio alpha, std::size_t m);

/*
 * One of the eight compositions of swapping the pair, complementing the
 * binary symbols and reversing both strings. Each is an involution and they
 * commute.
 */
struct SymmetryTransform {
  bool swap_strings = false;
  bool complement_symbols = false;
  bool reverse_both = false;

  static SymmetryTransform from_index(unsigned index);
  std::string label() const;

  std::pair<SymbolString, SymbolString> apply(const SymbolString& x, const SymbolString& y) const;
  // `w` is against apply(x, y); the result is against (x, y).
  Witness map_back(const Witness& w, std::size_t nx, std::size_t ny) const;

  friend bool operator==(const SymmetryTransform&, const SymmetryTransform&) = default;
};

/*
 * A binary pair oriented so that |X| >= |Y| and 0(Y) <= 1(Y). `alpha` is
 * 1(X)/m with m = |Y| (zero when m = 0).
 */
struct BinaryContext {
  SymbolString x;
  SymbolString y;
  SymmetryTransform normalization;  // maps the original pair to (x, y)
  Ratio alpha;
  std::size_t zeros_x = 0;
  std::size_t ones_x = 0;
  std::size_t zeros_y = 0;
  std::size_t ones_y = 0;
  std::size_t source_x = 0;  // lengths of the original pair
  std::size_t source_y = 0;

  static BinaryContext make(const SymbolString& a, const SymbolString& b);
  Witness to_original(const Witness& w) const;
};

// Best match when the common zero and one budgets differ by a factor above 1 + delta.
std::optional<Candidate> frequency_gap_check(const SymbolString& x, const SymbolString& y,
                                             Ratio delta);

// Every construction under every transform, each witness against (ctx.x, ctx.y).
std::vector<Candidate> portfolio_candidates(const BinaryContext& ctx,
                                            const ConstantSchedule& schedule,
                                            const EdApproximator& ed);

// Whether the frequency hypotheses of the imbalanced-pair analysis hold.
struct ImbalanceHypotheses {
  bool small_frequencies = false;  // 0(Y), 1(X) <= (1/2 - rho) m
  bool close_frequencies = false;  // |0(Y) - 1(X)| <= delta m
  bool holds() const noexcept { return small_frequencies && close_frequencies; }
};
ImbalanceHypotheses imbalanced_hypotheses(const BinaryContext& ctx, const ConstantSchedule& schedule);

Candidate imbalanced_lcs(const SymbolString& x, const SymbolString& y,
                         const ConstantSchedule& schedule, const EdApproximator& ed);

// All binary candidates against (x, y): bm, frequency gap, balanced, portfolio.
std::vector<Candidate> binary_candidates(const SymbolString& x, const SymbolString& y,
                                         const ConstantSchedule& schedule,
                                         const EdApproximator& ed);

Candidate binary_lcs_approx(const SymbolString& x, const SymbolString& y,
                            const ConstantSchedule& schedule, const EdApproximator& ed);

// First longest candidate; the list must not be empty.
const Candidate& longest(const std::vector<Candidate>& candidates);

}  // namespace lcsapx
