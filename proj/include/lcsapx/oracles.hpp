#pragma once

#include <cstddef>

#include "lcsapx/core.hpp"

namespace lcsapx {

/// Cell cap shared by the quadratic oracles.
inline constexpr std::size_t kDefaultMaxCells = 400'000'000;

/// Longest input accepted by lcs_bruteforce (length of the shorter string).
inline constexpr std::size_t kBruteforceMaxLength = 20;

/*
 * Band-doubling parameters. `max_cells` bounds how many DP cells keep
 * traceback state at once; larger problems are split Hirschberg-style.
 * Values below n + m are raised to n + m.
 */
struct BandConfig {
  std::size_t initial_band = 1;
  std::size_t max_cells = std::size_t{1} << 24;
};

struct LcsResult {
  std::size_t length = 0;
  Witness witness;
};

struct EdAlignment {
  std::size_t distance = 0;
  Witness matches;           // the aligned (matched) positions
  std::size_t band = 0;      // certified band half-width
  std::size_t cells = 0;     // DP cells visited over all passes
};

// Exact LCS with a witness, O(n*m) time and O(n + m) working memory.
LcsResult lcs_exact(const SymbolString& a, const SymbolString& b,
                    std::size_t max_cells = kDefaultMaxCells);

// Exact LCS length by bit-parallel row updates (64 columns per word).
std::size_t lcs_length(const SymbolString& a, const SymbolString& b,
                       std::size_t max_cells = kDefaultMaxCells);

// Enumerates the distinct subsequences of the shorter string that also occur in
// the longer one; no dynamic programming.
std::size_t lcs_bruteforce(const SymbolString& a, const SymbolString& b);

// Insert/delete edit distance by its own DP recurrence.
std::size_t ed_exact(const SymbolString& a, const SymbolString& b,
                     std::size_t max_cells = kDefaultMaxCells);

// Exact insert/delete edit distance in O((n + m) * d) by band doubling.
std::size_t ed_banded(const SymbolString& a, const SymbolString& b, const BandConfig& config = {});
EdAlignment ed_banded_alignment(const SymbolString& a, const SymbolString& b,
                                const BandConfig& config = {});

}  // namespace lcsapx
