#include "lcsapx/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "lcsapx/errors.hpp"

namespace lcsapx {

namespace {

using Score = std::int32_t;
constexpr Score kNeg = std::numeric_limits<Score>::min() / 4;

bool finite(Score s) { return s > kNeg / 2; }

void check_cells(std::size_t n, std::size_t m, std::size_t max_cells, const char* what) {
  // n*m <= max_cells without overflow
  if (n != 0 && m > max_cells / n) {
    throw Error(ErrorCode::size_limit, std::string(what) + ": " + std::to_string(n) + " x " +
                                           std::to_string(m) + " exceeds the cell cap of " +
                                           std::to_string(max_cells));
  }
}

/*
 * Band of allowed cells in a rectangle with R rows and C columns, expressed
 * as lo <= c - r <= hi. Cells are addressed by diagonal index k = c - r - lo.
 */
struct Band {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  Band clamped(std::int64_t rows, std::int64_t cols) const {
    return {std::max(lo, -rows), std::min(hi, cols)};
  }
  std::int64_t width() const { return hi - lo + 1; }
};

struct RowRange {
  std::int64_t k_lo;
  std::int64_t k_hi;
};

RowRange row_range(std::int64_t r, std::int64_t cols, const Band& band) {
  return {std::max<std::int64_t>(0, -r - band.lo), std::min(band.width() - 1, cols - r - band.lo)};
}

// Forward LCS scores restricted to the band; returns the last row indexed by
// column (kNeg outside the band). Path starts at (0, 0).
std::vector<Score> last_row(std::span<const Symbol> a, std::span<const Symbol> b, Band band,
                            std::size_t& cells) {
  const auto rows = static_cast<std::int64_t>(a.size());
  const auto cols = static_cast<std::int64_t>(b.size());
  band = band.clamped(rows, cols);
  const auto width = band.width();

  std::vector<Score> prev(static_cast<std::size_t>(width + 2), kNeg);
  std::vector<Score> cur(static_cast<std::size_t>(width + 2), kNeg);
  {
    const auto [kl, kh] = row_range(0, cols, band);
    for (auto k = kl; k <= kh; ++k) cur[k + 1] = 0;
    cells += static_cast<std::size_t>(kh - kl + 1);
  }
  for (std::int64_t r = 1; r <= rows; ++r) {
    std::swap(prev, cur);
    const auto [kl, kh] = row_range(r, cols, band);
    cur[kl] = kNeg;
    const Symbol sym = a[r - 1];
    for (auto k = kl; k <= kh; ++k) {
      const auto c = r + band.lo + k;
      Score best = std::max(prev[k + 2], cur[k]);
      if (c > 0 && b[c - 1] == sym) best = std::max(best, prev[k + 1] + 1);
      cur[k + 1] = best;
    }
    cells += static_cast<std::size_t>(kh - kl + 1);
  }

  std::vector<Score> out(static_cast<std::size_t>(cols + 1), kNeg);
  const auto [kl, kh] = row_range(rows, cols, band);
  for (auto k = kl; k <= kh; ++k) out[rows + band.lo + k] = cur[k + 1];
  return out;
}

// last_row for an unbanded rectangle. Columns are swept in strips of
// kStrip so the working row stays in L1 whatever the width.
constexpr std::size_t kStrip = 2048;

std::vector<Score> last_row_full(std::span<const Symbol> a, std::span<const Symbol> b,
                                 std::size_t& cells) {
  const std::size_t rows = a.size();
  const std::size_t cols = b.size();
  std::vector<Score> out(cols + 1, 0);
  std::vector<Score> left(rows + 1, 0);  // column c0 of every row
  std::vector<Score> seg;
  for (std::size_t c0 = 0; c0 < cols; c0 += kStrip) {
    const std::size_t w = std::min(kStrip, cols - c0);
    const Symbol* bs = b.data() + c0;
    seg.assign(w + 1, 0);
    for (std::size_t r = 1; r <= rows; ++r) {
      Score diag = seg[0];
      seg[0] = left[r];
      const Symbol sym = a[r - 1];
      for (std::size_t t = 1; t <= w; ++t) {
        const Score up = seg[t];
        seg[t] = bs[t - 1] == sym ? diag + 1 : std::max(up, seg[t - 1]);
        diag = up;
      }
      left[r] = seg[w];
    }
    std::copy(seg.begin() + 1, seg.end(), out.begin() + static_cast<std::ptrdiff_t>(c0 + 1));
  }
  cells += (rows + 1) * (cols + 1);
  return out;
}

enum : std::uint8_t { kDiag = 0, kUp = 1, kLeft = 2 };

// Full-traceback LCS inside the band; appends matches shifted by (di, dj).
void traceback_solve(std::span<const Symbol> a, std::span<const Symbol> b, Band band,
                     std::size_t di, std::size_t dj, Witness& out, std::size_t& cells) {
  const auto rows = static_cast<std::int64_t>(a.size());
  const auto cols = static_cast<std::int64_t>(b.size());
  band = band.clamped(rows, cols);
  const auto width = band.width();

  std::vector<std::size_t> row_start(static_cast<std::size_t>(rows + 1));
  std::vector<std::int64_t> row_klo(static_cast<std::size_t>(rows + 1));
  std::size_t total = 0;
  for (std::int64_t r = 0; r <= rows; ++r) {
    const auto [kl, kh] = row_range(r, cols, band);
    row_start[r] = total;
    row_klo[r] = kl;
    total += static_cast<std::size_t>(kh - kl + 1);
  }
  std::vector<std::uint8_t> dir(total, kLeft);
  cells += total;

  std::vector<Score> prev(static_cast<std::size_t>(width + 2), kNeg);
  std::vector<Score> cur(static_cast<std::size_t>(width + 2), kNeg);
  {
    const auto [kl, kh] = row_range(0, cols, band);
    for (auto k = kl; k <= kh; ++k) cur[k + 1] = 0;
  }
  for (std::int64_t r = 1; r <= rows; ++r) {
    std::swap(prev, cur);
    const auto [kl, kh] = row_range(r, cols, band);
    cur[kl] = kNeg;
    const Symbol sym = a[r - 1];
    std::uint8_t* row_dir = dir.data() + row_start[r] - kl;
    for (auto k = kl; k <= kh; ++k) {
      const auto c = r + band.lo + k;
      const Score up = prev[k + 2];
      const Score left = cur[k];
      Score best = up;
      std::uint8_t d = kUp;
      if (left > best) {
        best = left;
        d = kLeft;
      }
      if (c > 0 && b[c - 1] == sym && prev[k + 1] + 1 >= best) {
        best = prev[k + 1] + 1;
        d = kDiag;
      }
      cur[k + 1] = best;
      row_dir[k] = d;
    }
  }

  std::vector<IndexPair> rev;
  std::int64_t r = rows;
  std::int64_t c = cols;
  while (r > 0 || c > 0) {
    const auto k = c - r - band.lo;
    const std::uint8_t d = r == 0 ? std::uint8_t{kLeft} : dir[row_start[r] + static_cast<std::size_t>(k - row_klo[r])];
    if (d == kDiag) {
      rev.push_back({static_cast<std::size_t>(r - 1) + di, static_cast<std::size_t>(c - 1) + dj});
      --r;
      --c;
    } else if (d == kUp) {
      --r;
    } else {
      --c;
    }
  }
  out.pairs.insert(out.pairs.end(), rev.rbegin(), rev.rend());
}

/*
 * Hirschberg divide and conquer restricted to an absolute diagonal band
 * lo <= j - i <= hi. Subproblems small enough for `budget` traceback cells
 * are solved directly.
 */
class BandedLcs {
 public:
  BandedLcs(std::span<const Symbol> a, std::span<const Symbol> b, std::int64_t lo, std::int64_t hi,
            std::size_t budget)
      : a_(a), b_(b), lo_(lo), hi_(hi), budget_(budget) {}

  Witness solve() {
    Witness out;
    recurse(0, a_.size(), 0, b_.size(), out);
    return out;
  }

  std::size_t cells() const { return cells_; }

 private:
  void recurse(std::size_t i0, std::size_t i1, std::size_t j0, std::size_t j1, Witness& out) {
    const auto rows = static_cast<std::int64_t>(i1 - i0);
    const auto cols = static_cast<std::int64_t>(j1 - j0);
    if (rows == 0 || cols == 0) return;
    const auto shift = static_cast<std::int64_t>(j0) - static_cast<std::int64_t>(i0);
    const Band rel = Band{lo_ - shift, hi_ - shift}.clamped(rows, cols);
    const auto area = static_cast<std::size_t>(rows + 1) *
                      static_cast<std::size_t>(std::min(rel.width(), cols + 1));
    if (area <= budget_ || rows == 1) {
      traceback_solve(a_.subspan(i0, i1 - i0), b_.subspan(j0, j1 - j0), rel, i0, j0, out, cells_);
      return;
    }

    const std::size_t mid = i0 + (i1 - i0) / 2;
    const bool full = rel.lo <= -rows && rel.hi >= cols;
    const auto fwd = full ? last_row_full(a_.subspan(i0, mid - i0), b_.subspan(j0, j1 - j0), cells_)
                          : last_row(a_.subspan(i0, mid - i0), b_.subspan(j0, j1 - j0), rel, cells_);

    std::vector<Symbol> ra(a_.begin() + static_cast<std::ptrdiff_t>(mid),
                           a_.begin() + static_cast<std::ptrdiff_t>(i1));
    std::vector<Symbol> rb(b_.begin() + static_cast<std::ptrdiff_t>(j0),
                           b_.begin() + static_cast<std::ptrdiff_t>(j1));
    std::reverse(ra.begin(), ra.end());
    std::reverse(rb.begin(), rb.end());
    // reversed coordinates: c' - r' = (j1 - i1) - (j - i)
    const auto end_diag = static_cast<std::int64_t>(j1) - static_cast<std::int64_t>(i1);
    const auto bwd = full ? last_row_full(ra, rb, cells_)
                          : last_row(ra, rb, Band{end_diag - hi_, end_diag - lo_}, cells_);

    std::size_t best_j = j0;
    Score best = kNeg;
    for (std::size_t j = j0; j <= j1; ++j) {
      const Score f = fwd[j - j0];
      const Score g = bwd[j1 - j];
      if (finite(f) && finite(g) && f + g > best) {
        best = f + g;
        best_j = j;
      }
    }
    if (!finite(best)) {
      throw Error(ErrorCode::internal_contradiction, "banded split row has no reachable cell");
    }
    recurse(i0, mid, j0, best_j, out);
    recurse(mid, i1, best_j, j1, out);
  }

  std::span<const Symbol> a_;
  std::span<const Symbol> b_;
  std::int64_t lo_;
  std::int64_t hi_;
  std::size_t budget_;
  std::size_t cells_ = 0;
};

constexpr std::size_t kTracebackBudget = std::size_t{1} << 14;

struct BandSearch {
  std::size_t distance;
  std::size_t band;
  std::size_t cells;
};

// Doubles the band until the in-band distance is at most the band width.
BandSearch certify_band(const SymbolString& a, const SymbolString& b, const BandConfig& config) {
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  const std::size_t gap = n > m ? n - m : m - n;
  std::size_t t = std::max<std::size_t>(1, config.initial_band);
  std::size_t cells = 0;
  for (;;) {
    if (gap <= t) {
      const auto t64 = static_cast<std::int64_t>(t);
      const auto row = last_row(a.ids(), b.ids(), Band{-t64, t64}, cells);
      const Score lcs = row[m];
      if (finite(lcs)) {
        const std::size_t d = n + m - 2 * static_cast<std::size_t>(lcs);
        if (d <= t) return {d, t, cells};
      }
    }
    if (t >= n + m) {
      throw Error(ErrorCode::internal_contradiction, "band doubling failed to certify");
    }
    t *= 2;
  }
}

}  // namespace

LcsResult lcs_exact(const SymbolString& a, const SymbolString& b, std::size_t max_cells) {
  check_cells(a.size(), b.size(), max_cells, "lcs_exact");
  BandedLcs engine(a.ids(), b.ids(), -static_cast<std::int64_t>(a.size()),
                   static_cast<std::int64_t>(b.size()), kTracebackBudget);
  LcsResult result;
  result.witness = engine.solve();
  result.length = result.witness.size();
  return result;
}

std::size_t lcs_length(const SymbolString& a, const SymbolString& b, std::size_t max_cells) {
  check_cells(a.size(), b.size(), max_cells, "lcs_length");
  const std::size_t m = b.size();
  if (m == 0 || a.empty()) return 0;
  const std::size_t words = (m + 63) / 64;
  const std::size_t s = b.alphabet_size();

  std::vector<std::uint64_t> match(s * words, 0);
  for (std::size_t j = 0; j < m; ++j) {
    match[b[j] * words + j / 64] |= std::uint64_t{1} << (j % 64);
  }
  std::vector<std::uint64_t> v(words, ~std::uint64_t{0});
  const bool same_alphabet = a.alphabet_ptr() == b.alphabet_ptr() || a.alphabet() == b.alphabet();

  for (std::size_t i = 0; i < a.size(); ++i) {
    std::optional<Symbol> sym = a[i];
    if (!same_alphabet) sym = b.alphabet().id_of(a.alphabet().byte(a[i]));
    if (!sym) continue;
    const std::uint64_t* mrow = match.data() + *sym * words;
    std::uint64_t carry = 0;
    for (std::size_t w = 0; w < words; ++w) {
      const std::uint64_t u = v[w] & mrow[w];
      const std::uint64_t t = v[w] + u;
      const std::uint64_t c1 = t < v[w];
      const std::uint64_t sum = t + carry;
      const std::uint64_t c2 = sum < t;
      v[w] = sum | (v[w] & ~mrow[w]);
      carry = c1 | c2;
    }
  }
  std::size_t zeros = 0;
  for (std::size_t w = 0; w < words; ++w) {
    std::uint64_t word = ~v[w];
    if (w + 1 == words && m % 64 != 0) word &= (std::uint64_t{1} << (m % 64)) - 1;
    zeros += static_cast<std::size_t>(std::popcount(word));
  }
  return zeros;
}

std::size_t lcs_bruteforce(const SymbolString& a, const SymbolString& b) {
  const SymbolString& shorter = a.size() <= b.size() ? a : b;
  const SymbolString& longer = a.size() <= b.size() ? b : a;
  if (shorter.size() > kBruteforceMaxLength) {
    throw Error(ErrorCode::size_limit, "lcs_bruteforce: shorter input has length " +
                                           std::to_string(shorter.size()) + " > " +
                                           std::to_string(kBruteforceMaxLength));
  }
  // Work on bytes so the two strings may carry different alphabets.
  std::vector<std::uint8_t> symbols;
  for (auto byte : shorter.alphabet().bytes()) symbols.push_back(byte);
  const std::size_t k = symbols.size();

  auto next_table = [&](const SymbolString& str) {
    // next[p * k + x]: first position >= p holding symbols[x], or size.
    std::vector<std::size_t> next((str.size() + 1) * k, str.size());
    for (std::size_t p = str.size(); p-- > 0;) {
      for (std::size_t x = 0; x < k; ++x) next[p * k + x] = next[(p + 1) * k + x];
      const auto byte = str.alphabet().byte(str[p]);
      for (std::size_t x = 0; x < k; ++x) {
        if (symbols[x] == byte) next[p * k + x] = p;
      }
    }
    return next;
  };
  const auto next_s = next_table(shorter);
  const auto next_l = next_table(longer);
  const std::size_t ns = shorter.size();
  const std::size_t nl = longer.size();

  // Each distinct common subsequence is visited once, via its leftmost
  // embedding in both strings. Branches that cannot beat the best are cut.
  std::size_t best = 0;
  auto dfs = [&](auto&& self, std::size_t ps, std::size_t pl, std::size_t depth) -> void {
    best = std::max(best, depth);
    if (depth + std::min(ns - ps, nl - pl) <= best) return;
    for (std::size_t x = 0; x < k; ++x) {
      const std::size_t i = next_s[ps * k + x];
      const std::size_t j = next_l[pl * k + x];
      if (i < ns && j < nl) self(self, i + 1, j + 1, depth + 1);
    }
  };
  dfs(dfs, 0, 0, 0);
  return best;
}

std::size_t ed_exact(const SymbolString& a, const SymbolString& b, std::size_t max_cells) {
  check_cells(a.size(), b.size(), max_cells, "ed_exact");
  const std::size_t m = b.size();
  std::vector<std::size_t> prev(m + 1), cur(m + 1);
  for (std::size_t j = 0; j <= m; ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= m; ++j) {
      std::size_t best = std::min(prev[j], cur[j - 1]) + 1;
      if (a[i - 1] == b[j - 1]) best = std::min(best, prev[j - 1]);
      cur[j] = best;
    }
    std::swap(prev, cur);
  }
  return prev[m];
}

std::size_t ed_banded(const SymbolString& a, const SymbolString& b, const BandConfig& config) {
  return certify_band(a, b, config).distance;
}

EdAlignment ed_banded_alignment(const SymbolString& a, const SymbolString& b,
                                const BandConfig& config) {
  const auto search = certify_band(a, b, config);
  const auto t = static_cast<std::int64_t>(search.band);
  const std::size_t budget = std::max(config.max_cells, a.size() + b.size());
  BandedLcs engine(a.ids(), b.ids(), -t, t, budget);

  EdAlignment out;
  out.matches = engine.solve();
  out.band = search.band;
  out.cells = search.cells + engine.cells();
  out.distance = a.size() + b.size() - 2 * out.matches.size();
  if (out.distance != search.distance) {
    throw Error(ErrorCode::internal_contradiction, "banded alignment disagrees with certified distance");
  }
  return out;
}

}  // namespace lcsapx
