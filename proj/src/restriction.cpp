#include "lcsapx/restriction.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "lcsapx/errors.hpp"

namespace lcsapx {

namespace {

std::vector<std::size_t> first_positions(const SymbolString& a) {
  std::vector<std::size_t> first(a.alphabet_size(), a.size());
  for (std::size_t i = a.size(); i-- > 0;) first[a[i]] = i;
  return first;
}

bool pair_balanced(std::size_t x, std::size_t y, Ratio radius) {
  return is_balanced(FrequencyHistogram{{x, y}}, radius);
}

}  // namespace

SymbolPair find_imbalanced_pair(const SymbolString& a, const SymbolString& b, Ratio rho) {
  const std::size_t s = a.alphabet_size();
  if (s < 3 || b.alphabet_size() != s) {
    throw Error(ErrorCode::precondition, "find_imbalanced_pair needs a shared alphabet of size >= 3");
  }
  if (is_balanced(a, rho) || is_balanced(b, rho)) {
    throw Error(ErrorCode::precondition, "find_imbalanced_pair needs both inputs imbalanced at " + rho.str());
  }
  const auto ha = histogram(a);
  const auto hb = histogram(b);
  const auto fa = first_positions(a);
  const auto fb = first_positions(b);

  // sigma[0..s) sorted by A-count ascending, ties by first occurrences
  std::vector<Symbol> sigma(s);
  std::iota(sigma.begin(), sigma.end(), Symbol{0});
  std::sort(sigma.begin(), sigma.end(), [&](Symbol x, Symbol y) {
    return std::tie(ha.counts[x], fa[x], fb[x], x) < std::tie(ha.counts[y], fa[y], fb[y], y);
  });

  std::size_t j = 0;
  std::size_t gap = 0;
  for (std::size_t k = 1; k < s; ++k) {
    const std::size_t g = ha[sigma[k]] - ha[sigma[k - 1]];
    if (g > gap) {
      gap = g;
      j = k;
    }
  }
  const auto n = static_cast<std::int64_t>(a.size());
  // gap > (rho/s) n
  if (j == 0 || at_most(static_cast<std::int64_t>(gap * s), rho, n)) {
    throw Error(ErrorCode::internal_contradiction, "no count gap above (rho/s)n in an imbalanced string");
  }

  // {s-1, j-1}, {s-2, j-1}, ..., {j, j-1}, then {j, j-2}, ..., {j, 0}
  std::vector<SymbolPair> sets;
  for (std::size_t hi = s; hi-- > j;) sets.push_back({sigma[hi], sigma[j - 1]});
  for (std::size_t lo = j - 1; lo-- > 0;) sets.push_back({sigma[j], sigma[lo]});

  const Ratio radius = rho / Ratio(static_cast<std::int64_t>(s));
  for (auto [x, y] : sets) {
    if (!pair_balanced(ha[x], ha[y], radius) && !pair_balanced(hb[x], hb[y], radius)) {
      return {std::min(x, y), std::max(x, y)};
    }
  }
  throw Error(ErrorCode::internal_contradiction,
              "no two-symbol set leaves both restrictions imbalanced");
}

bool verify_pair(const SymbolString& a, const SymbolString& b, SymbolPair pair, Ratio rho) {
  const Ratio radius = rho / Ratio(static_cast<std::int64_t>(a.alphabet_size()));
  return !is_balanced(restrict_to(a, pair).restricted, radius) &&
         !is_balanced(restrict_to(b, pair).restricted, radius);
}

}  // namespace lcsapx
