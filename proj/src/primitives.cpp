#include "lcsapx/primitives.hpp"

#include <algorithm>

#include "lcsapx/errors.hpp"

namespace lcsapx {

namespace {

void require_equal_lengths(const SymbolString& a, const SymbolString& b, const char* what) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::precondition, std::string(what) + " needs equal lengths, got " +
                                             std::to_string(a.size()) + " and " +
                                             std::to_string(b.size()));
  }
}

// Pairs the first k occurrences of sigma in a with those in b.
void append_unary(Witness& out, std::span<const Symbol> a, std::span<const Symbol> b, Symbol sigma,
                  std::size_t k, std::size_t di, std::size_t dj) {
  std::size_t i = 0;
  std::size_t j = 0;
  for (std::size_t t = 0; t < k; ++t, ++i, ++j) {
    while (a[i] != sigma) ++i;
    while (b[j] != sigma) ++j;
    out.pairs.push_back({i + di, j + dj});
  }
}

}  // namespace

EdApproximator exact_ed_approximator(BandConfig config) {
  return {Ratio(1), [config](const SymbolString& a, const SymbolString& b) {
            auto al = ed_banded_alignment(a, b, config);
            return EdEstimate{al.distance, std::move(al.matches)};
          }};
}

Candidate match_sym(const SymbolString& a, const SymbolString& b, Symbol sigma) {
  if (sigma >= a.alphabet_size() || sigma >= b.alphabet_size()) {
    throw Error(ErrorCode::invalid_symbol, "symbol id " + std::to_string(sigma) + " not in alphabet");
  }
  const auto k = std::min(histogram(a)[sigma], histogram(b)[sigma]);
  Candidate c{"match", {}};
  c.witness.pairs.reserve(k);
  append_unary(c.witness, a.ids(), b.ids(), sigma, k, 0, 0);
  return c;
}

Candidate best_match(const SymbolString& a, const SymbolString& b) {
  const auto ha = histogram(a);
  const auto hb = histogram(b);
  const std::size_t s = std::min(ha.counts.size(), hb.counts.size());
  Symbol best = 0;
  std::size_t best_len = 0;
  for (std::size_t x = 0; x < s; ++x) {
    const auto len = std::min(ha.counts[x], hb.counts[x]);
    if (len > best_len) {
      best_len = len;
      best = static_cast<Symbol>(x);
    }
  }
  Candidate c{"bm", {}};
  c.witness.pairs.reserve(best_len);
  append_unary(c.witness, a.ids(), b.ids(), best, best_len, 0, 0);
  return c;
}

Candidate greedy_split(const SymbolString& a1, const SymbolString& a2, const SymbolString& b) {
  if (a1.alphabet_size() != 2 || a2.alphabet_size() != 2 || b.alphabet_size() != 2) {
    throw Error(ErrorCode::invalid_alphabet, "greedy_split needs a binary alphabet");
  }
  const auto h1 = histogram(a1);
  const auto h2 = histogram(a2);
  const auto hb = histogram(b);
  const std::size_t m = b.size();

  // prefix counts of B walked left to right; suffix = total - prefix
  std::size_t pre[2] = {0, 0};
  std::size_t best = 0;
  std::size_t best_p = 0;
  for (std::size_t p = 0;; ++p) {
    const std::size_t left = std::max(std::min(h1[0], pre[0]), std::min(h1[1], pre[1]));
    const std::size_t right =
        std::max(std::min(h2[0], hb[0] - pre[0]), std::min(h2[1], hb[1] - pre[1]));
    if (left + right > best) {
      best = left + right;
      best_p = p;
    }
    if (p == m) break;
    ++pre[b[p]];
  }

  const auto b1 = b.ids().subspan(0, best_p);
  const auto b2 = b.ids().subspan(best_p);
  std::size_t c1[2] = {0, 0};
  for (auto x : b1) ++c1[x];
  const std::size_t c2[2] = {hb[0] - c1[0], hb[1] - c1[1]};

  const std::size_t l0 = std::min(h1[0], c1[0]);
  const std::size_t l1 = std::min(h1[1], c1[1]);
  const std::size_t r0 = std::min(h2[0], c2[0]);
  const std::size_t r1 = std::min(h2[1], c2[1]);

  Candidate c{"greed", {}};
  append_unary(c.witness, a1.ids(), b1, l1 > l0 ? 1 : 0, std::max(l0, l1), 0, 0);
  append_unary(c.witness, a2.ids(), b2, r1 > r0 ? 1 : 0, std::max(r0, r1), a1.size(), best_p);
  return c;
}

Candidate approx_ed_lcs(const SymbolString& a, const SymbolString& b, const EdApproximator& ed) {
  require_equal_lengths(a, b, "approx_ed_lcs");
  auto est = ed.estimate(a, b);
  const std::size_t n = a.size();
  const std::size_t half = (est.distance + 1) / 2;
  const std::size_t target = half >= n ? 0 : n - half;
  if (!validate_witness(a, b, est.alignment)) {
    throw Error(ErrorCode::invalid_witness, "edit-distance alignment does not validate");
  }
  if (est.alignment.size() < target) {
    throw Error(ErrorCode::contract_violation,
                "edit-distance alignment has " + std::to_string(est.alignment.size()) +
                    " matches, fewer than the " + std::to_string(target) + " its distance implies");
  }
  est.alignment.pairs.resize(target);
  return {"approx-ed", std::move(est.alignment)};
}

Candidate balanced_lcs_approx(const SymbolString& a, const SymbolString& b, Ratio radius,
                              const EdApproximator& ed) {
  require_equal_lengths(a, b, "balanced_lcs_approx");
  if (!is_balanced(a, radius) && !is_balanced(b, radius)) {
    throw Error(ErrorCode::precondition,
                "balanced_lcs_approx needs an input balanced at radius " + radius.str());
  }
  auto unary = best_match(a, b);
  auto via_ed = approx_ed_lcs(a, b, ed);
  return via_ed.length() > unary.length() ? via_ed : unary;
}

Candidate balanced_lcs_approx(const SymbolString& a, const SymbolString& b,
                              const ConstantSchedule& schedule, const EdApproximator& ed) {
  return balanced_lcs_approx(a, b, schedule.rho, ed);
}

}  // namespace lcsapx
