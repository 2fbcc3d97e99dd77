#include "lcsapx/binary_solver.hpp"

#include <algorithm>

#include "lcsapx/errors.hpp"

namespace lcsapx {

namespace {

void require_binary(const SymbolString& x, const SymbolString& y) {
  if (x.alphabet_size() != 2 || y.alphabet_size() != 2) {
    throw Error(ErrorCode::invalid_alphabet, "binary solver needs a two-symbol alphabet");
  }
}

std::size_t count(std::span<const Symbol> s, Symbol sigma) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), sigma));
}

// match(a, b, sigma) on sub-spans, appended with offsets
void append_match(Witness& out, std::span<const Symbol> a, std::span<const Symbol> b, Symbol sigma,
                  std::size_t di, std::size_t dj) {
  const std::size_t k = std::min(count(a, sigma), count(b, sigma));
  std::size_t i = 0;
  std::size_t j = 0;
  for (std::size_t t = 0; t < k; ++t, ++i, ++j) {
    while (a[i] != sigma) ++i;
    while (b[j] != sigma) ++j;
    out.pairs.push_back({i + di, j + dj});
  }
}

struct View {
  SymmetryTransform transform;
  SymbolString x;
  SymbolString y;
  std::size_t end = 0;  // 1(x), the common end-segment length
  bool segmented = false;
};

}  // namespace

SegmentSplit segment(const SymbolString& s, Ratio alpha, std::size_t m) {
  const auto e = floor_mul(alpha, static_cast<std::int64_t>(m));
  if (e <= 0 || 2 * static_cast<std::size_t>(e) > s.size()) {
    throw Error(ErrorCode::segmentation, "end length " + std::to_string(e) +
                                             " does not fit a string of length " +
                                             std::to_string(s.size()));
  }
  const auto end = static_cast<std::size_t>(e);
  return {end, s.substr(0, end), s.substr(end, s.size() - 2 * end), s.substr(s.size() - end, end)};
}

SymmetryTransform SymmetryTransform::from_index(unsigned index) {
  return {(index & 1u) != 0, (index & 2u) != 0, (index & 4u) != 0};
}

std::string SymmetryTransform::label() const {
  std::string out;
  if (swap_strings) out += 's';
  if (complement_symbols) out += 'c';
  if (reverse_both) out += 'r';
  return out.empty() ? "id" : out;
}

std::pair<SymbolString, SymbolString> SymmetryTransform::apply(const SymbolString& x,
                                                               const SymbolString& y) const {
  auto edit = [&](const SymbolString& s) {
    std::vector<Symbol> ids(s.ids().begin(), s.ids().end());
    if (complement_symbols) {
      for (auto& id : ids) id = static_cast<Symbol>(1 - id);
    }
    if (reverse_both) std::reverse(ids.begin(), ids.end());
    return make_trusted(s.alphabet_ptr(), std::move(ids));
  };
  if (swap_strings) return {edit(y), edit(x)};
  return {edit(x), edit(y)};
}

Witness SymmetryTransform::map_back(const Witness& w, std::size_t nx, std::size_t ny) const {
  Witness out = w;
  if (reverse_both) {
    const std::size_t first = swap_strings ? ny : nx;
    const std::size_t second = swap_strings ? nx : ny;
    for (auto& p : out.pairs) p = {first - 1 - p.i, second - 1 - p.j};
    std::reverse(out.pairs.begin(), out.pairs.end());
  }
  if (swap_strings) {
    for (auto& p : out.pairs) std::swap(p.i, p.j);
  }
  return out;
}

BinaryContext BinaryContext::make(const SymbolString& a, const SymbolString& b) {
  require_binary(a, b);
  SymmetryTransform t;
  t.swap_strings = a.size() < b.size();
  const SymbolString& y = t.swap_strings ? a : b;
  t.complement_symbols = count(y.ids(), 0) > count(y.ids(), 1);
  auto [nx, ny] = t.apply(a, b);

  BinaryContext ctx{std::move(nx), std::move(ny), t, Ratio(0)};
  ctx.source_x = a.size();
  ctx.source_y = b.size();
  ctx.ones_x = count(ctx.x.ids(), 1);
  ctx.zeros_x = ctx.x.size() - ctx.ones_x;
  ctx.ones_y = count(ctx.y.ids(), 1);
  ctx.zeros_y = ctx.y.size() - ctx.ones_y;
  if (!ctx.y.empty()) {
    ctx.alpha = Ratio(static_cast<std::int64_t>(ctx.ones_x), static_cast<std::int64_t>(ctx.y.size()));
  }
  return ctx;
}

Witness BinaryContext::to_original(const Witness& w) const {
  return normalization.map_back(w, source_x, source_y);
}

std::optional<Candidate> frequency_gap_check(const SymbolString& x, const SymbolString& y,
                                             Ratio delta) {
  require_binary(x, y);
  const auto hx = histogram(x);
  const auto hy = histogram(y);
  const auto m0 = static_cast<std::int64_t>(std::min(hx[0], hy[0]));
  const auto m1 = static_cast<std::int64_t>(std::min(hx[1], hy[1]));
  const Ratio factor = Ratio(1) + delta;
  // m0 > factor * m1  <=>  !(m0 <= factor * m1)
  if (!at_most(m0, factor, m1) || !at_most(m1, factor, m0)) {
    auto c = best_match(x, y);
    c.strategy = "freq-gap";
    return c;
  }
  return std::nullopt;
}

std::vector<Candidate> portfolio_candidates(const BinaryContext& ctx,
                                            const ConstantSchedule& schedule,
                                            const EdApproximator& ed) {
  require_binary(ctx.x, ctx.y);
  std::vector<View> views;
  views.reserve(8);
  for (unsigned t = 0; t < 8; ++t) {
    const auto transform = SymmetryTransform::from_index(t);
    auto [x, y] = transform.apply(ctx.x, ctx.y);
    const std::size_t end = count(x.ids(), 1);
    const bool segmented = end > 0 && 2 * end <= x.size() && 2 * end <= y.size();
    views.push_back(View{transform, std::move(x), std::move(y), end, segmented});
  }

  std::vector<Candidate> out;
  auto emit = [&](const char* name, const View& v, const Witness& w) {
    out.push_back({std::string(name) + "/" + v.transform.label(),
                   v.transform.map_back(w, ctx.x.size(), ctx.y.size())});
  };

  for (const auto& v : views) emit("bm", v, best_match(v.x, v.y).witness);

  for (const auto& v : views) {
    if (!v.segmented) continue;
    const std::size_t e = v.end;
    emit("greed", v, greedy_split(v.x.substr(0, v.x.size() - e), v.x.substr(v.x.size() - e, e), v.y).witness);
  }

  for (const auto& v : views) {
    if (!v.segmented) continue;
    const std::size_t e = v.end;
    const std::size_t nx = v.x.size();
    const std::size_t ny = v.y.size();
    // radius 4*beta/alpha with alpha = e/m
    const Ratio radius = Ratio(4) * schedule.beta * Ratio(static_cast<std::int64_t>(ny)) /
                         Ratio(static_cast<std::int64_t>(e));
    const auto rx = v.x.substr(nx - e, e);
    const auto ry = v.y.substr(ny - e, e);
    if (!is_balanced(rx, radius) || !is_balanced(ry, radius)) continue;
    Witness w;
    append_match(w, v.x.ids().subspan(0, nx - e), v.y.ids().subspan(0, ny - e), 0, 0, 0);
    append_shifted(w, balanced_lcs_approx(rx, ry, radius, ed).witness, nx - e, ny - e);
    emit("split-ed", v, w);
  }

  for (const auto& v : views) {
    if (!v.segmented) continue;
    const std::size_t e = v.end;
    const auto x = v.x.ids();
    const auto y = v.y.ids();
    Witness w;
    append_match(w, x.subspan(0, e), y.subspan(0, e), 0, 0, 0);
    append_match(w, x.subspan(e, x.size() - 2 * e), y.subspan(e, y.size() - 2 * e), 1, e, e);
    append_match(w, x.subspan(x.size() - e), y.subspan(y.size() - e), 0, x.size() - e, y.size() - e);
    emit("triple", v, w);
  }

  for (const auto& v : views) {
    if (!v.segmented) continue;
    const std::size_t e = v.end;
    const auto x = v.x.ids();
    const auto y = v.y.ids();
    Witness w;
    append_match(w, x.subspan(0, e), y.subspan(0, y.size() - e), 0, 0, 0);
    append_match(w, x.subspan(e), y.subspan(y.size() - e), 1, e, y.size() - e);
    emit("cross", v, w);
  }
  return out;
}

ImbalanceHypotheses imbalanced_hypotheses(const BinaryContext& ctx, const ConstantSchedule& schedule) {
  const auto m = static_cast<std::int64_t>(ctx.y.size());
  const Ratio cap = Ratio(1, 2) - schedule.rho;
  const auto zy = static_cast<std::int64_t>(ctx.zeros_y);
  const auto ox = static_cast<std::int64_t>(ctx.ones_x);
  ImbalanceHypotheses h;
  h.small_frequencies = at_most(zy, cap, m) && at_most(ox, cap, m);
  h.close_frequencies = at_most(zy > ox ? zy - ox : ox - zy, schedule.delta, m);
  return h;
}

const Candidate& longest(const std::vector<Candidate>& candidates) {
  if (candidates.empty()) {
    throw Error(ErrorCode::contract_violation, "no candidates to choose from");
  }
  const Candidate* best = &candidates.front();
  for (const auto& c : candidates) {
    if (c.length() > best->length()) best = &c;
  }
  return *best;
}

Candidate imbalanced_lcs(const SymbolString& x, const SymbolString& y,
                         const ConstantSchedule& schedule, const EdApproximator& ed) {
  const auto ctx = BinaryContext::make(x, y);
  auto best = longest(portfolio_candidates(ctx, schedule, ed));
  best.witness = ctx.to_original(best.witness);
  return best;
}

std::vector<Candidate> binary_candidates(const SymbolString& x, const SymbolString& y,
                                         const ConstantSchedule& schedule,
                                         const EdApproximator& ed) {
  require_binary(x, y);
  std::vector<Candidate> out;
  out.push_back(best_match(x, y));
  if (auto gap = frequency_gap_check(x, y, schedule.delta)) out.push_back(std::move(*gap));
  if (x.size() == y.size() && (is_balanced(x, schedule.rho) || is_balanced(y, schedule.rho))) {
    auto c = balanced_lcs_approx(x, y, schedule.rho, ed);
    c.strategy = "balanced:" + c.strategy;
    out.push_back(std::move(c));
  }
  const auto ctx = BinaryContext::make(x, y);
  for (auto& c : portfolio_candidates(ctx, schedule, ed)) {
    c.witness = ctx.to_original(c.witness);
    out.push_back(std::move(c));
  }
  return out;
}

Candidate binary_lcs_approx(const SymbolString& x, const SymbolString& y,
                            const ConstantSchedule& schedule, const EdApproximator& ed) {
  return longest(binary_candidates(x, y, schedule, ed));
}

}  // namespace lcsapx
