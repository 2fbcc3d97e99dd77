#include "lcsapx/generate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "lcsapx/errors.hpp"

namespace lcsapx {

namespace {

constexpr std::pair<Family, std::string_view> kFamilies[] = {
    {Family::uniform_random, "uniform-random"},
    {Family::skewed_random, "skewed-random"},
    {Family::unary_adversarial, "unary-adversarial"},
    {Family::case_portfolio, "case-portfolio"},
    {Family::near_identical, "near-identical"},
};

[[noreturn]] void bad_field(const std::string& field, const std::string& why) {
  throw Error(ErrorCode::spec, field + ": " + why);
}

template <class T>
void shuffle(std::mt19937_64& rng, std::vector<T>& v) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[draw_below(rng, i)]);
}

// k distinct positions from [lo, hi), increasing
std::vector<std::size_t> pick_positions(std::mt19937_64& rng, std::size_t lo, std::size_t hi,
                                        std::size_t k) {
  std::vector<std::size_t> pool(hi - lo);
  std::iota(pool.begin(), pool.end(), lo);
  for (std::size_t i = 0; i < k; ++i) std::swap(pool[i], pool[i + draw_below(rng, pool.size() - i)]);
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

std::vector<Symbol> uniform_ids(std::mt19937_64& rng, std::size_t n, std::size_t s) {
  std::vector<Symbol> ids(n);
  for (auto& id : ids) id = static_cast<Symbol>(draw_below(rng, s));
  return ids;
}

std::vector<std::uint32_t> skew_weights(const InstanceSpec& spec) {
  if (!spec.skew.empty()) return spec.skew;
  std::vector<std::uint32_t> w(spec.s);
  for (std::size_t k = 0; k < spec.s; ++k) w[k] = 1u << std::min<std::size_t>(spec.s - 1 - k, 20);
  return w;
}

std::vector<Symbol> skewed_ids(std::mt19937_64& rng, std::size_t n, const std::vector<std::uint32_t>& w) {
  const std::uint64_t total = std::accumulate(w.begin(), w.end(), std::uint64_t{0});
  std::vector<Symbol> ids(n);
  for (auto& id : ids) {
    std::uint64_t r = draw_below(rng, total);
    std::size_t k = 0;
    while (r >= w[k]) r -= w[k++];
    id = static_cast<Symbol>(k);
  }
  return ids;
}

std::pair<std::size_t, std::size_t> portfolio_region(const std::string& shape, bool first,
                                                     std::size_t len, std::size_t k) {
  if (shape == "uniform") return {0, len};
  if (shape == "middle") return {k, len - k};
  // cross: X's ones on the right, Y's zeros on the left
  return first ? std::pair{len / 2, len} : std::pair{std::size_t{0}, len - len / 2};
}

}  // namespace

std::string_view to_string(Family family) {
  for (const auto& [f, name] : kFamilies) {
    if (f == family) return name;
  }
  return "uniform-random";
}

Family parse_family(std::string_view text) {
  for (const auto& [f, name] : kFamilies) {
    if (name == text) return f;
  }
  bad_field("family", "unknown family '" + std::string(text) + "'");
}

std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw Error(ErrorCode::precondition, "draw_below needs a positive bound");
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

void validate_spec(const InstanceSpec& spec) {
  if (spec.n < 1) bad_field("n", "must be at least 1");
  if (spec.s < Alphabet::kMinSize || spec.s > Alphabet::kMaxSize) bad_field("s", "must lie in [2, 255]");
  const std::size_t m = spec.length_b();
  switch (spec.family) {
    case Family::uniform_random:
      break;
    case Family::skewed_random: {
      const auto w = skew_weights(spec);
      if (w.size() != spec.s) bad_field("skew", "needs exactly s weights");
      if (std::accumulate(w.begin(), w.end(), std::uint64_t{0}) == 0) bad_field("skew", "weights sum to zero");
      break;
    }
    case Family::unary_adversarial:
      if (m != spec.n) bad_field("m", "unary-adversarial needs m = n");
      if (spec.n % spec.s != 0) bad_field("n", "unary-adversarial needs n divisible by s");
      break;
    case Family::case_portfolio: {
      if (spec.s != 2) bad_field("s", "case-portfolio is binary");
      if (spec.alpha < Ratio(0) || spec.alpha > Ratio(1)) bad_field("alpha", "must lie in [0, 1]");
      if (spec.shape != "uniform" && spec.shape != "middle" && spec.shape != "cross") {
        bad_field("shape", "expected uniform, middle or cross");
      }
      const auto k = static_cast<std::size_t>(floor_mul(spec.alpha, static_cast<std::int64_t>(m)));
      for (bool first : {true, false}) {
        const std::size_t len = first ? spec.n : m;
        if (spec.shape == "middle" && 2 * k > len) bad_field("alpha", "ends overlap for the middle shape");
        const auto [lo, hi] = portfolio_region(spec.shape, first, len, k);
        if (hi - lo < k) bad_field("alpha", "floor(alpha m) does not fit the " + spec.shape + " region");
      }
      break;
    }
    case Family::near_identical:
      if (m != spec.n) bad_field("m", "near-identical needs m = n");
      if (spec.edits > spec.n) bad_field("edits", "more edits than positions");
      break;
  }
}

Instance generate(const InstanceSpec& spec) {
  validate_spec(spec);
  std::mt19937_64 rng(spec.seed);
  const auto alphabet = std::make_shared<const Alphabet>(Alphabet::standard(spec.s));
  const std::size_t n = spec.n;
  const std::size_t m = spec.length_b();
  std::vector<Symbol> a;
  std::vector<Symbol> b;

  switch (spec.family) {
    case Family::uniform_random:
      a = uniform_ids(rng, n, spec.s);
      b = uniform_ids(rng, m, spec.s);
      break;
    case Family::skewed_random: {
      const auto w = skew_weights(spec);
      a = skewed_ids(rng, n, w);
      b = skewed_ids(rng, m, w);
      break;
    }
    case Family::unary_adversarial: {
      // A: n/s blocks, each a random permutation of the alphabet.
      // B: A with about sqrt(blocks) blocks rotated left by one.
      const std::size_t blocks = n / spec.s;
      std::vector<Symbol> perm(spec.s);
      for (std::size_t k = 0; k < blocks; ++k) {
        std::iota(perm.begin(), perm.end(), Symbol{0});
        shuffle(rng, perm);
        a.insert(a.end(), perm.begin(), perm.end());
      }
      b = a;
      const auto rotated = std::max<std::size_t>(1, static_cast<std::size_t>(std::sqrt(static_cast<double>(blocks))));
      for (auto k : pick_positions(rng, 0, blocks, std::min(rotated, blocks))) {
        auto first = b.begin() + static_cast<std::ptrdiff_t>(k * spec.s);
        std::rotate(first, first + 1, first + static_cast<std::ptrdiff_t>(spec.s));
      }
      break;
    }
    case Family::case_portfolio: {
      const auto k = static_cast<std::size_t>(floor_mul(spec.alpha, static_cast<std::int64_t>(m)));
      a.assign(n, 0);
      b.assign(m, 1);
      auto [alo, ahi] = portfolio_region(spec.shape, true, n, k);
      for (auto p : pick_positions(rng, alo, ahi, k)) a[p] = 1;
      if (spec.shape == "middle") {
        // Y's zeros sit in its two ends
        for (auto p : pick_positions(rng, 0, 2 * k, k)) b[p < k ? p : m - 2 * k + p] = 0;
      } else {
        auto [blo, bhi] = portfolio_region(spec.shape, false, m, k);
        for (auto p : pick_positions(rng, blo, bhi, k)) b[p] = 0;
      }
      break;
    }
    case Family::near_identical: {
      a = uniform_ids(rng, n, spec.s);
      b = a;
      for (auto p : pick_positions(rng, 0, n, spec.edits)) {
        b[p] = static_cast<Symbol>((b[p] + 1 + draw_below(rng, spec.s - 1)) % spec.s);
      }
      break;
    }
  }
  return {make_trusted(alphabet, std::move(a)), make_trusted(alphabet, std::move(b))};
}

}  // namespace lcsapx
