#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "lcsapx/core.hpp"

namespace lcsapx {

enum class Family { uniform_random, skewed_random, unary_adversarial, case_portfolio, near_identical };

std::string_view to_string(Family family);
Family parse_family(std::string_view text);

/*
 * Everything needed to rebuild an instance. Unused fields are ignored by
 * families that do not read them. m = 0 means m = n.
 */
struct InstanceSpec {
  Family family = Family::uniform_random;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t s = 2;
  std::uint64_t seed = 0;
  std::vector<std::uint32_t> skew;  // skewed-random weights, default 2^(s-1-k)
  Ratio alpha{3, 10};               // case-portfolio: 1(X) = 0(Y) = floor(alpha m)
  std::string shape = "uniform";    // case-portfolio: uniform, middle or cross
  std::size_t edits = 1;            // near-identical substitutions

  std::size_t length_b() const noexcept { return m == 0 ? n : m; }
};

struct Instance {
  SymbolString a;
  SymbolString b;
};

// Throws spec errors naming the offending field.
void validate_spec(const InstanceSpec& spec);

/*
 * Deterministic in (spec, seed). Randomness comes from std::mt19937_64
 * seeded with `seed`; bounded integers use draw_below, never the standard
 * distributions, so output does not depend on the C++ library in use.
 */
Instance generate(const InstanceSpec& spec);

// Uniform in [0, bound) by rejecting the low (2^64 mod bound) raw outputs.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound);

}  // namespace lcsapx
