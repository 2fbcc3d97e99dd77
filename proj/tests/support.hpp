#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "lcsapx/core.hpp"

namespace testing {

inline lcsapx::AlphabetPtr digits(std::size_t s) {
  return std::make_shared<const lcsapx::Alphabet>(lcsapx::Alphabet::standard(s));
}

inline lcsapx::SymbolString str(const lcsapx::AlphabetPtr& alphabet, std::string_view text) {
  return lcsapx::SymbolString::from_text(alphabet, text);
}

inline lcsapx::SymbolString bin(std::string_view text) {
  static const auto alphabet = digits(2);
  return str(alphabet, text);
}

// Every string over `alphabet` with length <= max_len, shortest first.
inline std::vector<lcsapx::SymbolString> all_strings(const lcsapx::AlphabetPtr& alphabet,
                                                     std::size_t max_len) {
  std::vector<lcsapx::SymbolString> out;
  const std::size_t s = alphabet->size();
  for (std::size_t len = 0; len <= max_len; ++len) {
    std::vector<lcsapx::Symbol> ids(len, 0);
    for (;;) {
      out.push_back(lcsapx::make_trusted(alphabet, ids));
      std::size_t k = 0;
      while (k < len && ++ids[k] == s) ids[k++] = 0;
      if (k == len) break;
    }
  }
  return out;
}

inline lcsapx::SymbolString random_string(std::mt19937_64& rng, const lcsapx::AlphabetPtr& alphabet,
                                          std::size_t len) {
  std::uniform_int_distribution<int> pick(0, static_cast<int>(alphabet->size()) - 1);
  std::vector<lcsapx::Symbol> ids(len);
  for (auto& id : ids) id = static_cast<lcsapx::Symbol>(pick(rng));
  return lcsapx::make_trusted(alphabet, std::move(ids));
}

inline std::size_t random_len(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace testing
