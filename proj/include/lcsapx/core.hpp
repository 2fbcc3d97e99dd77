#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lcsapx/ratio.hpp"

namespace lcsapx {

using Symbol = std::uint8_t;

/*
 * An ordered set of distinct byte values. The i-th byte has symbol id i.
 */
class Alphabet {
 public:
  static constexpr std::size_t kMinSize = 2;
  static constexpr std::size_t kMaxSize = 255;

  explicit Alphabet(std::vector<std::uint8_t> bytes);

  static Alphabet from_chars(std::string_view chars);
  /// The first s labels of "0-9a-zA-Z", then bytes 128 and up, then the remaining low bytes.
  static Alphabet standard(std::size_t s);

  std::size_t size() const noexcept { return bytes_.size(); }
  std::uint8_t byte(Symbol id) const { return bytes_.at(id); }
  std::optional<Symbol> id_of(std::uint8_t byte) const noexcept;
  std::span<const std::uint8_t> bytes() const noexcept { return bytes_; }

  bool operator==(const Alphabet& other) const noexcept { return bytes_ == other.bytes_; }

 private:
  std::vector<std::uint8_t> bytes_;
  std::array<std::int16_t, 256> index_{};
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr make_alphabet(std::string_view chars);

/*
 * A validated sequence of symbol ids over a shared alphabet.
 */
class SymbolString {
 public:
  SymbolString(AlphabetPtr alphabet, std::vector<Symbol> ids);

  /// Maps each byte of `text` through the alphabet; unknown bytes throw.
  static SymbolString from_text(AlphabetPtr alphabet, std::string_view text);
  static SymbolString from_text(std::string_view alphabet_chars, std::string_view text);

  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }
  Symbol operator[](std::size_t i) const noexcept { return ids_[i]; }
  std::span<const Symbol> ids() const noexcept { return ids_; }

  const Alphabet& alphabet() const noexcept { return *alphabet_; }
  const AlphabetPtr& alphabet_ptr() const noexcept { return alphabet_; }
  std::size_t alphabet_size() const noexcept { return alphabet_->size(); }

  SymbolString substr(std::size_t pos, std::size_t len) const;
  SymbolString reversed() const;
  std::string text() const;

 private:
  struct Trusted {};
  SymbolString(Trusted, AlphabetPtr alphabet, std::vector<Symbol> ids)
      : alphabet_(std::move(alphabet)), ids_(std::move(ids)) {}

  friend SymbolString make_trusted(AlphabetPtr alphabet, std::vector<Symbol> ids);

  AlphabetPtr alphabet_;
  std::vector<Symbol> ids_;
};

// Skips per-symbol validation; callers guarantee every id is in range.
SymbolString make_trusted(AlphabetPtr alphabet, std::vector<Symbol> ids);

struct FrequencyHistogram {
  std::vector<std::size_t> counts;

  std::size_t operator[](Symbol s) const { return counts.at(s); }
  std::size_t total() const noexcept;
};

struct IndexPair {
  std::size_t i = 0;
  std::size_t j = 0;

  friend auto operator<=>(const IndexPair&, const IndexPair&) = default;
};

/*
 * Index-aligned common subsequence: pairs (i, j) with A[i] == B[j],
 * both components strictly increasing.
 */
struct Witness {
  std::vector<IndexPair> pairs;

  std::size_t size() const noexcept { return pairs.size(); }
  bool empty() const noexcept { return pairs.empty(); }

  friend bool operator==(const Witness&, const Witness&) = default;
};

void append_shifted(Witness& dst, const Witness& src, std::size_t di, std::size_t dj);

struct Restriction {
  SymbolString restricted;
  std::vector<std::size_t> index_map;
};

/*
 * Parameter chain of the solvers. `c` is the edit-distance approximation
 * ratio the chain was derived for.
 */
struct ConstantSchedule {
  Ratio rho;
  Ratio rho_prime;
  Ratio beta;
  Ratio gamma;
  Ratio delta;
  Ratio epsilon_prime;
  Ratio epsilon;
  Ratio c{1};

  friend bool operator==(const ConstantSchedule&, const ConstantSchedule&) = default;
};

FrequencyHistogram histogram(const SymbolString& a);

/// Every symbol count is within rho*n of n/s (s = alphabet size), exactly.
bool is_balanced(const SymbolString& a, Ratio rho);
bool is_balanced(const FrequencyHistogram& h, Ratio rho);

/// Maximal subsequence over `sub`, re-labelled onto a subalphabet whose ids
/// follow the increasing order of the original ids.
Restriction restrict_to(const SymbolString& a, std::span<const Symbol> sub);

bool validate_witness(const SymbolString& a, const SymbolString& b, const Witness& w);

Witness lift_witness(const Restriction& ra, const Restriction& rb, const Witness& w);

}  // namespace lcsapx
