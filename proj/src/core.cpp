#include "lcsapx/core.hpp"

#include <algorithm>
#include <cstdlib>

#include "lcsapx/errors.hpp"

namespace lcsapx {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_alphabet: return "invalid-alphabet";
    case ErrorCode::invalid_symbol: return "invalid-symbol";
    case ErrorCode::invalid_subalphabet: return "invalid-subalphabet";
    case ErrorCode::precondition: return "precondition";
    case ErrorCode::size_limit: return "size-limit";
    case ErrorCode::segmentation: return "segmentation";
    case ErrorCode::spec: return "spec";
    case ErrorCode::alphabet_too_large: return "alphabet-too-large";
    case ErrorCode::unknown_symbol: return "unknown-symbol";
    case ErrorCode::contract_violation: return "contract-violation";
    case ErrorCode::internal_contradiction: return "internal-contradiction";
    case ErrorCode::invalid_witness: return "invalid-witness";
  }
  return "error";
}

// ---------------------------------------------------------------- Alphabet

Alphabet::Alphabet(std::vector<std::uint8_t> bytes) : bytes_(std::move(bytes)) {
  if (bytes_.size() < kMinSize || bytes_.size() > kMaxSize) {
    throw Error(ErrorCode::invalid_alphabet,
                "alphabet size " + std::to_string(bytes_.size()) + " outside [2, 255]");
  }
  index_.fill(-1);
  for (std::size_t i = 0; i < bytes_.size(); ++i) {
    if (index_[bytes_[i]] >= 0) {
      throw Error(ErrorCode::invalid_alphabet, "duplicate byte " + std::to_string(bytes_[i]));
    }
    index_[bytes_[i]] = static_cast<std::int16_t>(i);
  }
}

Alphabet Alphabet::from_chars(std::string_view chars) {
  return Alphabet(std::vector<std::uint8_t>(chars.begin(), chars.end()));
}

Alphabet Alphabet::standard(std::size_t s) {
  static constexpr std::string_view kLabels =
      "0123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";
  if (s < kMinSize || s > kMaxSize) {
    throw Error(ErrorCode::invalid_alphabet, "alphabet size " + std::to_string(s) + " outside [2, 255]");
  }
  std::vector<std::uint8_t> bytes;
  bytes.reserve(s);
  for (std::size_t i = 0; i < s && i < kLabels.size(); ++i) {
    bytes.push_back(static_cast<std::uint8_t>(kLabels[i]));
  }
  for (unsigned b = 128; bytes.size() < s && b < 256; ++b) {
    bytes.push_back(static_cast<std::uint8_t>(b));
  }
  for (unsigned b = 0; bytes.size() < s && b < 128; ++b) {
    if (kLabels.find(static_cast<char>(b)) == std::string_view::npos) {
      bytes.push_back(static_cast<std::uint8_t>(b));
    }
  }
  return Alphabet(std::move(bytes));
}

std::optional<Symbol> Alphabet::id_of(std::uint8_t byte) const noexcept {
  const auto idx = index_[byte];
  if (idx < 0) return std::nullopt;
  return static_cast<Symbol>(idx);
}

AlphabetPtr make_alphabet(std::string_view chars) {
  return std::make_shared<const Alphabet>(Alphabet::from_chars(chars));
}

// ------------------------------------------------------------ SymbolString

SymbolString::SymbolString(AlphabetPtr alphabet, std::vector<Symbol> ids)
    : alphabet_(std::move(alphabet)), ids_(std::move(ids)) {
  if (!alphabet_) {
    throw Error(ErrorCode::invalid_alphabet, "string without alphabet");
  }
  const auto s = alphabet_->size();
  for (Symbol id : ids_) {
    if (id >= s) {
      throw Error(ErrorCode::invalid_symbol,
                  "symbol id " + std::to_string(id) + " outside alphabet of size " + std::to_string(s));
    }
  }
}

SymbolString make_trusted(AlphabetPtr alphabet, std::vector<Symbol> ids) {
  return SymbolString(SymbolString::Trusted{}, std::move(alphabet), std::move(ids));
}

SymbolString SymbolString::from_text(AlphabetPtr alphabet, std::string_view text) {
  std::vector<Symbol> ids;
  ids.reserve(text.size());
  for (char ch : text) {
    const auto byte = static_cast<std::uint8_t>(ch);
    auto id = alphabet->id_of(byte);
    if (!id) {
      throw Error(ErrorCode::unknown_symbol, "byte " + std::to_string(byte) + " not in alphabet");
    }
    ids.push_back(*id);
  }
  return make_trusted(std::move(alphabet), std::move(ids));
}

SymbolString SymbolString::from_text(std::string_view alphabet_chars, std::string_view text) {
  return from_text(make_alphabet(alphabet_chars), text);
}

SymbolString SymbolString::substr(std::size_t pos, std::size_t len) const {
  pos = std::min(pos, ids_.size());
  len = std::min(len, ids_.size() - pos);
  auto first = ids_.begin() + static_cast<std::ptrdiff_t>(pos);
  return make_trusted(alphabet_, std::vector<Symbol>(first, first + static_cast<std::ptrdiff_t>(len)));
}

SymbolString SymbolString::reversed() const {
  return make_trusted(alphabet_, std::vector<Symbol>(ids_.rbegin(), ids_.rend()));
}

std::string SymbolString::text() const {
  std::string out;
  out.reserve(ids_.size());
  for (Symbol id : ids_) out.push_back(static_cast<char>(alphabet_->byte(id)));
  return out;
}

// ----------------------------------------------------------------- helpers

std::size_t FrequencyHistogram::total() const noexcept {
  std::size_t sum = 0;
  for (auto c : counts) sum += c;
  return sum;
}

void append_shifted(Witness& dst, const Witness& src, std::size_t di, std::size_t dj) {
  dst.pairs.reserve(dst.pairs.size() + src.pairs.size());
  for (const auto& p : src.pairs) dst.pairs.push_back({p.i + di, p.j + dj});
}

FrequencyHistogram histogram(const SymbolString& a) {
  FrequencyHistogram h;
  h.counts.assign(a.alphabet_size(), 0);
  for (Symbol id : a.ids()) ++h.counts[id];
  return h;
}

bool is_balanced(const FrequencyHistogram& h, Ratio rho) {
  if (rho <= Ratio(0)) {
    throw Error(ErrorCode::precondition, "balance radius must be positive");
  }
  // |count - n/s| <= rho*n  <=>  |s*count - n| <= rho*s*n
  const auto s = static_cast<std::int64_t>(h.counts.size());
  const auto n = static_cast<std::int64_t>(h.total());
  for (auto c : h.counts) {
    const std::int64_t dev = std::llabs(s * static_cast<std::int64_t>(c) - n);
    if (!at_most(dev, rho, s * n)) return false;
  }
  return true;
}

bool is_balanced(const SymbolString& a, Ratio rho) {
  return is_balanced(histogram(a), rho);
}

Restriction restrict_to(const SymbolString& a, std::span<const Symbol> sub) {
  std::vector<Symbol> symbols(sub.begin(), sub.end());
  std::sort(symbols.begin(), symbols.end());
  symbols.erase(std::unique(symbols.begin(), symbols.end()), symbols.end());
  if (symbols.size() < 2) {
    throw Error(ErrorCode::invalid_subalphabet, "subalphabet needs at least two distinct symbols");
  }
  if (symbols.back() >= a.alphabet_size()) {
    throw Error(ErrorCode::invalid_subalphabet,
                "symbol id " + std::to_string(symbols.back()) + " not in alphabet");
  }

  std::array<std::int16_t, 256> remap;
  remap.fill(-1);
  std::vector<std::uint8_t> bytes;
  for (std::size_t k = 0; k < symbols.size(); ++k) {
    remap[symbols[k]] = static_cast<std::int16_t>(k);
    bytes.push_back(a.alphabet().byte(symbols[k]));
  }

  Restriction r{make_trusted(std::make_shared<const Alphabet>(std::move(bytes)), {}), {}};
  std::vector<Symbol> ids;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (const auto k = remap[a[i]]; k >= 0) {
      ids.push_back(static_cast<Symbol>(k));
      r.index_map.push_back(i);
    }
  }
  r.restricted = make_trusted(r.restricted.alphabet_ptr(), std::move(ids));
  return r;
}

bool validate_witness(const SymbolString& a, const SymbolString& b, const Witness& w) {
  if (w.size() > std::min(a.size(), b.size())) return false;
  const bool same_alphabet =
      a.alphabet_ptr() == b.alphabet_ptr() || a.alphabet() == b.alphabet();
  for (std::size_t k = 0; k < w.pairs.size(); ++k) {
    const auto [i, j] = w.pairs[k];
    if (i >= a.size() || j >= b.size()) return false;
    if (k > 0 && (i <= w.pairs[k - 1].i || j <= w.pairs[k - 1].j)) return false;
    if (same_alphabet) {
      if (a[i] != b[j]) return false;
    } else if (a.alphabet().byte(a[i]) != b.alphabet().byte(b[j])) {
      return false;
    }
  }
  return true;
}

Witness lift_witness(const Restriction& ra, const Restriction& rb, const Witness& w) {
  if (!validate_witness(ra.restricted, rb.restricted, w)) {
    throw Error(ErrorCode::contract_violation, "witness does not validate against the restrictions");
  }
  Witness out;
  out.pairs.reserve(w.size());
  for (const auto& p : w.pairs) out.pairs.push_back({ra.index_map[p.i], rb.index_map[p.j]});
  return out;
}

}  // namespace lcsapx
