#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace lcsapx {

/// Exact rational number with 64-bit terms, always stored in lowest terms
/// with a positive denominator. Arithmetic goes through 128-bit intermediates
/// and throws if the reduced result no longer fits.
class Ratio {
 public:
  constexpr Ratio() = default;
  Ratio(std::int64_t num, std::int64_t den = 1);

  /// Closest rational with denominator at most `max_den` (continued fractions).
  /// Values written from short fractions such as 1/320 come back exactly.
  static Ratio from_double(double value, std::int64_t max_den = 1'000'000'000'000LL);

  /// Accepts "p/q", an integer, or a decimal literal.
  static Ratio parse(std::string_view text);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string str() const;

  friend Ratio operator+(Ratio a, Ratio b);
  friend Ratio operator-(Ratio a, Ratio b);
  friend Ratio operator*(Ratio a, Ratio b);
  friend Ratio operator/(Ratio a, Ratio b);
  friend bool operator==(Ratio a, Ratio b) noexcept = default;
  friend std::strong_ordering operator<=>(Ratio a, Ratio b) noexcept;

 private:
  static Ratio from_wide(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline Ratio min(Ratio a, Ratio b) { return b < a ? b : a; }
inline Ratio max(Ratio a, Ratio b) { return a < b ? b : a; }

/// value <= r * k, evaluated exactly.
bool at_most(std::int64_t value, Ratio r, std::int64_t k) noexcept;

/// floor(r * k) for non-negative r and k.
std::int64_t floor_mul(Ratio r, std::int64_t k);

}  // namespace lcsapx
