#include "lcsapx/ratio.hpp"

#include <charconv>
#include <cmath>
#include <limits>

#include "lcsapx/errors.hpp"

namespace lcsapx {

namespace {

using Wide = __int128;

Wide wide_abs(Wide v) { return v < 0 ? -v : v; }

Wide wide_gcd(Wide a, Wide b) {
  a = wide_abs(a);
  b = wide_abs(b);
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t parse_int(std::string_view text) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::spec, "not an integer: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

Ratio::Ratio(std::int64_t num, std::int64_t den) {
  *this = from_wide(num, den);
}

Ratio Ratio::from_wide(Wide num, Wide den) {
  if (den == 0) {
    throw Error(ErrorCode::precondition, "rational with zero denominator");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide g = wide_gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  constexpr Wide lim = std::numeric_limits<std::int64_t>::max();
  if (num > lim || num < -lim || den > lim) {
    throw Error(ErrorCode::precondition, "rational overflow");
  }
  Ratio r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

Ratio Ratio::from_double(double value, std::int64_t max_den) {
  if (!std::isfinite(value)) {
    throw Error(ErrorCode::spec, "non-finite rational value");
  }
  const bool negative = value < 0;
  const double x = std::fabs(value);
  Wide h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double rest = x;
  for (int iter = 0; iter < 64; ++iter) {
    const double a = std::floor(rest);
    if (a > 9.0e18) break;
    const Wide ai = static_cast<Wide>(a);
    const Wide h2 = ai * h1 + h0;
    const Wide k2 = ai * k1 + k0;
    if (k2 > max_den || h2 > std::numeric_limits<std::int64_t>::max()) break;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    const double approx = static_cast<double>(h1) / static_cast<double>(k1);
    if (std::fabs(approx - x) <= 4 * std::numeric_limits<double>::epsilon() * x) break;
    const double frac = rest - a;
    if (frac <= 0) break;
    rest = 1.0 / frac;
  }
  if (k1 == 0) {
    throw Error(ErrorCode::spec, "value out of rational range");
  }
  return from_wide(negative ? -h1 : h1, k1);
}

Ratio Ratio::parse(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    return Ratio(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
  }
  if (text.find_first_of(".eE") != std::string_view::npos) {
    double value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
      throw Error(ErrorCode::spec, "not a number: '" + std::string(text) + "'");
    }
    return from_double(value);
  }
  return Ratio(parse_int(text));
}

std::string Ratio::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Ratio operator+(Ratio a, Ratio b) {
  return Ratio::from_wide(Wide(a.num_) * b.den_ + Wide(b.num_) * a.den_, Wide(a.den_) * b.den_);
}

Ratio operator-(Ratio a, Ratio b) {
  return Ratio::from_wide(Wide(a.num_) * b.den_ - Wide(b.num_) * a.den_, Wide(a.den_) * b.den_);
}

Ratio operator*(Ratio a, Ratio b) {
  return Ratio::from_wide(Wide(a.num_) * b.num_, Wide(a.den_) * b.den_);
}

Ratio operator/(Ratio a, Ratio b) {
  return Ratio::from_wide(Wide(a.num_) * b.den_, Wide(a.den_) * b.num_);
}

std::strong_ordering operator<=>(Ratio a, Ratio b) noexcept {
  const Wide lhs = Wide(a.num_) * b.den_;
  const Wide rhs = Wide(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool at_most(std::int64_t value, Ratio r, std::int64_t k) noexcept {
  return Wide(value) * r.den() <= Wide(r.num()) * k;
}

std::int64_t floor_mul(Ratio r, std::int64_t k) {
  const Wide prod = Wide(r.num()) * k;
  Wide q = prod / r.den();
  if (prod % r.den() != 0 && prod < 0) --q;
  return static_cast<std::int64_t>(q);
}

}  // namespace lcsapx
