#include "lcsapx/bench.hpp"

#include <chrono>
#include <cmath>
#include <limits>

#include "lcsapx/errors.hpp"

namespace lcsapx {

std::vector<std::size_t> parse_sizes(std::string_view text) {
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = std::min(text.find(',', pos), text.size());
    const auto item = text.substr(pos, comma - pos);
    if (item.empty()) throw Error(ErrorCode::spec, "sizes: empty entry");
    std::size_t value = 0;
    if (item.starts_with("2^")) {
      const auto k = Ratio::parse(item.substr(2));
      if (k.den() != 1 || k.num() < 0 || k.num() > 40) throw Error(ErrorCode::spec, "sizes: bad exponent");
      value = std::size_t{1} << k.num();
    } else {
      const auto v = Ratio::parse(item);
      if (v.den() != 1 || v.num() < 1) throw Error(ErrorCode::spec, "sizes: not a positive integer");
      value = static_cast<std::size_t>(v.num());
    }
    if (!out.empty() && value <= out.back()) throw Error(ErrorCode::spec, "sizes: must be ascending");
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

double fit_slope(const std::vector<BenchPoint>& points) {
  if (points.size() < 2) return 0;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& p : points) {
    const double x = std::log(static_cast<double>(p.n));
    const double y = std::log(std::max(p.seconds, 1e-9));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double k = static_cast<double>(points.size());
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

BenchResult bench_scaling(Algorithm algorithm, const std::vector<std::size_t>& sizes,
                          const InstanceSpec& base, std::size_t repetitions) {
  BenchResult result;
  result.algorithm = algorithm;
  const auto ed = exact_ed_approximator();
  for (auto n : sizes) {
    auto spec = base;
    spec.n = n;
    spec.m = base.m == 0 ? 0 : n;
    const auto inst = generate(spec);
    BenchPoint point;
    point.n = n;
    point.seconds = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < std::max<std::size_t>(1, repetitions); ++r) {
      const auto start = std::chrono::steady_clock::now();
      const auto run = run_algorithm(algorithm, inst.a, inst.b, std::nullopt, ed,
                                     std::numeric_limits<std::size_t>::max());
      const auto stop = std::chrono::steady_clock::now();
      point.seconds = std::min(point.seconds, std::chrono::duration<double>(stop - start).count());
      point.length = run.answer.length();
    }
    result.points.push_back(point);
  }
  result.slope = fit_slope(result.points);
  return result;
}

Json bench_to_json(const BenchResult& result) {
  Json j;
  j["algorithm"] = to_string(result.algorithm);
  Json pts = Json::array();
  for (const auto& p : result.points) pts.push_back({{"n", p.n}, {"seconds", p.seconds}, {"length", p.length}});
  j["points"] = std::move(pts);
  j["slope"] = result.slope;
  return j;
}

}  // namespace lcsapx
