#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lcsapx/experiment.hpp"

namespace lcsapx {

struct BenchPoint {
  std::size_t n = 0;
  double seconds = 0;  // fastest of the repetitions
  std::size_t length = 0;
};

struct BenchResult {
  Algorithm algorithm = Algorithm::bm;
  std::vector<BenchPoint> points;
  double slope = 0;  // least-squares fit of log(seconds) against log(n)
};

// Integers or powers written "2^k"; must be ascending.
std::vector<std::size_t> parse_sizes(std::string_view text);

/*
 * Times `algorithm` on instances built from `base` with n (and m) set to
 * each size. Generation happens outside the timed region; exact-oracle
 * ratios are not computed.
 */
BenchResult bench_scaling(Algorithm algorithm, const std::vector<std::size_t>& sizes,
                          const InstanceSpec& base, std::size_t repetitions = 3);

double fit_slope(const std::vector<BenchPoint>& points);

Json bench_to_json(const BenchResult& result);

}  // namespace lcsapx
