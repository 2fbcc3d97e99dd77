// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.
//
//   acceptance [--cli PATH] [--only N,N,...]

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "lcsapx/bench.hpp"
#include "lcsapx/binary_solver.hpp"
#include "lcsapx/errors.hpp"
#include "lcsapx/experiment.hpp"
#include "lcsapx/generate.hpp"
#include "lcsapx/multi_solver.hpp"
#include "lcsapx/oracles.hpp"
#include "lcsapx/primitives.hpp"
#include "lcsapx/restriction.hpp"

using namespace lcsapx;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

// Shared witness ledger for criterion 3.
struct WitnessAudit {
  std::size_t checked = 0;
  std::size_t invalid = 0;
  std::map<std::string, std::size_t> per_operation;
  std::string first_failure;

  void check(const std::string& op, const SymbolString& a, const SymbolString& b, const Candidate& c) {
    check(op, a, b, c.witness, c.strategy);
  }
  void check(const std::string& op, const SymbolString& a, const SymbolString& b, const Witness& w,
             const std::string& strategy = "") {
    ++checked;
    ++per_operation[op];
    if (!validate_witness(a, b, w)) {
      if (invalid++ == 0) first_failure = op + " " + strategy + " on (" + a.text() + ", " + b.text() + ")";
    }
  }
};

WitnessAudit audit;

std::vector<SymbolString> strings_of_length(const AlphabetPtr& alphabet, std::size_t n) {
  const std::size_t s = alphabet->size();
  std::size_t total = 1;
  for (std::size_t k = 0; k < n; ++k) total *= s;
  std::vector<SymbolString> out;
  out.reserve(total);
  std::vector<Symbol> ids(n, 0);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t rest = code;
    for (std::size_t k = 0; k < n; ++k) {
      ids[n - 1 - k] = static_cast<Symbol>(rest % s);
      rest /= s;
    }
    out.push_back(make_trusted(alphabet, ids));
  }
  return out;
}

std::vector<SymbolString> strings_up_to(const AlphabetPtr& alphabet, std::size_t max_len) {
  std::vector<SymbolString> out;
  for (std::size_t n = 0; n <= max_len; ++n) {
    auto level = strings_of_length(alphabet, n);
    out.insert(out.end(), std::make_move_iterator(level.begin()), std::make_move_iterator(level.end()));
  }
  return out;
}

SymbolString random_string(std::mt19937_64& rng, const AlphabetPtr& alphabet, std::size_t n) {
  std::vector<Symbol> ids(n);
  for (auto& id : ids) id = static_cast<Symbol>(draw_below(rng, alphabet->size()));
  return make_trusted(alphabet, std::move(ids));
}

std::size_t random_between(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(draw_below(rng, hi - lo + 1));
}

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

AlphabetPtr standard(std::size_t s) { return std::make_shared<const Alphabet>(Alphabet::standard(s)); }

std::string pair_text(const SymbolString& a, const SymbolString& b) {
  return "(" + a.text() + ", " + b.text() + ")";
}

// ------------------------------------------------------------- criteria

Outcome identity() {
  std::size_t pairs = 0;
  auto check = [&](const SymbolString& a, const SymbolString& b) {
    ++pairs;
    const auto lcs = lcs_exact(a, b).length;
    return 2 * lcs + ed_exact(a, b) == a.size() + b.size();
  };
  const auto binary = strings_up_to(standard(2), 8);
  for (const auto& a : binary) {
    for (const auto& b : binary) {
      if (!check(a, b)) return {false, "identity fails on " + pair_text(a, b)};
    }
  }
  std::mt19937_64 rng(101);
  const auto ternary = standard(3);
  for (int k = 0; k < 10000; ++k) {
    const auto a = random_string(rng, ternary, random_between(rng, 0, 64));
    const auto b = random_string(rng, ternary, random_between(rng, 0, 64));
    if (!check(a, b)) return {false, "identity fails on " + pair_text(a, b)};
  }
  return {true, std::to_string(pairs) + " pairs"};
}

Outcome oracle_equivalence() {
  std::size_t pairs = 0;
  std::string failure;
  auto check = [&](const SymbolString& a, const SymbolString& b) {
    ++pairs;
    const auto exact = lcs_exact(a, b);
    audit.check("lcs_exact", a, b, exact.witness);
    const auto brute = lcs_bruteforce(a, b);
    const auto ed = ed_exact(a, b);
    const auto banded = ed_banded_alignment(a, b);
    audit.check("ed_banded_alignment", a, b, banded.matches);
    if (exact.length != brute || exact.witness.size() != brute || lcs_length(a, b) != brute) {
      failure = "lcs oracles disagree on " + pair_text(a, b);
    } else if (ed_banded(a, b) != ed || banded.distance != ed) {
      failure = "ed oracles disagree on " + pair_text(a, b);
    }
    return failure.empty();
  };
  const auto binary = strings_up_to(standard(2), 10);
  for (const auto& a : binary) {
    for (const auto& b : binary) {
      if (!check(a, b)) return {false, failure};
    }
  }
  std::mt19937_64 rng(202);
  for (int k = 0; k < 1000; ++k) {
    const auto alphabet = standard(3 + draw_below(rng, 2));
    const auto a = random_string(rng, alphabet, random_between(rng, 0, 12));
    const auto b = random_string(rng, alphabet, random_between(rng, 0, 12));
    if (!check(a, b)) return {false, failure};
  }
  return {true, std::to_string(pairs) + " pairs, lcs_exact = lcs_length = lcs_bruteforce, ed_banded = ed_exact"};
}

// Exercises every candidate-producing operation on a mixed corpus; the sweeps
// of the other criteria feed the same audit.
void witness_corpus() {
  std::mt19937_64 rng(303);
  const auto ed = exact_ed_approximator();
  for (int k = 0; k < 2000; ++k) {
    const std::size_t s = 2 + draw_below(rng, 5);
    const auto alphabet = standard(s);
    const std::size_t n = random_between(rng, 0, 60);
    const bool equal = draw_below(rng, 2) == 0;
    const std::size_t m = equal ? n : random_between(rng, 0, 60);
    const auto a = random_string(rng, alphabet, n);
    const auto b = random_string(rng, alphabet, m);
    const auto schedule = derive_schedule(s);

    audit.check("match_sym", a, b, match_sym(a, b, static_cast<Symbol>(draw_below(rng, s))));
    audit.check("best_match", a, b, best_match(a, b));
    for (const auto& c : lcs_approx(a, b).candidates) audit.check("lcs_approx", a, b, c);
    if (s >= 3) {
      const auto reduced = alphabet_reduce(a, b, 2, [](const SymbolString& x, const SymbolString& y) {
        return Candidate{"exact", lcs_exact(x, y).witness};
      });
      for (const auto& c : reduced.candidates) audit.check("alphabet_reduce", a, b, c);
    }
    if (equal) {
      audit.check("approx_ed_lcs", a, b, approx_ed_lcs(a, b, ed));
      const Ratio radius = schedule.rho * Ratio(static_cast<std::int64_t>(s));
      if (is_balanced(a, radius) || is_balanced(b, radius)) {
        audit.check("balanced_lcs_approx", a, b, balanced_lcs_approx(a, b, radius, ed));
      }
      for (const auto& c : equal_length_lcs_approx(a, b, schedule, ed).candidates) {
        audit.check("equal_length_lcs_approx", a, b, c);
      }
    }
    if (s == 2) {
      const std::size_t cut = random_between(rng, 0, n);
      audit.check("greedy_split", a, b, greedy_split(a.substr(0, cut), a.substr(cut, n), b));
      if (auto c = frequency_gap_check(a, b, Ratio(1, 2))) audit.check("frequency_gap_check", a, b, *c);
      const auto ctx = BinaryContext::make(a, b);
      for (const auto& c : portfolio_candidates(ctx, schedule, ed)) {
        audit.check("portfolio_candidates", ctx.x, ctx.y, c);
      }
      for (const auto& c : binary_candidates(a, b, schedule, ed)) audit.check("binary_candidates", a, b, c);
      audit.check("imbalanced_lcs", a, b, imbalanced_lcs(a, b, schedule, ed));
    }
  }
}

Outcome witness_validity() {
  witness_corpus();
  std::string ops;
  for (const auto& [op, count] : audit.per_operation) {
    ops += (ops.empty() ? "" : ", ") + op + "=" + std::to_string(count);
  }
  if (audit.invalid > 0) {
    return {false, std::to_string(audit.invalid) + " invalid of " + std::to_string(audit.checked) +
                       ", first: " + audit.first_failure};
  }
  return {true, std::to_string(audit.checked) + " witnesses valid [" + ops + "]"};
}

Outcome baseline_floor() {
  std::size_t pairs = 0;
  for (std::size_t s : {2, 3}) {
    const auto corpus = strings_up_to(standard(s), 8);
    for (const auto& a : corpus) {
      for (const auto& b : corpus) {
        ++pairs;
        const auto bm = best_match(a, b);
        audit.check("best_match", a, b, bm);
        if (s * bm.length() < lcs_length(a, b)) return {false, "s*bm < lcs on " + pair_text(a, b)};
      }
    }
  }
  return {true, std::to_string(pairs) + " pairs, s*bm >= lcs"};
}

// Criteria 5 and 7 share the exhaustive binary sweep.
struct BinarySweep {
  Outcome floor;
  Outcome gap;
};

BinarySweep binary_sweep() {
  const auto schedule = derive_schedule(2);
  const auto ed = exact_ed_approximator();
  const auto corpus = strings_up_to(standard(2), 9);
  std::size_t pairs = 0, gap_pairs = 0;
  BinarySweep out{{true, ""}, {true, ""}};
  for (const auto& a : corpus) {
    const auto ha = histogram(a);
    for (const auto& b : corpus) {
      ++pairs;
      const auto lcs = lcs_length(a, b);
      const auto candidates = binary_candidates(a, b, schedule, ed);
      for (const auto& c : candidates) audit.check("binary_candidates", a, b, c);
      const auto length = longest(candidates).length();
      if (out.floor.pass && length < ceil_div(lcs, 2)) {
        out.floor = {false, "binary < ceil(lcs/2) on " + pair_text(a, b)};
      }
      const auto hb = histogram(b);
      const auto zeros = std::min(ha[0], hb[0]);
      const auto ones = std::min(ha[1], hb[1]);
      if (2 * zeros > 3 * ones) {
        ++gap_pairs;
        const auto bm = best_match(a, b).length();
        if (out.gap.pass && 5 * bm < 3 * lcs) out.gap = {false, "5*bm < 3*lcs on " + pair_text(a, b)};
      }
    }
  }
  if (out.floor.pass) out.floor.detail = std::to_string(pairs) + " pairs, binary >= ceil(lcs/2)";
  if (out.gap.pass) out.gap.detail = std::to_string(gap_pairs) + " gap pairs, 5*bm >= 3*lcs";
  return out;
}

Outcome kary_floor() {
  const auto ed = exact_ed_approximator();
  std::size_t pairs = 0;
  auto check = [&](const SymbolString& a, const SymbolString& b, const ConstantSchedule& schedule) {
    ++pairs;
    const auto report = equal_length_lcs_approx(a, b, schedule, ed);
    for (const auto& c : report.candidates) audit.check("equal_length_lcs_approx", a, b, c);
    return report.answer.length() >= ceil_div(lcs_length(a, b), a.alphabet_size());
  };
  const auto ternary = standard(3);
  const auto schedule3 = derive_schedule(3);
  for (std::size_t n = 0; n <= 7; ++n) {
    const auto corpus = strings_of_length(ternary, n);
    for (const auto& a : corpus) {
      for (const auto& b : corpus) {
        if (!check(a, b, schedule3)) return {false, "answer < ceil(lcs/3) on " + pair_text(a, b)};
      }
    }
  }
  std::mt19937_64 rng(606);
  const auto quaternary = standard(4);
  const auto schedule4 = derive_schedule(4);
  for (int k = 0; k < 10000; ++k) {
    const std::size_t n = random_between(rng, 0, 12);
    const auto a = random_string(rng, quaternary, n);
    const auto b = random_string(rng, quaternary, n);
    if (!check(a, b, schedule4)) return {false, "answer < ceil(lcs/4) on " + pair_text(a, b)};
  }
  return {true, std::to_string(pairs) + " pairs, answer >= ceil(lcs/s)"};
}

SymbolString weighted_string(std::mt19937_64& rng, const AlphabetPtr& alphabet,
                             const std::vector<std::size_t>& weights, std::size_t n) {
  std::size_t total = 0;
  for (auto w : weights) total += w;
  std::vector<Symbol> ids(n);
  for (auto& id : ids) {
    auto r = draw_below(rng, total);
    Symbol sym = 0;
    while (r >= weights[sym]) r -= weights[sym++];
    id = sym;
  }
  return make_trusted(alphabet, std::move(ids));
}

Outcome restriction_postcondition() {
  const Ratio rho(1, 20);
  std::mt19937_64 rng(808);
  std::size_t accepted = 0, drawn = 0;
  while (accepted < 10000) {
    const std::size_t s = random_between(rng, 3, 6);
    const auto alphabet = standard(s);
    // Mix uniform and skewed weights so both sides of the balance test get drawn.
    std::vector<std::size_t> wa(s, 1), wb(s, 1);
    if (draw_below(rng, 4) != 0) {
      for (auto& w : wa) w = random_between(rng, 1, 8);
      for (auto& w : wb) w = random_between(rng, 1, 8);
    }
    const auto a = weighted_string(rng, alphabet, wa, random_between(rng, 50, 500));
    const auto b = weighted_string(rng, alphabet, wb, random_between(rng, 50, 500));
    ++drawn;
    if (is_balanced(a, rho) || is_balanced(b, rho)) continue;
    ++accepted;
    try {
      const auto pair = find_imbalanced_pair(a, b, rho);
      if (!verify_pair(a, b, pair, rho)) return {false, "verify_pair rejects the pair for " + pair_text(a, b)};
    } catch (const Error& e) {
      return {false, std::string(to_string(e.code())) + ": " + e.what()};
    }
  }
  return {true, std::to_string(accepted) + " pairs accepted (" + std::to_string(drawn) + " drawn)"};
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const auto k = v.size() / 2;
  return v.size() % 2 ? v[k] : (v[k - 1] + v[k]) / 2;
}

Outcome strict_improvement() {
  const auto ed = exact_ed_approximator();
  const auto schedule = derive_schedule(3);
  std::vector<double> eq, bm;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    InstanceSpec spec;
    spec.family = Family::unary_adversarial;
    spec.n = 3000;
    spec.s = 3;
    spec.seed = seed;
    const auto inst = generate(spec);
    const auto exact = static_cast<double>(lcs_exact(inst.a, inst.b).length);
    const auto report = equal_length_lcs_approx(inst.a, inst.b, schedule, ed);
    for (const auto& c : report.candidates) audit.check("equal_length_lcs_approx", inst.a, inst.b, c);
    const auto base = best_match(inst.a, inst.b);
    eq.push_back(static_cast<double>(report.answer.length()) / exact);
    bm.push_back(static_cast<double>(base.length()) / exact);
  }
  const double diff = median(eq) - median(bm);
  char buf[160];
  std::snprintf(buf, sizeof buf, "median equal %.4f, median bm %.4f, difference %.4f (need >= 0.02)",
                median(eq), median(bm), diff);
  return {diff >= 0.02, buf};
}

Outcome approx_ed_identity() {
  const auto ed = exact_ed_approximator();
  const auto binary = standard(2);
  std::mt19937_64 rng(1010);
  for (int k = 0; k < 1000; ++k) {
    const std::size_t n = random_between(rng, 0, 2000);
    const auto a = random_string(rng, binary, n);
    const auto b = random_string(rng, binary, n);
    const auto c = approx_ed_lcs(a, b, ed);
    audit.check("approx_ed_lcs", a, b, c);
    if (c.length() != lcs_exact(a, b).length) return {false, "mismatch at n = " + std::to_string(n)};
  }
  return {true, "1000 pairs, approx_ed_lcs = lcs_exact"};
}

Outcome scaling() {
  std::vector<std::size_t> large, small;
  for (int k = 14; k <= 20; ++k) large.push_back(std::size_t{1} << k);
  for (int k = 10; k <= 13; ++k) small.push_back(std::size_t{1} << k);

  InstanceSpec near;
  near.family = Family::near_identical;
  near.s = 4;
  near.seed = 1;
  const auto fast = bench_scaling(Algorithm::equal, large, near, 5);

  InstanceSpec uniform;
  uniform.family = Family::uniform_random;
  uniform.s = 4;
  uniform.seed = 1;
  const auto exact = bench_scaling(Algorithm::exact, small, uniform, 7);

  char buf[160];
  std::snprintf(buf, sizeof buf, "equal slope %.3f (need < 1.5), lcs_exact slope %.3f (need 2.0 +- 0.3)",
                fast.slope, exact.slope);
  return {fast.slope < 1.5 && std::abs(exact.slope - 2.0) <= 0.3, buf};
}

// Each algorithm set only meets instances it accepts.
constexpr const char* kDeterminismConfigs[] = {
    R"({
  "instances": [
    {"family": "uniform-random", "n": 300, "s": 2, "seed": 1, "count": 4},
    {"family": "case-portfolio", "n": 400, "m": 200, "s": 2, "seed": 4, "alpha": "1/4", "shape": "cross", "count": 2}
  ],
  "algorithms": ["bm", "binary", "imbalanced", "auto", "exact"]
})",
    R"({
  "instances": [
    {"family": "skewed-random", "n": 200, "m": 150, "s": 5, "seed": 2, "count": 3},
    {"family": "unary-adversarial", "n": 600, "s": 3, "seed": 3, "count": 2},
    {"family": "near-identical", "n": 1000, "s": 4, "seed": 5, "edits": 3, "count": 2}
  ],
  "algorithms": ["bm", "reduce", "auto", "exact"]
})",
    R"({
  "instances": [
    {"family": "unary-adversarial", "n": 600, "s": 3, "seed": 3, "count": 2},
    {"family": "near-identical", "n": 1000, "s": 4, "seed": 5, "edits": 3, "count": 2}
  ],
  "algorithms": ["equal"],
  "threads": 2
})"};

std::string read_all(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome determinism(const std::string& cli) {
  std::size_t bytes = 0;
  for (const char* text : kDeterminismConfigs) {
    auto config = parse_experiment_config(Json::parse(text));
    config.threads = 1;
    const auto first = records_to_jsonl(run_experiment(config));
    const auto second = records_to_jsonl(run_experiment(config));
    config.threads = 3;
    const auto threaded = records_to_jsonl(run_experiment(config));
    if (first != second) return {false, "in-process runs differ"};
    if (first != threaded) return {false, "output depends on the thread count"};
    bytes += first.size();
  }
  std::string detail = std::to_string(std::size(kDeterminismConfigs)) +
                       " configs identical across repeats and thread counts (" + std::to_string(bytes) +
                       " bytes)";
  if (cli.empty()) return {true, detail};

  const auto dir = std::filesystem::temp_directory_path() / ("lcsapx-acceptance-" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  Outcome out{true, detail + "; two CLI runs byte-identical per config"};
  for (std::size_t k = 0; k < std::size(kDeterminismConfigs) && out.pass; ++k) {
    const auto config = dir / ("config" + std::to_string(k) + ".json");
    std::ofstream(config) << kDeterminismConfigs[k];
    std::vector<std::string> outputs;
    for (int run = 0; run < 2; ++run) {
      const auto path = dir / ("run" + std::to_string(k) + "-" + std::to_string(run) + ".jsonl");
      const std::string cmd = "\"" + cli + "\" experiment --config \"" + config.string() + "\" --out \"" +
                              path.string() + "\"";
      if (std::system(cmd.c_str()) != 0) {
        out = {false, "CLI experiment failed on config " + std::to_string(k)};
        break;
      }
      outputs.push_back(read_all(path));
    }
    if (out.pass && (outputs[0].empty() || outputs[0] != outputs[1])) {
      out = {false, "CLI runs differ on config " + std::to_string(k)};
    }
  }
  std::filesystem::remove_all(dir);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli;
  std::vector<int> only;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--cli" && i + 1 < argc) {
      cli = argv[++i];
    } else if (arg == "--only" && i + 1 < argc) {
      std::stringstream ss(argv[++i]);
      for (std::string tok; std::getline(ss, tok, ',');) only.push_back(std::stoi(tok));
    } else {
      std::cerr << "usage: acceptance [--cli PATH] [--only N,N,...]\n";
      return 2;
    }
  }
  auto wanted = [&](int k) { return only.empty() || std::find(only.begin(), only.end(), k) != only.end(); };

  std::map<int, Outcome> results;
  std::map<int, double> seconds;
  auto run = [&](int k, const std::function<Outcome()>& f) {
    if (!wanted(k)) return;
    const auto start = std::chrono::steady_clock::now();
    try {
      results[k] = f();
    } catch (const std::exception& e) {
      results[k] = {false, std::string("exception: ") + e.what()};
    }
    seconds[k] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cerr << "  criterion " << k << " done in " << seconds[k] << " s\n";
  };

  run(1, identity);
  run(2, oracle_equivalence);
  run(4, baseline_floor);
  if (wanted(5) || wanted(7)) {
    const auto start = std::chrono::steady_clock::now();
    const auto sweep = binary_sweep();
    const double t = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (wanted(5)) results[5] = sweep.floor, seconds[5] = t;
    if (wanted(7)) results[7] = sweep.gap, seconds[7] = t;
    std::cerr << "  criteria 5 and 7 done in " << t << " s\n";
  }
  run(6, kary_floor);
  run(8, restriction_postcondition);
  run(9, strict_improvement);
  run(10, approx_ed_identity);
  run(11, scaling);
  run(12, [&] { return determinism(cli); });
  run(3, witness_validity);  // last, so it sees the witnesses of every other sweep

  bool all = true;
  for (const auto& [k, outcome] : results) {
    all = all && outcome.pass;
    char time[32];
    std::snprintf(time, sizeof time, "%.1f s", seconds[k]);
    std::cout << "criterion " << k << ": " << (outcome.pass ? "PASS" : "FAIL") << " (" << outcome.detail
              << "; " << time << ")\n";
  }
  return all ? 0 : 1;
}
