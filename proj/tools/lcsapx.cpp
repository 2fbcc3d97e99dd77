// Command-line front end: approx, exact, gen, experiment, bench.

#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "lcsapx/bench.hpp"
#include "lcsapx/errors.hpp"
#include "lcsapx/experiment.hpp"
#include "lcsapx/generate.hpp"
#include "lcsapx/ingest.hpp"
#include "lcsapx/multi_solver.hpp"
#include "lcsapx/oracles.hpp"
#include "lcsapx/report.hpp"

using namespace lcsapx;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct InputArgs {
  std::string a;
  std::string b;
  std::string alphabet = "auto";
  bool keep_whitespace = false;

  StringPair load() const {
    IngestOptions options;
    if (alphabet != "auto") options.alphabet = alphabet;
    options.strip_whitespace = !keep_whitespace;
    return ingest(a, b, options);
  }
};

void add_inputs(CLI::App* cmd, InputArgs& in) {
  cmd->add_option("--a", in.a, "first input file")->required();
  cmd->add_option("--b", in.b, "second input file")->required();
  cmd->add_option("--alphabet", in.alphabet, "'auto' or the explicit list of symbol bytes");
  cmd->add_flag("--keep-whitespace", in.keep_whitespace, "keep whitespace bytes as symbols");
}

void emit(const Json& j, const std::string& path) {
  if (path.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    write_file(path, j.dump(2) + "\n");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Approximate and exact longest common subsequence tools"};
  app.require_subcommand(1);

  InputArgs approx_in;
  std::string mode = "auto";
  std::size_t ell = 2;
  std::string schedule_arg = "default";
  std::string approx_json;
  std::size_t approx_cap = kDefaultMaxCells;
  auto* approx = app.add_subcommand("approx", "approximate LCS with a witness");
  add_inputs(approx, approx_in);
  approx->add_option("--mode", mode, "auto, equal, binary or reduce");
  approx->add_option("--ell", ell, "subalphabet size for reduce");
  approx->add_option("--schedule", schedule_arg, "'default' or a JSON schedule file");
  approx->add_option("--json", approx_json, "write the report here instead of stdout");
  approx->add_option("--exact-cap", approx_cap, "attach the exact length when n*m is at most this (0: never)");

  InputArgs exact_in;
  std::size_t max_cells = kDefaultMaxCells;
  std::string exact_json;
  auto* exact = app.add_subcommand("exact", "exact LCS and insert/delete distance");
  add_inputs(exact, exact_in);
  exact->add_option("--max-cells", max_cells, "cell cap for the quadratic oracles");
  exact->add_option("--json", exact_json, "write the result here instead of stdout");

  InstanceSpec gen_spec;
  std::string family = "uniform-random";
  std::string alpha = "3/10";
  std::string skew;
  std::string prefix;
  auto* gen = app.add_subcommand("gen", "generate an instance pair into PREFIX.a and PREFIX.b");
  gen->add_option("--family", family, "uniform-random, skewed-random, unary-adversarial, case-portfolio, near-identical")->required();
  gen->add_option("--n", gen_spec.n, "length of A")->required();
  gen->add_option("--m", gen_spec.m, "length of B (default n)");
  gen->add_option("--s", gen_spec.s, "alphabet size")->required();
  gen->add_option("--seed", gen_spec.seed, "64-bit seed")->required();
  gen->add_option("--out", prefix, "output prefix")->required();
  gen->add_option("--alpha", alpha, "case-portfolio density");
  gen->add_option("--shape", gen_spec.shape, "case-portfolio shape: uniform, middle, cross");
  gen->add_option("--edits", gen_spec.edits, "near-identical substitutions");
  gen->add_option("--skew", skew, "skewed-random weights, comma separated");

  std::string config_path;
  std::string out_path;
  std::string csv_path;
  std::size_t threads = 0;
  auto* experiment = app.add_subcommand("experiment", "run a ratio experiment from a JSON config");
  experiment->add_option("--config", config_path, "experiment JSON")->required();
  experiment->add_option("--out", out_path, "JSONL output")->required();
  experiment->add_option("--csv", csv_path, "optional CSV summary");
  experiment->add_option("--threads", threads, "override the config's thread count");

  std::string algo;
  std::string sizes;
  std::string bench_family = "uniform-random";
  InstanceSpec bench_spec;
  std::size_t reps = 3;
  std::string bench_json;
  auto* bench = app.add_subcommand("bench", "runtime scaling with a fitted log-log slope");
  bench->add_option("--algo", algo, "bm, binary, imbalanced, equal, reduce, auto, exact")->required();
  bench->add_option("--sizes", sizes, "ascending list, e.g. 2^10,2^11,4096")->required();
  bench->add_option("--family", bench_family, "instance family")->required();
  bench->add_option("--seed", bench_spec.seed, "64-bit seed")->required();
  bench->add_option("--s", bench_spec.s, "alphabet size");
  bench->add_option("--reps", reps, "repetitions per size (fastest kept)");
  bench->add_option("--json", bench_json, "write the table here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*approx) {
      const auto [a, b] = approx_in.load();
      SolverConfig config;
      config.mode = parse_solve_mode(mode);
      config.ell = ell;
      config.exact_cap = approx_cap;
      if (schedule_arg != "default") config.schedule = schedule_from_json(Json::parse(read_file(schedule_arg)));
      const auto report = lcs_approx(a, b, config);
      auto j = report_to_json(report);
      j["n"] = a.size();
      j["m"] = b.size();
      j["s"] = a.alphabet_size();
      emit(j, approx_json);
    } else if (*exact) {
      const auto [a, b] = exact_in.load();
      const auto lcs = lcs_exact(a, b, max_cells);
      Json j;
      j["n"] = a.size();
      j["m"] = b.size();
      j["s"] = a.alphabet_size();
      j["lcs"] = lcs.length;
      j["ed"] = ed_exact(a, b, max_cells);
      j["witness"] = witness_to_json(lcs.witness);
      emit(j, exact_json);
    } else if (*gen) {
      gen_spec.family = parse_family(family);
      gen_spec.alpha = Ratio::parse(alpha);
      if (!skew.empty()) {
        for (const auto& w : CLI::detail::split(skew, ',')) {
          gen_spec.skew.push_back(static_cast<std::uint32_t>(Ratio::parse(w).num()));
        }
      }
      const auto inst = generate(gen_spec);
      write_file(prefix + ".a", inst.a.text());
      write_file(prefix + ".b", inst.b.text());
    } else if (*experiment) {
      auto config = parse_experiment_config(Json::parse(read_file(config_path)));
      if (threads > 0) config.threads = threads;
      const auto records = run_experiment(config);
      write_file(out_path, records_to_jsonl(records));
      if (!csv_path.empty()) write_file(csv_path, records_to_csv(records));
    } else if (*bench) {
      bench_spec.family = parse_family(bench_family);
      const auto result = bench_scaling(parse_algorithm(algo), parse_sizes(sizes), bench_spec, reps);
      emit(bench_to_json(result), bench_json);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return is_internal(e.code()) ? kExitInternal : kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: spec: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInternal;
  }
  return 0;
}
