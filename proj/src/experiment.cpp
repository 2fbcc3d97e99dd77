#include "lcsapx/experiment.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <sstream>
#include <thread>

#include "lcsapx/binary_solver.hpp"
#include "lcsapx/errors.hpp"

namespace lcsapx {

namespace {

constexpr std::pair<Algorithm, std::string_view> kAlgorithms[] = {
    {Algorithm::bm, "bm"},         {Algorithm::binary, "binary"},
    {Algorithm::imbalanced, "imbalanced"}, {Algorithm::equal, "equal"},
    {Algorithm::reduce, "reduce"}, {Algorithm::automatic, "auto"},
    {Algorithm::exact, "exact"},
};

void require(bool ok, std::string_view algorithm, const std::string& why) {
  if (!ok) throw Error(ErrorCode::precondition, std::string(algorithm) + ": " + why);
}

template <class T>
T field(const Json& j, const char* name, T fallback) {
  if (!j.contains(name)) return fallback;
  try {
    return j.at(name).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw Error(ErrorCode::spec, std::string(name) + ": wrong type");
  }
}

Ratio ratio_field(const Json& v, const char* name) {
  if (v.is_string()) return Ratio::parse(v.get<std::string>());
  if (v.is_number_integer()) return Ratio(v.get<std::int64_t>());
  if (v.is_number()) return Ratio::from_double(v.get<double>());
  throw Error(ErrorCode::spec, std::string(name) + ": expected a number or \"p/q\"");
}

std::vector<ReportRecord> run_instance(const ExperimentConfig& config, std::size_t id) {
  const auto& spec = config.instances[id];
  const auto inst = generate(spec);
  const auto& a = inst.a;
  const auto& b = inst.b;
  const std::size_t s = spec.s;
  const auto ed = exact_ed_approximator();

  std::optional<std::size_t> exact;
  if (a.empty() || b.size() <= config.max_cells / a.size()) exact = lcs_length(a, b, config.max_cells);

  std::optional<bool> upper_bound;
  if (exact && s == 2) {
    const auto schedule = config.schedule.value_or(derive_schedule(2));
    const auto ctx = BinaryContext::make(a, b);
    if (imbalanced_hypotheses(ctx, schedule).close_frequencies) {
      // lcs <= (2 alpha + delta) m with alpha m = 1(X)
      const auto slack = static_cast<std::int64_t>(*exact) - 2 * static_cast<std::int64_t>(ctx.ones_x);
      upper_bound = at_most(slack, schedule.delta, static_cast<std::int64_t>(ctx.y.size()));
      if (!*upper_bound) {
        throw Error(ErrorCode::internal_contradiction,
                    "instance " + std::to_string(id) + ": lcs exceeds (2 alpha + delta) m");
      }
    }
  }

  std::vector<ReportRecord> out;
  for (auto algorithm : config.algorithms) {
    ReportRecord r;
    r.instance = id;
    r.spec = spec;
    r.algorithm = algorithm;
    const auto start = std::chrono::steady_clock::now();
    auto run = run_algorithm(algorithm, a, b, config.schedule, ed, config.max_cells);
    const auto stop = std::chrono::steady_clock::now();
    if (!validate_witness(a, b, run.answer.witness)) {
      throw Error(ErrorCode::invalid_witness, "instance " + std::to_string(id) + ", " +
                                                  std::string(to_string(algorithm)) + ": witness does not validate");
    }
    r.length = run.answer.length();
    r.exact = exact;
    if (exact) {
      r.ratio = *exact == 0 ? 1.0 : static_cast<double>(r.length) / static_cast<double>(*exact);
      if (r.length > *exact || s * r.length < *exact) {
        throw Error(ErrorCode::contract_violation,
                    "instance " + std::to_string(id) + ", " + std::string(to_string(algorithm)) +
                        ": length " + std::to_string(r.length) + " outside [lcs/s, lcs] for lcs " +
                        std::to_string(*exact));
      }
    }
    if (config.timing) r.wall_time_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    for (const auto& c : run.candidates) r.candidates.emplace_back(c.strategy, c.length());
    r.path = run.path;
    r.schedule_digest = schedule_digest(run.schedule);
    r.upper_bound_ok = upper_bound;
    out.push_back(std::move(r));
  }
  return out;
}

std::string csv_escape(const std::string& v) {
  if (v.find_first_of(",\"\n") == std::string::npos) return v;
  std::string out = "\"";
  for (char c : v) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string_view to_string(Algorithm algorithm) {
  for (const auto& [a, name] : kAlgorithms) {
    if (a == algorithm) return name;
  }
  return "bm";
}

Algorithm parse_algorithm(std::string_view text) {
  for (const auto& [a, name] : kAlgorithms) {
    if (name == text) return a;
  }
  throw Error(ErrorCode::spec, "algorithm: unknown '" + std::string(text) + "'");
}

AlgorithmRun run_algorithm(Algorithm algorithm, const SymbolString& a, const SymbolString& b,
                           const std::optional<ConstantSchedule>& schedule,
                           const EdApproximator& ed, std::size_t max_cells) {
  const std::size_t s = a.alphabet_size();
  const auto name = to_string(algorithm);
  AlgorithmRun run;
  run.schedule = schedule.value_or(derive_schedule(s, ed.ratio));
  if (schedule && !validate_schedule(*schedule, s)) {
    throw Error(ErrorCode::spec, "schedule violates its constraints for s = " + std::to_string(s));
  }

  auto from_report = [&](SolveReport report) {
    run.answer = std::move(report.answer);
    run.candidates = std::move(report.candidates);
    run.path = std::move(report.path);
  };

  switch (algorithm) {
    case Algorithm::bm:
      run.answer = best_match(a, b);
      run.candidates = {run.answer};
      run.path = "bm";
      break;
    case Algorithm::binary:
      require(s == 2, name, "needs a binary alphabet");
      run.candidates = binary_candidates(a, b, run.schedule, ed);
      run.answer = longest(run.candidates);
      run.path = "binary";
      break;
    case Algorithm::imbalanced:
      require(s == 2, name, "needs a binary alphabet");
      run.answer = imbalanced_lcs(a, b, run.schedule, ed);
      run.candidates = {run.answer};
      run.path = "imbalanced";
      break;
    case Algorithm::equal:
      from_report(equal_length_lcs_approx(a, b, run.schedule, ed));
      break;
    case Algorithm::reduce: {
      require(s >= 3, name, "needs at least three symbols");
      SolverConfig config;
      config.mode = SolveMode::reduce;
      config.schedule = run.schedule;
      config.ed = ed;
      from_report(lcs_approx(a, b, config));
      break;
    }
    case Algorithm::automatic: {
      SolverConfig config;
      config.schedule = run.schedule;
      config.ed = ed;
      from_report(lcs_approx(a, b, config));
      break;
    }
    case Algorithm::exact: {
      auto exact = lcs_exact(a, b, max_cells);
      run.answer = {"exact", std::move(exact.witness)};
      run.candidates = {run.answer};
      run.path = "exact";
      break;
    }
  }
  return run;
}

InstanceSpec spec_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::spec, "instance: expected an object");
  InstanceSpec spec;
  spec.family = parse_family(field<std::string>(j, "family", "uniform-random"));
  spec.n = field<std::size_t>(j, "n", 0);
  spec.m = field<std::size_t>(j, "m", 0);
  spec.s = field<std::size_t>(j, "s", 2);
  spec.seed = field<std::uint64_t>(j, "seed", 0);
  spec.skew = field<std::vector<std::uint32_t>>(j, "skew", {});
  if (j.contains("alpha")) spec.alpha = ratio_field(j.at("alpha"), "alpha");
  spec.shape = field<std::string>(j, "shape", "uniform");
  spec.edits = field<std::size_t>(j, "edits", 1);
  validate_spec(spec);
  return spec;
}

Json spec_to_json(const InstanceSpec& spec) {
  Json j;
  j["family"] = to_string(spec.family);
  j["n"] = spec.n;
  j["m"] = spec.length_b();
  j["s"] = spec.s;
  j["seed"] = spec.seed;
  switch (spec.family) {
    case Family::skewed_random: {
      Json w = Json::array();
      if (spec.skew.empty()) {
        for (std::size_t k = 0; k < spec.s; ++k) w.push_back(1u << std::min<std::size_t>(spec.s - 1 - k, 20));
      } else {
        for (auto x : spec.skew) w.push_back(x);
      }
      j["skew"] = std::move(w);
      break;
    }
    case Family::case_portfolio:
      j["alpha"] = spec.alpha.str();
      j["shape"] = spec.shape;
      break;
    case Family::near_identical:
      j["edits"] = spec.edits;
      break;
    default:
      break;
  }
  return j;
}

ExperimentConfig parse_experiment_config(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::spec, "config: expected an object");
  if (!j.contains("instances") || !j.at("instances").is_array()) {
    throw Error(ErrorCode::spec, "instances: expected an array");
  }
  ExperimentConfig config;
  for (const auto& item : j.at("instances")) {
    const auto base = spec_from_json(item);
    const auto count = field<std::size_t>(item, "count", 1);
    for (std::size_t k = 0; k < count; ++k) {
      auto spec = base;
      spec.seed = base.seed + k;
      config.instances.push_back(std::move(spec));
    }
  }
  for (const auto& name : field<std::vector<std::string>>(j, "algorithms", {"bm", "auto"})) {
    config.algorithms.push_back(parse_algorithm(name));
  }
  config.max_cells = field<std::size_t>(j, "max_cells", kDefaultMaxCells);
  config.threads = std::max<std::size_t>(1, field<std::size_t>(j, "threads", 1));
  config.timing = field<bool>(j, "timing", false);
  if (j.contains("schedule")) config.schedule = schedule_from_json(j.at("schedule"));
  return config;
}

std::vector<ReportRecord> run_experiment(const ExperimentConfig& config) {
  const std::size_t total = config.instances.size();
  std::vector<std::vector<ReportRecord>> slots(total);
  std::vector<std::exception_ptr> errors(total);
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t id; (id = next.fetch_add(1)) < total;) {
      try {
        slots[id] = run_instance(config, id);
      } catch (...) {
        errors[id] = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::min(config.threads, std::max<std::size_t>(total, 1));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<ReportRecord> out;
  for (auto& slot : slots) {
    for (auto& r : slot) out.push_back(std::move(r));
  }
  return out;
}

Json record_to_json(const ReportRecord& r) {
  Json j;
  j["instance"] = r.instance;
  j["spec"] = spec_to_json(r.spec);
  j["algorithm"] = to_string(r.algorithm);
  j["length"] = r.length;
  j["exact"] = r.exact ? Json(*r.exact) : Json(nullptr);
  j["ratio"] = r.ratio ? Json(*r.ratio) : Json(nullptr);
  j["wall_time_ms"] = r.wall_time_ms ? Json(*r.wall_time_ms) : Json(nullptr);
  j["path"] = r.path;
  Json cands = Json::array();
  for (const auto& [strategy, length] : r.candidates) cands.push_back({{"strategy", strategy}, {"length", length}});
  j["candidates"] = std::move(cands);
  j["schedule_digest"] = r.schedule_digest;
  j["upper_bound_ok"] = r.upper_bound_ok ? Json(*r.upper_bound_ok) : Json(nullptr);
  return j;
}

std::string records_to_jsonl(const std::vector<ReportRecord>& records) {
  std::string out;
  for (const auto& r : records) {
    out += record_to_json(r).dump();
    out += '\n';
  }
  return out;
}

std::string records_to_csv(const std::vector<ReportRecord>& records) {
  std::ostringstream out;
  out << "instance,family,n,m,s,seed,algorithm,length,exact,ratio,wall_time_ms,path\n";
  for (const auto& r : records) {
    out << r.instance << ',' << to_string(r.spec.family) << ',' << r.spec.n << ',' << r.spec.length_b()
        << ',' << r.spec.s << ',' << r.spec.seed << ',' << to_string(r.algorithm) << ',' << r.length << ',';
    if (r.exact) out << *r.exact;
    out << ',';
    if (r.ratio) out << Json(*r.ratio).dump();
    out << ',';
    if (r.wall_time_ms) out << Json(*r.wall_time_ms).dump();
    out << ',' << csv_escape(r.path) << '\n';
  }
  return out.str();
}

}  // namespace lcsapx
