#include "lcsapx/report.hpp"

#include <cstdio>

#include "lcsapx/errors.hpp"

namespace lcsapx {

namespace {

struct Field {
  const char* name;
  Ratio ConstantSchedule::*member;
};

constexpr Field kFields[] = {
    {"rho", &ConstantSchedule::rho},
    {"rho_prime", &ConstantSchedule::rho_prime},
    {"beta", &ConstantSchedule::beta},
    {"gamma", &ConstantSchedule::gamma},
    {"delta", &ConstantSchedule::delta},
    {"epsilon_prime", &ConstantSchedule::epsilon_prime},
    {"epsilon", &ConstantSchedule::epsilon},
    {"c", &ConstantSchedule::c},
};

}  // namespace

Json schedule_to_json(const ConstantSchedule& schedule) {
  Json j = Json::object();
  for (const auto& f : kFields) j[f.name] = (schedule.*f.member).to_double();
  return j;
}

ConstantSchedule schedule_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::spec, "schedule: expected an object");
  ConstantSchedule k;
  for (const auto& f : kFields) {
    if (!j.contains(f.name)) throw Error(ErrorCode::spec, std::string("schedule: missing ") + f.name);
    const auto& v = j.at(f.name);
    if (v.is_string()) {
      k.*f.member = Ratio::parse(v.get<std::string>());
    } else if (v.is_number_integer()) {
      k.*f.member = Ratio(v.get<std::int64_t>());
    } else if (v.is_number()) {
      k.*f.member = Ratio::from_double(v.get<double>());
    } else {
      throw Error(ErrorCode::spec, std::string("schedule: ") + f.name + " is not a number");
    }
  }
  return k;
}

std::string schedule_digest(const ConstantSchedule& schedule) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (const auto& f : kFields) {
    const auto text = std::string(f.name) + "=" + (schedule.*f.member).str() + ";";
    for (unsigned char c : text) {
      h ^= c;
      h *= 0x100000001b3ull;
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json witness_to_json(const Witness& w) {
  Json out = Json::array();
  for (const auto& p : w.pairs) out.push_back(Json::array({p.i, p.j}));
  return out;
}

Json report_to_json(const SolveReport& report, bool with_witness) {
  Json j;
  j["length"] = report.answer.length();
  j["strategy"] = report.answer.strategy;
  j["path"] = report.path;
  j["guarantee"] = report.guarantee;
  if (report.exact) {
    j["exact"] = *report.exact;
    j["ratio"] = *report.exact == 0 ? 1.0
                                    : static_cast<double>(report.answer.length()) /
                                          static_cast<double>(*report.exact);
  } else {
    j["exact"] = nullptr;
    j["ratio"] = nullptr;
  }
  Json cands = Json::array();
  for (const auto& c : report.candidates) cands.push_back({{"strategy", c.strategy}, {"length", c.length()}});
  j["candidates"] = std::move(cands);
  if (report.restricted_pair) {
    j["restricted_pair"] = Json::array({(*report.restricted_pair)[0], (*report.restricted_pair)[1]});
  }
  if (report.reduction.subinstances > 0) {
    j["reduction"] = {{"subinstances", report.reduction.subinstances},
                      {"scanned_positions", report.reduction.scanned_positions},
                      {"lifted_pairs", report.reduction.lifted_pairs}};
  }
  j["schedule"] = schedule_to_json(report.schedule);
  j["schedule_digest"] = schedule_digest(report.schedule);
  if (with_witness) j["witness"] = witness_to_json(report.answer.witness);
  return j;
}

}  // namespace lcsapx
