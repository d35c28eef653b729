#pragma once

#include <json.hpp>

#include "skolem/conditions.hpp"
#include "skolem/model.hpp"

namespace skolem {

// Wire forms. Counts travel as decimal strings so arbitrary precision
// survives any JSON parser.

inline nlohmann::json to_json(const Pairing& pairing) {
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& [t, s] : pairing.pairs()) pairs.push_back({t, s});
  return nlohmann::json{{"pairs", pairs}};
}

inline Pairing pairing_from_json(const nlohmann::json& j) {
  std::vector<Pairing::Pair> pairs;
  for (const auto& p : j.at("pairs")) pairs.push_back({p.at(0).get<int>(), p.at(1).get<int>()});
  return Pairing(std::move(pairs));
}

inline nlohmann::json to_json(const CountReport& report) {
  return nlohmann::json{{"family", family_name(report.family)},
                        {"order", report.order},
                        {"count", report.count.to_decimal()},
                        {"nodes", report.nodes},
                        {"elapsed_ms", report.elapsed.count()}};
}

inline CountReport count_report_from_json(const nlohmann::json& j) {
  CountReport report;
  const auto family = family_from_name(j.at("family").get<std::string>());
  if (!family) throw std::invalid_argument("count_report_from_json: unknown family");
  report.family = *family;
  report.order = j.at("order").get<int>();
  report.count = BigUint::from_decimal(j.at("count").get<std::string>());
  report.nodes = j.at("nodes").get<std::uint64_t>();
  report.elapsed = std::chrono::milliseconds(j.at("elapsed_ms").get<std::int64_t>());
  return report;
}

inline nlohmann::json to_json(const ConditionReport& report) {
  nlohmann::json j{{"parity_ok", report.parity_ok},
                   {"density_ok", report.density_ok},
                   {"extremal", report.extremal}};
  if (report.first_density_failure)
    j["first_density_failure"] = *report.first_density_failure;
  else
    j["first_density_failure"] = nullptr;
  return j;
}

}  // namespace skolem
