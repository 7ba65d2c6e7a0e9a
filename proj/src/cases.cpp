#include "mainprob/cases.hpp"

namespace mainprob {

KeplerianElements TestCase::elements() const {
  return {a, e, inc_deg * kDeg, raan_deg * kDeg, argp_deg * kDeg, mean_anomaly_deg * kDeg,
          AnomalyKind::Mean};
}

const std::vector<TestCase>& builtin_cases() {
  static const std::vector<TestCase> cases{
      {"prisma", 6878.137, 0.001, 97.42, 168.162, 20.0, 30.0},
      {"topex", 7707.270, 0.0001, 66.04, 180.001, 270.0, 180.0},
      {"gto", 24460.0, 0.73, 30.0, 170.1, 280.0, 0.0},
  };
  return cases;
}

std::optional<TestCase> find_case(std::string_view name) {
  for (const auto& c : builtin_cases()) {
    if (c.name == name) return c;
  }
  return std::nullopt;
}

}  // namespace mainprob
