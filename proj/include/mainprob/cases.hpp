#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mainprob/elements.hpp"

namespace mainprob {

/// Named initial conditions: a (km), e, I, node, perigee and mean anomaly
/// (degrees).
struct TestCase {
  std::string name;
  double a = 0, e = 0;
  double inc_deg = 0, raan_deg = 0, argp_deg = 0, mean_anomaly_deg = 0;

  KeplerianElements elements() const;
};

const std::vector<TestCase>& builtin_cases();
std::optional<TestCase> find_case(std::string_view name);

}  // namespace mainprob
