#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace holo {

struct CriterionResult {
  int id = 0;
  std::string label;
  bool pass = false;
  std::string detail;  // deterministic for a fixed seed
  double seconds = 0;
};

constexpr int kCriteria = 13;
constexpr std::uint64_t kAcceptanceSeed = 20240611;

std::string criterion_label(int id);
CriterionResult run_criterion(int id, std::uint64_t seed = kAcceptanceSeed);
std::vector<CriterionResult> run_acceptance(std::uint64_t seed = kAcceptanceSeed);

}  // namespace holo
