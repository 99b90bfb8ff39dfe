#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace phyp {

// One property of the library measured over a batch of samples. A row
// passes when maxResidual <= threshold.
struct CheckRow {
  std::string name;
  int samples;
  double maxResidual;
  double threshold;
  bool pass;
};

const std::vector<std::string>& check_suite_names();  // without "all"

// suite: one of check_suite_names() or "all". Throws DomainError otherwise.
std::vector<CheckRow> run_check_suite(const std::string& suite, std::uint64_t seed);

}  // namespace phyp
