#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qflag::verify {

struct CheckResult {
  std::string name;
  bool passed = false;
  long cases = 0;
  double seconds = 0;
  std::string detail;  // counterexample or summary
};

struct Options {
  int max_n = 5;             // caps every check's own size limit
  std::uint64_t seed = 1;
  double sample_scale = 1;   // multiplies sample counts (rounded up, at least 1)
};

// Names of the acceptance checks in order; criterion(i) runs entry i-1.
const std::vector<std::string>& criterion_names();
CheckResult criterion(int id, const Options& opt);

// All criteria plus the module invariants, each capped at opt.max_n.
std::vector<CheckResult> verify_suite(const Options& opt);

}  // namespace qflag::verify
