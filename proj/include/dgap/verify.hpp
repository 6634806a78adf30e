#ifndef DGAP_VERIFY_HPP
#define DGAP_VERIFY_HPP

#include <functional>
#include <string>
#include <vector>

namespace dgap::verify {

struct CheckResult {
  int id;
  std::string name;
  bool pass;
  std::string detail;
  double seconds;
};

struct Options {
  bool quick = false;       // reduced subset: walk-sum equality, even-n, free operator
  int precision_bits = 0;   // 0: per-check pinned defaults (256 / 384)
  // invoked as each check completes, in order
  std::function<void(const CheckResult&)> on_result;
};

// Runs the acceptance checks in order and returns their results. Tolerances
// are pinned at the per-check defaults; a precision override relaxes them
// along the documented precision model.
std::vector<CheckResult> run_all(const Options& opt);

bool all_passed(const std::vector<CheckResult>& results);

std::string format_result(const CheckResult& r);

}  // namespace dgap::verify

#endif  // DGAP_VERIFY_HPP
