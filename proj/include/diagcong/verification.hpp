#ifndef DIAGCONG_VERIFICATION_HPP_
#define DIAGCONG_VERIFICATION_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace diagcong {

struct CheckResult {
  std::string name;
  bool        pass;
  std::string detail;   // empty on pass unless informative
  double      seconds;
};

// The ten acceptance checks, in order.  Each prints nothing; run them via
// run_verification to get one PASS/FAIL line per check on `out`.
std::vector<CheckResult> run_acceptance_checks(std::ostream* progress);

// Prints the scoreboard and returns the number of failures.
int run_verification(std::ostream& out, std::ostream& progress);

}  // namespace diagcong

#endif  // DIAGCONG_VERIFICATION_HPP_
