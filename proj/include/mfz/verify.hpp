#ifndef MFZ_VERIFY_HPP
#define MFZ_VERIFY_HPP

#include <string>
#include <vector>

namespace mfz {

struct CheckResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;  // measured values and thresholds
  double seconds = 0.0;
};

// Reproduction suite. Suites: "fast" (everything except the long
// enumerations), "paper" (the concrete number reproductions), "full" (all
// checks including the 10^6-sample Monte-Carlo comparison). When `only` is
// nonzero, runs that single check regardless of suite. Prints one line per
// check to stdout when verbose.
std::vector<CheckResult> run_acceptance(const std::string& suite, int only = 0,
                                        bool verbose = true);

}  // namespace mfz

#endif
