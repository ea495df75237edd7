// Acceptance suite: runs every verification target once (shared cache) and
// reports one line per acceptance criterion, with its runtime budget.

#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "tcs/verify.hpp"

int main() {
  std::vector<tcs::VerifyResult> results = tcs::run_verify("all", 4);
  std::map<std::string, tcs::VerifyResult> by_name;
  for (const auto& r : results) by_name[r.name] = r;

  struct Criterion {
    std::string label;
    std::vector<std::string> targets;
    double budget_seconds;
  };
  const std::vector<Criterion> criteria = {
      {"1 minimal scaffold quotients are permutahedral fans (n<=4)", {"permutahedron"}, 30},
      {"2 square scaffold quotients are squares of permutahedral fans (n<=2)", {"square"}, 120},
      {"3 sliced scaffold quotients are bipermutahedral fans (n<=2)", {"bipermutahedron"}, 900},
      {"4 half-mark refinement yields the index-two quotient", {"sqrt-stack"}, 1},
      {"5 chain stratum with weights 0, e1, e1+e2", {"chain-stratum"}, 1},
      {"6 planar strata reports (quilt and hexagon examples)",
       {"square-stratum", "biperm-stratum"}, 10},
      {"7 certificate suite over the scaffold corpus", {"certificates"}, 300},
      {"8 randomized property suite (>= 1000 cases)", {"properties"}, 120},
  };

  bool all = true;
  for (const auto& c : criteria) {
    bool pass = true;
    double seconds = 0;
    std::string detail;
    for (const auto& t : c.targets) {
      const auto& r = by_name.at(t);
      pass = pass && r.pass;
      seconds += r.seconds;
      if (!detail.empty()) detail += " | ";
      detail += r.detail;
    }
    if (seconds > c.budget_seconds) {
      pass = false;
      detail += " [over budget]";
    }
    std::printf("[%s] criterion %s (%.2fs, budget %.0fs) %s\n", pass ? "PASS" : "FAIL",
                c.label.c_str(), seconds, c.budget_seconds, detail.c_str());
    all = all && pass;
  }
  return all ? 0 : 1;
}
