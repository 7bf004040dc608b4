// One line per acceptance criterion; failing checks are listed under their criterion.
#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "weyl/suites.hpp"

using namespace weyl;

namespace {

struct Criterion {
  int id;
  const char* title;
  std::vector<std::string> suites;
  double limit_seconds;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "thin-paper-tables", {"paper-tables"}, 10},
      {2, "strongly-regular-derived-graph", {"srg"}, 10},
      {3, "trivial-shape-classification", {"trivial-shapes"}, 60},
      {4, "roundup-equivalence", {"roundup-equivalence"}, 600},
      {5, "reconstruction-roundtrip", {"reconstruction-roundtrip"}, 900},
      {6, "automorphism-groups", {"aut-groups"}, 600},
      {7, "isomorphism-separation", {"isomorphism-separation"}, 600},
      {8, "twin-freeness", {"twin-freeness"}, 300},
      {9, "choose-lemma", {"choose-lemma"}, 60},
  };
  // `acceptance 3 5` runs only criteria 3 and 5
  std::vector<int> only;
  for (int a = 1; a < argc; ++a) only.push_back(std::atoi(argv[a]));

  const SuiteOptions opt;
  int failed = 0;
  for (const auto& c : criteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    std::size_t checks = 0, bad = 0;
    double secs = 0;
    std::vector<CheckResult> failures;
    for (const auto& s : c.suites) {
      const SuiteResult r = run_suite(s, opt);
      checks += r.checks.size();
      bad += r.count(CheckStatus::Fail);
      secs += r.seconds;
      for (const auto& ch : r.checks)
        if (ch.status == CheckStatus::Fail) failures.push_back(ch);
    }
    const bool ok = bad == 0 && checks > 0 && secs <= c.limit_seconds;
    failed += !ok;
    std::printf("CRITERION %d %s %s checks=%zu failed=%zu seconds=%.2f limit=%.0f\n", c.id, c.title,
                ok ? "PASS" : "FAIL", checks, bad, secs, c.limit_seconds);
    for (const auto& f : failures)
      std::printf("    %s expected=%s observed=%s\n", f.name.c_str(), f.expected.c_str(), f.observed.c_str());
    std::fflush(stdout);
  }
  std::printf("%d criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
