// Runs every release criterion against the built-in reference data and
// prints one verdict line per criterion. Exits nonzero if any fails.

#include <cstdio>
#include <string>
#include <vector>

#include "chi3/verify.hpp"

namespace {

struct Criterion {
  const char* label;
  std::vector<std::string> checks;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"1: even-weight curve values, both columns, 38 rows", {"m3-even-table"}},
      {"2: odd-weight curve values, 32 rows", {"m3-odd-table"}},
      {"3: weight-40 rows, open locus and product locus", {"high-weight-m30-a111"}},
      {"4: genus-2 recovery including held-out rows", {"m2-bootstrap-holdout"}},
      {"5: weight-zero abelian threefold value is 5", {"a3-trivial-weight"}},
      {"6: structural property suite",
       {"relations-la20", "parameter-independence-la16", "invariant-dims-la20",
        "branching-bookkeeping-la12", "odd-vanishing-la19", "group-orders", "weyl-dims-la8"}},
      {"7: coverage holes report and extension files load", {"coverage-holes"}},
  };

  std::vector<chi3::CheckResult> results = chi3::run_verification(false);
  auto find = [&](const std::string& name) -> const chi3::CheckResult* {
    for (const auto& r : results)
      if (r.name == name) return &r;
    return nullptr;
  };

  int failures = 0;
  for (const auto& c : criteria) {
    bool ok = true;
    double seconds = 0;
    for (const auto& name : c.checks) {
      const chi3::CheckResult* r = find(name);
      ok = ok && r && r->passed && !r->skipped;
      if (r) seconds += r->seconds;
    }
    std::printf("[%s] criterion %s (%.2f s)\n", ok ? "PASS" : "FAIL", c.label, seconds);
    for (const auto& name : c.checks) {
      const chi3::CheckResult* r = find(name);
      if (!r) {
        std::printf("        missing check %s\n", name.c_str());
      } else if (c.checks.size() > 1 || !r->passed) {
        std::printf("        %s %s (%.2f s)%s%s\n", r->passed ? "ok  " : "FAIL", r->name.c_str(),
                    r->seconds, r->detail.empty() ? "" : ": ", r->detail.c_str());
      }
    }
    if (!ok) ++failures;
  }
  std::printf("%d of 7 criteria passed\n", 7 - failures);
  return failures == 0 ? 0 : 1;
}
