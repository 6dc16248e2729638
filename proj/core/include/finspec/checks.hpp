#pragma once

#include <string>
#include <vector>

namespace finspec {

/// Three-way verdict: known_discrepancy marks a check whose outcome matches a
/// recorded expectation that differs from the printed source material, so
/// misprints cannot mask genuine regressions.
enum class Verdict { Pass, Fail, KnownDiscrepancy };

std::string verdict_name(Verdict v);

struct CheckItem {
  std::string id;
  Verdict verdict = Verdict::Pass;
  std::vector<std::string> notes;  // witnesses, counts, counterexamples
};

inline bool all_ok(const std::vector<CheckItem>& items) {
  for (const auto& it : items)
    if (it.verdict == Verdict::Fail) return false;
  return true;
}

}  // namespace finspec
