#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace drsub {

// Outcome of a sampled verification suite. Failures are carried in the
// report rather than thrown.
struct CheckReport {
  std::string name;
  bool pass = true;
  int samples = 0;
  int violations = 0;
  // Samples where the suite's preconditions did not hold (excluded from the
  // violation count, listed in notes).
  int precondition_skips = 0;
  // Most positive violation margin observed (0 when clean).
  double worst = 0.0;
  // Smallest objective value seen while sampling, when relevant.
  double min_value = std::numeric_limits<double>::quiet_NaN();
  std::vector<std::string> notes;

  void record_violation(double margin, const std::string& note) {
    ++violations;
    pass = false;
    if (margin > worst) worst = margin;
    if (notes.size() < 20) notes.push_back(note);
  }
};

}  // namespace drsub
