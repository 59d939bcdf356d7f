#pragma once

#include <string>
#include <vector>

namespace pmap {

enum class Outcome { pass, fail, skipped };

const char* to_string(Outcome o);

struct CheckRow {
  int criterion;
  std::string check;
  int size;
  std::string observed;
  std::string expected;
  Outcome outcome;
};

struct VerifyOptions {
  int max_size = 5;  // rows above this size are reported as skipped
  int jobs = 1;
};

inline constexpr int kCriteria = 11;

const char* criterion_title(int criterion);

/// Runs every acceptance check in a fixed order. The rows do not depend on
/// `jobs`.
std::vector<CheckRow> run_acceptance(const VerifyOptions& options);

/// Pass if every row of the criterion passes, fail if any fails, skipped if
/// none ran.
Outcome criterion_outcome(const std::vector<CheckRow>& rows, int criterion);

}  // namespace pmap
