#pragma once

// Self-check suite for the expansion algebra. Each identity is evaluated on
// concrete (f, g, ON set) cases and tallied by name.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "boolalg.hpp"
#include "onset.hpp"

namespace onsat {

struct IdentityResult {
  std::string name;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string first_failure;  // empty when nothing failed
};

class IdentityReport {
 public:
  void record(const std::string& name, bool ok, const std::string& detail);
  void merge(const IdentityReport& other);
  const std::vector<IdentityResult>& results() const noexcept { return results_; }
  bool passed() const noexcept;
  /// Sets the detail of failed results that have none yet.
  void fill_missing_details(const std::string& detail);

 private:
  std::vector<IdentityResult> results_;
};

struct IdentityCase {
  BoolFunc f;
  BoolFunc g;
  OnSet base;
};

/// Runs every identity on one case.
IdentityReport check_identities(const IdentityCase& c);

/// Random cases over n variables (1..6), mixing term chains, minterm
/// partitions and element chains as bases.
IdentityReport random_identities(std::size_t n, std::size_t trials, std::uint64_t seed);

/// Every function over n variables (n <= 4), each paired with bases drawn
/// in rotation from a fixed family over the same variables.
IdentityReport exhaustive_identities(std::size_t n);

/// Function with the given truth table: bit i is f at index i (first variable
/// MSB). At most 6 variables.
BoolFunc from_truth_table(const std::vector<VarId>& vars, std::uint64_t table);

}  // namespace onsat
