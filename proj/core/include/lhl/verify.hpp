#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lhl/io.hpp"
#include "lhl/simplex.hpp"

namespace lhl {

struct CheckResult {
  std::string id;
  std::string parameters;
  std::string expected;
  std::string actual;
  bool passed = false;

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct VerificationReport {
  std::string suite;
  std::vector<CheckResult> checks;  // sorted by id
  std::int64_t duration_ms = 0;

  bool passed() const;
  void sort_checks();

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

enum class TableFormat { Json, Csv };

Json to_json(const VerificationReport& report);
VerificationReport report_from_json(const Json& value);
// CSV has a header row and one row per check.
std::string emit_table(const VerificationReport& report, TableFormat format);

// Zero means "use the suite's default".
struct VerifyOptions {
  int max_n = 0;
  int max_entry = 0;
  int samples = 0;
  std::uint64_t seed = 20240601;
  std::int64_t max_points = 10'000;  // per-simplex cap for parallelepiped suites
};

// derangement-bijection, box-polynomial, recursion, edgewise, colored, faces,
// betke-mcmullen, order-reflexive, branden-leander, box-unimodal.
const std::vector<std::string>& suite_names();

// Runs one suite, or every suite for "all". Throws InvalidArgument for unknown names.
VerificationReport run_suite(std::string_view name, const VerifyOptions& options = {});

}  // namespace lhl
