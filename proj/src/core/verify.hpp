#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "dedekind_sum.hpp"

namespace dks {

/// Sample counts default to the sizes the identities are specified at.
struct VerifyConfig {
  std::uint64_t seed = 20240601;
  unsigned jobs = 1;
  std::size_t crossed_hom_pairs = 50;
  std::size_t scaling_pairs = 20;
  std::size_t galois_samples = 20;
  std::size_t offset_samples = 100;
  std::size_t split_samples = 50;
  std::size_t decomposition_samples = 25;
  std::size_t knopp_h_per_k = 10;

  /// Sets every sample count at once.
  void set_samples(std::size_t n);
};

struct CheckResult {
  std::string name;
  std::size_t cases = 0;
  bool passed = true;
  std::string counterexample;  // first failure only
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;
  double seconds = 0;

  bool passed() const;
};

const std::vector<std::string>& verify_suite_names();

/// Every admissible primitive pair for the moduli pairs
/// (3,3),(3,4),(4,3),(3,5),(5,3),(4,5),(5,4),(5,5),(3,7),(7,3).
std::vector<SumContext> acceptance_contexts();

/// Runs one suite, or all of them for "all"; throws UsageError on an unknown name.
/// `on_result` (optional) sees each suite as it finishes.
std::vector<SuiteResult> run_verify(std::string_view suite, const VerifyConfig& cfg,
                                    const std::function<void(const SuiteResult&)>& on_result = {});

/// Split check against every character mod N and the decomposition check,
/// for a single context (suite name "cohomology").
SuiteResult cohomology_check(const SumContext& ctx, const VerifyConfig& cfg);

/// One line per check: "PASS suite/check (n cases)" or "FAIL ...: counterexample".
std::string format_suite(const SuiteResult& r);

} // namespace dks
