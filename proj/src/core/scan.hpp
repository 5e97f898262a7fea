#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "lattice.hpp"
#include "serialize.hpp"

namespace dks {

struct ScanRecord {
  std::string chi1_label, chi2_label;
  std::int64_t N = 0, M = 0;
  int degree = 0;
  BigInt denominator;
  IntMatrix basis;
  std::size_t generator_count = 0;
  bool rank_ok = false;
  std::int64_t elapsed_ms = 0;
};

struct ScanOptions {
  std::int64_t qmax = 9;
  unsigned jobs = 1;
  /// Wall-clock per record is not reproducible, so it is written only on request.
  bool include_timing = false;
};

/// Ordered primitive pairs (chi1 mod q1, chi2 mod q2), 1 < q1, q2, q1 q2 <= qmax,
/// chi1 chi2 even; sorted by (N, chi1 label, chi2 label).
std::vector<SumContext> admissible_contexts(std::int64_t qmax);

/// Computes one record per admissible context, in the order above.
std::vector<ScanRecord> run_scan(const ScanOptions& opts);

json scan_record_to_json(const ScanRecord& r, bool include_timing);
std::string scan_to_jsonl(const std::vector<ScanRecord>& records, bool include_timing);
/// Throws IoError when the file cannot be written.
void write_scan(const std::filesystem::path& path, const std::vector<ScanRecord>& records,
                bool include_timing);

} // namespace dks
