#include "scan.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <thread>

#include "errors.hpp"

namespace dks {

std::vector<SumContext> admissible_contexts(std::int64_t qmax) {
  std::vector<SumContext> out;
  for (std::int64_t q1 = 2; 2 * q1 <= qmax; ++q1) {
    const auto prim1 = enumerate_characters(q1, true);
    if (prim1.empty()) continue;
    for (std::int64_t q2 = 2; q1 * q2 <= qmax; ++q2) {
      const auto prim2 = enumerate_characters(q2, true);
      for (const auto& c1 : prim1)
        for (const auto& c2 : prim2)
          if (c1.parity() == c2.parity()) out.push_back(make_context(c1, c2));
    }
  }
  std::sort(out.begin(), out.end(), [](const SumContext& a, const SumContext& b) {
    if (a.level() != b.level()) return a.level() < b.level();
    if (a.chi1().label() != b.chi1().label()) return a.chi1().label() < b.chi1().label();
    return a.chi2().label() < b.chi2().label();
  });
  return out;
}

namespace {

ScanRecord scan_one(const SumContext& ctx, const SchreierGenerators& gens) {
  const auto start = std::chrono::steady_clock::now();
  ScanRecord r;
  r.chi1_label = ctx.chi1().label();
  r.chi2_label = ctx.chi2().label();
  r.N = ctx.level();
  r.M = ctx.field_order();
  r.degree = ctx.degree();
  try {
    const auto img = image_lattice(ctx, gens);
    r.denominator = img.lattice.denominator();
    r.basis = img.lattice.basis();
    r.generator_count = img.generator_count;
    r.rank_ok = true;
  } catch (const TheoremViolation&) {
    // Keep the partial lattice so the record shows what went wrong.
    std::vector<Cyclotomic> values;
    for (const auto& g : gens.generators()) values.push_back(newform_sum_matrix(ctx, g).lift(r.M));
    const auto l = Lattice::from_values(r.M, values);
    r.denominator = l.denominator();
    r.basis = l.basis();
    r.generator_count = gens.generators().size();
    r.rank_ok = false;
  }
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  return r;
}

} // namespace

std::vector<ScanRecord> run_scan(const ScanOptions& opts) {
  if (opts.qmax < 3) throw DomainError("scan needs qmax >= 3");
  const auto contexts = admissible_contexts(opts.qmax);

  std::map<std::int64_t, std::shared_ptr<const SchreierGenerators>> gens;
  for (const auto& ctx : contexts)
    if (!gens.count(ctx.level()))
      gens.emplace(ctx.level(), std::make_shared<const SchreierGenerators>(ctx.level()));

  std::vector<ScanRecord> records(contexts.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < contexts.size();) {
      try {
        records[i] = scan_one(contexts[i], *gens.at(contexts[i].level()));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  const unsigned jobs = std::max(1u, std::min<unsigned>(opts.jobs, contexts.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return records;
}

json scan_record_to_json(const ScanRecord& r, bool include_timing) {
  json j{{"chi1_label", r.chi1_label},
         {"chi2_label", r.chi2_label},
         {"N", r.N},
         {"M", r.M},
         {"degree", r.degree},
         {"denominator", bigint_to_json(r.denominator)},
         {"basis", int_matrix_to_json(r.basis)},
         {"generator_count", r.generator_count},
         {"rank_ok", r.rank_ok}};
  if (include_timing) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

std::string scan_to_jsonl(const std::vector<ScanRecord>& records, bool include_timing) {
  std::string out;
  for (const auto& r : records) {
    out += scan_record_to_json(r, include_timing).dump();
    out += '\n';
  }
  return out;
}

void write_scan(const std::filesystem::path& path, const std::vector<ScanRecord>& records,
                bool include_timing) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open " + path.string() + " for writing");
  f << scan_to_jsonl(records, include_timing);
  f.flush();
  if (!f) throw IoError("write to " + path.string() + " failed");
}

} // namespace dks
