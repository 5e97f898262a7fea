#include "dedekind/dedekind.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "core/cohomology.hpp"
#include "core/errors.hpp"
#include "core/hecke.hpp"
#include "core/lattice.hpp"
#include "core/scan.hpp"
#include "core/serialize.hpp"
#include "core/verify.hpp"

struct dks_context {
  dks::SumContext ctx;
};

namespace {

thread_local std::string last_error;

dks_status fail(dks_status s, const char* what) {
  last_error = what;
  return s;
}

template <class Fn>
dks_status guarded(Fn&& fn) {
  try {
    last_error.clear();
    return fn();
  } catch (const dks::ValidationError& e) {
    return fail(DKS_ERR_VALIDATION, e.what());
  } catch (const dks::ParseError& e) {
    return fail(DKS_ERR_PARSE, e.what());
  } catch (const dks::UsageError& e) {
    return fail(DKS_ERR_USAGE, e.what());
  } catch (const dks::NotRationalError& e) {
    return fail(DKS_ERR_NOT_RATIONAL, e.what());
  } catch (const dks::DomainError& e) {
    return fail(DKS_ERR_DOMAIN, e.what());
  } catch (const dks::TheoremViolation& e) {
    return fail(DKS_ERR_THEOREM, e.what());
  } catch (const dks::InternalError& e) {
    return fail(DKS_ERR_INTERNAL, e.what());
  } catch (const dks::IoError& e) {
    return fail(DKS_ERR_IO, e.what());
  } catch (const std::bad_alloc&) {
    return fail(DKS_ERR_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return fail(DKS_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(DKS_ERR_INTERNAL, "unknown exception");
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

dks_status emit(const dks::json& j, char** out) {
  *out = dup(j.dump());
  return DKS_OK;
}

dks::VerifyConfig to_config(const dks_verify_options* opts) {
  dks::VerifyConfig cfg;
  if (!opts) return cfg;
  cfg.seed = opts->seed;
  cfg.jobs = opts->jobs == 0 ? 1 : opts->jobs;
  if (opts->samples > 0) cfg.set_samples(opts->samples);
  return cfg;
}

} // namespace

#define DKS_REQUIRE(p)                                          \
  do {                                                          \
    if (!(p)) return fail(DKS_ERR_NULL, #p " must not be NULL"); \
  } while (0)

extern "C" {

const char* dks_version(void) { return "0.1.0"; }

const char* dks_last_error(void) { return last_error.c_str(); }

const char* dks_status_name(dks_status status) {
  switch (status) {
    case DKS_OK: return "ok";
    case DKS_ERR_DOMAIN: return "domain error";
    case DKS_ERR_VALIDATION: return "validation error";
    case DKS_ERR_PARSE: return "parse error";
    case DKS_ERR_NOT_RATIONAL: return "not rational";
    case DKS_ERR_USAGE: return "usage error";
    case DKS_ERR_IO: return "I/O error";
    case DKS_ERR_THEOREM: return "theorem violation";
    case DKS_ERR_INTERNAL: return "internal error";
    case DKS_ERR_NULL: return "null argument";
    case DKS_ERR_MEMORY: return "out of memory";
  }
  return "unknown status";
}

void dks_string_free(char* s) { std::free(s); }

dks_status dks_chars_list(int64_t q, int primitive_only, char** out_json) {
  DKS_REQUIRE(out_json);
  return guarded([&] {
    if (q < 1) throw dks::DomainError("modulus must be positive");
    dks::json rows = dks::json::array();
    for (const auto& chi : dks::enumerate_characters(q, primitive_only != 0))
      rows.push_back(dks::character_to_json(chi));
    return emit(rows, out_json);
  });
}

dks_status dks_context_new(const char* chi1_label, const char* chi2_label, dks_context** out) {
  DKS_REQUIRE(chi1_label);
  DKS_REQUIRE(chi2_label);
  DKS_REQUIRE(out);
  return guarded([&] {
    *out = new dks_context{dks::make_context(dks::DirichletCharacter::parse(chi1_label),
                                             dks::DirichletCharacter::parse(chi2_label))};
    return DKS_OK;
  });
}

void dks_context_free(dks_context* ctx) { delete ctx; }

dks_status dks_context_info(const dks_context* ctx, char** out_json) {
  DKS_REQUIRE(ctx);
  DKS_REQUIRE(out_json);
  return guarded([&] {
    const auto& c = ctx->ctx;
    return emit(dks::json{{"chi1", c.chi1().label()},
                          {"chi2", c.chi2().label()},
                          {"psi", c.psi().label()},
                          {"N", c.level()},
                          {"M", c.field_order()},
                          {"degree", c.degree()}},
                out_json);
  });
}

dks_status dks_eval_hk(const dks_context* ctx, int64_t h, int64_t k, char** out_json) {
  DKS_REQUIRE(ctx);
  DKS_REQUIRE(out_json);
  return guarded([&] { return emit(dks::value_to_json(dks::newform_sum_hk(ctx->ctx, h, k)), out_json); });
}

dks_status dks_eval_gamma(const dks_context* ctx, const char* matrix, char** out_json) {
  DKS_REQUIRE(ctx);
  DKS_REQUIRE(matrix);
  DKS_REQUIRE(out_json);
  return guarded([&] {
    const auto gamma = dks::matrix_from_string(matrix);
    return emit(dks::value_to_json(dks::newform_sum_matrix(ctx->ctx, gamma)), out_json);
  });
}

dks_status dks_knopp_classical(int64_t h, int64_t k, int64_t n, int* equal, char** out_json) {
  DKS_REQUIRE(equal);
  DKS_REQUIRE(out_json);
  return guarded([&] {
    const auto r = dks::knopp_check_classical(h, k, n);
    *equal = r.equal ? 1 : 0;
    return emit(dks::knopp_to_json(r), out_json);
  });
}

dks_status dks_knopp_newform(const dks_context* ctx, int64_t h, int64_t k, int64_t n, int* equal,
                             char** out_json) {
  DKS_REQUIRE(ctx);
  DKS_REQUIRE(equal);
  DKS_REQUIRE(out_json);
  return guarded([&] {
    const auto r = dks::knopp_check_newform(ctx->ctx, h, k, n);
    *equal = r.equal ? 1 : 0;
    return emit(dks::knopp_to_json(r), out_json);
  });
}

dks_status dks_lattice_compute(const dks_context* ctx, char** out_json) {
  DKS_REQUIRE(ctx);
  DKS_REQUIRE(out_json);
  return guarded([&] {
    const auto img = dks::image_lattice(ctx->ctx);
    auto j = dks::lattice_to_json(img.lattice);
    j["generator_count"] = img.generator_count;
    return emit(j, out_json);
  });
}

dks_status dks_scan(const dks_scan_options* opts, const char* out_path, size_t* records,
                    int* all_rank_ok) {
  DKS_REQUIRE(opts);
  DKS_REQUIRE(out_path);
  return guarded([&] {
    dks::ScanOptions o;
    o.qmax = opts->qmax;
    o.jobs = opts->jobs == 0 ? 1 : opts->jobs;
    o.include_timing = opts->include_timing != 0;
    const auto recs = dks::run_scan(o);
    dks::write_scan(out_path, recs, o.include_timing);
    bool ok = true;
    for (const auto& r : recs) ok = ok && r.rank_ok;
    if (records) *records = recs.size();
    if (all_rank_ok) *all_rank_ok = ok ? 1 : 0;
    return DKS_OK;
  });
}

void dks_verify_options_init(dks_verify_options* opts) {
  if (!opts) return;
  const dks::VerifyConfig cfg;
  opts->seed = cfg.seed;
  opts->jobs = cfg.jobs;
  opts->samples = 0;
}

dks_status dks_cohomology(const dks_context* ctx, const dks_verify_options* opts,
                          dks_report_fn report, void* user, int* passed) {
  DKS_REQUIRE(ctx);
  DKS_REQUIRE(passed);
  return guarded([&] {
    const auto r = dks::cohomology_check(ctx->ctx, to_config(opts));
    if (report) report(dks::format_suite(r).c_str(), user);
    *passed = r.passed() ? 1 : 0;
    return DKS_OK;
  });
}

dks_status dks_verify(const char* suite, const dks_verify_options* opts, dks_report_fn report,
                      void* user, int* passed) {
  DKS_REQUIRE(suite);
  DKS_REQUIRE(passed);
  return guarded([&] {
    bool ok = true;
    dks::run_verify(suite, to_config(opts), [&](const dks::SuiteResult& r) {
      ok = ok && r.passed();
      if (report) report(dks::format_suite(r).c_str(), user);
    });
    *passed = ok ? 1 : 0;
    return DKS_OK;
  });
}

} // extern "C"
