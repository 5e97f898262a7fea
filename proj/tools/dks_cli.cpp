// dks: command-line front end over the C interface.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dedekind/dedekind.h"

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

constexpr const char* kOutputDirEnv = "DKS_OUTPUT_DIR";

int report_error(dks_status s) {
  std::cerr << "error: " << dks_status_name(s) << ": " << dks_last_error() << '\n';
  // Broken invariants count as failed verification, everything else is a usage or domain error.
  return (s == DKS_ERR_THEOREM || s == DKS_ERR_INTERNAL) ? kVerifyFailed : kUsage;
}

// Prints and frees a string returned by the library.
void print_owned(char* s) {
  std::cout << s << '\n';
  dks_string_free(s);
}

struct Context {
  dks_context* ptr = nullptr;
  ~Context() { dks_context_free(ptr); }
};

void print_report(const char* text, void*) { std::cout << text << std::flush; }

struct PairArgs {
  std::string chi1, chi2;
};

void add_pair(CLI::App* cmd, PairArgs& p) {
  cmd->add_option("--chi1", p.chi1, "first character label, e.g. 3:[1]")->required();
  cmd->add_option("--chi2", p.chi2, "second character label")->required();
}

int cmd_chars(std::int64_t q, bool primitive_only, bool as_json) {
  char* out = nullptr;
  if (auto s = dks_chars_list(q, primitive_only, &out); s != DKS_OK) return report_error(s);
  if (as_json) {
    print_owned(out);
    return kOk;
  }
  const auto rows = nlohmann::json::parse(out);
  dks_string_free(out);
  std::printf("%-24s %8s %9s %6s %6s %s\n", "label", "modulus", "conductor", "order", "parity",
              "primitive");
  for (const auto& r : rows)
    std::printf("%-24s %8lld %9lld %6lld %6s %s\n", r["label"].get<std::string>().c_str(),
                static_cast<long long>(r["modulus"].get<std::int64_t>()),
                static_cast<long long>(r["conductor"].get<std::int64_t>()),
                static_cast<long long>(r["order"].get<std::int64_t>()),
                r["parity"].get<int>() > 0 ? "even" : "odd", r["primitive"].get<bool>() ? "*" : "");
  return kOk;
}

int with_context(const PairArgs& p, const std::function<int(const dks_context*)>& body) {
  Context ctx;
  if (auto s = dks_context_new(p.chi1.c_str(), p.chi2.c_str(), &ctx.ptr); s != DKS_OK)
    return report_error(s);
  return body(ctx.ptr);
}

std::filesystem::path default_scan_path(std::int64_t qmax) {
  std::filesystem::path dir = ".";
  if (const char* env = std::getenv(kOutputDirEnv); env && *env) dir = env;
  return dir / ("scan_q" + std::to_string(qmax) + ".jsonl");
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Newform Dedekind sums: evaluation, identities and image lattices"};
  app.require_subcommand(1);
  // -h is taken by --h on several commands
  app.set_help_flag("--help", "print this help message and exit");
  app.set_version_flag("--version", std::string(dks_version()));

  std::int64_t q = 1;
  bool primitive_only = false, chars_json = false;
  auto* chars = app.add_subcommand("chars", "list the Dirichlet characters mod q");
  chars->add_option("q", q, "modulus")->required()->check(CLI::PositiveNumber);
  chars->add_flag("--primitive", primitive_only, "primitive characters only");
  chars->add_flag("--json", chars_json, "print JSON instead of a table");

  PairArgs eval_pair;
  std::optional<std::int64_t> eval_h, eval_k;
  std::string eval_gamma;
  auto* eval = app.add_subcommand("eval", "evaluate S at (h, k) or at a matrix in Gamma0(N)");
  add_pair(eval, eval_pair);
  auto* opt_h = eval->add_option("--h", eval_h, "numerator h");
  auto* opt_k = eval->add_option("--k", eval_k, "denominator k, a positive multiple of N");
  auto* opt_gamma = eval->add_option("--gamma", eval_gamma, "matrix [[a,b],[c,d]]");
  opt_h->needs(opt_k);
  opt_k->needs(opt_h);
  opt_gamma->excludes(opt_h)->excludes(opt_k);

  PairArgs knopp_pair;
  bool classical = false;
  std::int64_t kh = 0, kk = 1, kn = 1;
  auto* knopp = app.add_subcommand("knopp", "check the classical or the generalized Knopp identity");
  knopp->add_flag("--classical", classical, "classical Dedekind sums");
  auto* kchi1 = knopp->add_option("--chi1", knopp_pair.chi1, "first character label");
  auto* kchi2 = knopp->add_option("--chi2", knopp_pair.chi2, "second character label");
  knopp->add_option("--h", kh)->required();
  knopp->add_option("--k", kk)->required();
  knopp->add_option("--n", kn)->required();
  kchi1->needs(kchi2);
  kchi2->needs(kchi1);

  PairArgs lattice_pair;
  auto* lattice = app.add_subcommand("lattice", "image of Gamma1(N) under S as a lattice");
  add_pair(lattice, lattice_pair);

  std::int64_t qmax = 0;
  unsigned scan_jobs = 1;
  bool timing = false;
  std::string scan_out;
  auto* scan = app.add_subcommand("scan", "image lattices for every admissible pair with q1 q2 <= qmax");
  scan->add_option("--qmax", qmax, "bound on q1 q2")->required()->check(CLI::Range(3, 1000000));
  scan->add_option("--out", scan_out,
                   std::string("output JSONL file (default: $") + kOutputDirEnv + "/scan_q<qmax>.jsonl)");
  scan->add_option("--jobs", scan_jobs, "worker threads")->check(CLI::PositiveNumber);
  scan->add_flag("--timing", timing, "record elapsed_ms per context (output no longer reproducible)");

  PairArgs coh_pair;
  std::size_t coh_samples = 25;
  std::uint64_t coh_seed = 0;
  auto* coh = app.add_subcommand("cohomology", "split and decomposition checks for one pair");
  add_pair(coh, coh_pair);
  coh->add_option("--samples", coh_samples, "random group elements per check")->check(CLI::PositiveNumber);
  auto* coh_seed_opt = coh->add_option("--seed", coh_seed, "random seed");

  std::string suite;
  std::size_t verify_samples = 0;
  std::uint64_t verify_seed = 0;
  unsigned verify_jobs = 1;
  auto* verify = app.add_subcommand("verify", "run a property suite");
  verify->add_option("suite", suite,
                     "knopp-classical, knopp-newform, crossed-hom, scaling, galois, lattice, "
                     "cohomology, independence or all")
      ->required();
  verify->add_option("--samples", verify_samples, "override every sample count");
  auto* verify_seed_opt = verify->add_option("--seed", verify_seed, "random seed");
  verify->add_option("--jobs", verify_jobs, "worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (chars->parsed()) return cmd_chars(q, primitive_only, chars_json);

  if (eval->parsed()) {
    if (!eval_h && eval_gamma.empty()) {
      std::cerr << "error: eval needs --h and --k, or --gamma\n";
      return kUsage;
    }
    return with_context(eval_pair, [&](const dks_context* ctx) {
      char* out = nullptr;
      const auto s = eval_h ? dks_eval_hk(ctx, *eval_h, *eval_k, &out)
                            : dks_eval_gamma(ctx, eval_gamma.c_str(), &out);
      if (s != DKS_OK) return report_error(s);
      print_owned(out);
      return kOk;
    });
  }

  if (knopp->parsed()) {
    if (classical == !knopp_pair.chi1.empty()) {
      std::cerr << "error: knopp needs either --classical or --chi1/--chi2\n";
      return kUsage;
    }
    char* out = nullptr;
    int equal = 0;
    if (classical) {
      if (auto s = dks_knopp_classical(kh, kk, kn, &equal, &out); s != DKS_OK) return report_error(s);
      print_owned(out);
      return equal ? kOk : kVerifyFailed;
    }
    return with_context(knopp_pair, [&](const dks_context* ctx) {
      if (auto s = dks_knopp_newform(ctx, kh, kk, kn, &equal, &out); s != DKS_OK) return report_error(s);
      print_owned(out);
      return equal ? kOk : kVerifyFailed;
    });
  }

  if (lattice->parsed()) {
    return with_context(lattice_pair, [&](const dks_context* ctx) {
      char* out = nullptr;
      if (auto s = dks_lattice_compute(ctx, &out); s != DKS_OK) return report_error(s);
      print_owned(out);
      return kOk;
    });
  }

  if (scan->parsed()) {
    const std::filesystem::path path = scan_out.empty() ? default_scan_path(qmax) : std::filesystem::path(scan_out);
    dks_scan_options opts{qmax, scan_jobs, timing ? 1 : 0};
    std::size_t records = 0;
    int all_ok = 0;
    if (auto s = dks_scan(&opts, path.c_str(), &records, &all_ok); s != DKS_OK) return report_error(s);
    std::cout << "wrote " << records << " records to " << path.string() << '\n';
    if (!all_ok) {
      std::cerr << "some image lattices are not of full rank\n";
      return kVerifyFailed;
    }
    return kOk;
  }

  dks_verify_options vopts;
  dks_verify_options_init(&vopts);

  if (coh->parsed()) {
    if (*coh_seed_opt) vopts.seed = coh_seed;
    vopts.samples = coh_samples;
    return with_context(coh_pair, [&](const dks_context* ctx) {
      int passed = 0;
      if (auto s = dks_cohomology(ctx, &vopts, print_report, nullptr, &passed); s != DKS_OK)
        return report_error(s);
      return passed ? kOk : kVerifyFailed;
    });
  }

  if (verify->parsed()) {
    if (*verify_seed_opt) vopts.seed = verify_seed;
    vopts.samples = verify_samples;
    vopts.jobs = verify_jobs;
    int passed = 0;
    if (auto s = dks_verify(suite.c_str(), &vopts, print_report, nullptr, &passed); s != DKS_OK)
      return report_error(s);
    std::cout << (passed ? "all checks passed" : "verification failed") << '\n';
    return passed ? kOk : kVerifyFailed;
  }
  return kUsage;
}
