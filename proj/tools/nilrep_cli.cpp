// nilrep: command-line front end over the C API.
//
//   nilrep verify    [--case all|generic|nongeneric|trivial] [--seed N] [--inject-fault MODE] ...
//   nilrep orbit     --alpha A --mu M --nu V --lambda L
//   nilrep rep       --case generic --alpha A --lambda L --n s,x,y,t --k k1,k2 [--grid]
//   nilrep decompose --case generic --alpha A --lambda L [--samples 101]
//
// Exit codes: 0 all checks passed, 1 a mathematical check failed, 2 usage or configuration error.

#include "nilrep/nilrep.h"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct ReportDeleter {
  void operator()(nilrep_report* r) const { nilrep_report_free(r); }
};
struct CaseDeleter {
  void operator()(nilrep_case* c) const { nilrep_case_free(c); }
};
using ReportPtr = std::unique_ptr<nilrep_report, ReportDeleter>;
using CasePtr = std::unique_ptr<nilrep_case, CaseDeleter>;

struct OutputOptions {
  std::string format = "text";
  std::string out;
};

struct CaseOptions {
  std::string kind = "generic";
  std::string alpha = "0";
  std::string lambda = "1";
  std::string nu = "1";
};

int report_error(nilrep_status status)
{
  std::cerr << "nilrep: " << nilrep_status_string(status) << ": " << nilrep_last_error() << "\n";
  return status == NILREP_ERR_INTERNAL ? kExitCheckFailed : kExitUsage;
}

int emit(const nilrep_report* report, const OutputOptions& opts)
{
  const char* body = opts.format == "json" ? nilrep_report_json(report) : nilrep_report_text(report);
  if (opts.out.empty()) {
    std::cout << body;
  } else {
    std::ofstream file(opts.out, std::ios::binary);
    if (!file) {
      std::cerr << "nilrep: cannot open " << opts.out << " for writing\n";
      return kExitUsage;
    }
    file << body;
  }
  return nilrep_report_passed(report) ? kExitPass : kExitCheckFailed;
}

void add_output_options(CLI::App* cmd, OutputOptions& opts)
{
  cmd->add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--out", opts.out, "Write the report to this path instead of stdout");
}

void add_case_options(CLI::App* cmd, CaseOptions& opts)
{
  cmd->add_option("--case", opts.kind, "Representation: generic, nongeneric or trivial")
      ->check(CLI::IsMember({"generic", "nongeneric", "trivial"}));
  cmd->add_option("--alpha", opts.alpha, "alpha (rational, generic case)");
  cmd->add_option("--lambda", opts.lambda, "lambda (nonzero rational, generic case)");
  cmd->add_option("--nu", opts.nu, "nu (rational, non-generic case)");
}

nilrep_status make_case(const CaseOptions& opts, CasePtr& out)
{
  nilrep_case* raw = nullptr;
  nilrep_status st = NILREP_OK;
  if (opts.kind == "generic")
    st = nilrep_case_create(NILREP_CASE_GENERIC, opts.alpha.c_str(), opts.lambda.c_str(), &raw);
  else if (opts.kind == "nongeneric")
    st = nilrep_case_create(NILREP_CASE_NONGENERIC, opts.nu.c_str(), nullptr, &raw);
  else
    st = nilrep_case_create(NILREP_CASE_TRIVIAL, nullptr, nullptr, &raw);
  out.reset(raw);
  return st;
}

std::vector<std::string> split_tuple(const std::string& text)
{
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    parts.push_back(item);
  return parts;
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Orbit-method representations of N = S x| H1 and the (K, N) Gelfand pair check"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(nilrep_version()));

  // verify
  OutputOptions verify_out;
  nilrep_verify_options vopts;
  nilrep_verify_options_init(&vopts);
  std::string v_case = "all", v_alpha, v_lambda, v_nu, v_fault = "none";
  std::uint64_t v_seed = vopts.seed;
  auto* verify = app.add_subcommand("verify", "Run the full verification suite");
  verify->add_option("--case", v_case, "Cases to verify")->check(CLI::IsMember({"all", "generic", "nongeneric", "trivial"}));
  verify->add_option("--alpha", v_alpha, "alpha for a single generic case");
  verify->add_option("--lambda", v_lambda, "lambda for a single generic case");
  verify->add_option("--nu", v_nu, "nu for a single non-generic case");
  auto* seed_opt = verify->add_option("--seed", v_seed, "RNG seed (falls back to $NILREP_SEED, then 1)");
  verify->add_option("--group-trials", vopts.group_trials, "Randomized group/algebra trials per check");
  verify->add_option("--rep-trials", vopts.rep_trials, "Randomized homomorphism trials per case");
  verify->add_option("--pair-trials", vopts.pair_trials, "Randomized trials for the remaining checks");
  verify->add_option("--grid-n", vopts.grid_n, "Grid size (power of two)");
  verify->add_option("--grid-L", vopts.grid_half_width, "Grid half-width L");
  verify->add_option("--grid-functions", vopts.grid_functions, "Random grid functions per operator");
  verify->add_option("--tolerance", vopts.grid_tolerance, "Relative tolerance of the grid unitarity check");
  verify->add_option("--inject-fault", v_fault, "Inject a known error to exercise the verifier");
  add_output_options(verify, verify_out);

  // orbit
  OutputOptions orbit_out;
  std::string o_alpha = "0", o_mu = "0", o_nu = "0", o_lambda = "0";
  auto* orbit = app.add_subcommand("orbit", "Classify the coadjoint orbit of (alpha, mu, nu, lambda)");
  orbit->add_option("--alpha", o_alpha, "alpha");
  orbit->add_option("--mu", o_mu, "mu");
  orbit->add_option("--nu", o_nu, "nu");
  orbit->add_option("--lambda", o_lambda, "lambda");
  add_output_options(orbit, orbit_out);

  // rep
  OutputOptions rep_out;
  CaseOptions rep_case;
  std::string r_point = "0,0,0,0", r_k = "0,0";
  nilrep_rep_options ropts;
  nilrep_rep_options_init(&ropts);
  bool r_grid = false;
  auto* rep = app.add_subcommand("rep", "Print rho(n) and omega(k) as phase-shift operators");
  add_case_options(rep, rep_case);
  rep->add_option("--n", r_point, "Group element s,x,y,t");
  rep->add_option("--k", r_k, "K element k1,k2");
  rep->add_flag("--grid", r_grid, "Apply the operators to a sampled Gaussian and report norms");
  rep->add_option("--grid-n", ropts.grid_n, "Grid size (power of two)");
  rep->add_option("--grid-L", ropts.grid_half_width, "Grid half-width L");
  add_output_options(rep, rep_out);

  // decompose
  OutputOptions dec_out;
  CaseOptions dec_case;
  std::size_t samples = 101;
  auto* decompose = app.add_subcommand("decompose", "Decompose omega into characters of K");
  add_case_options(decompose, dec_case);
  decompose->add_option("--samples", samples, "Number of u sample points");
  add_output_options(decompose, dec_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (verify->parsed()) {
    if (seed_opt->count() == 0) {
      if (const char* env = std::getenv("NILREP_SEED")) {
        try {
          v_seed = std::stoull(env);
        } catch (const std::exception&) {
          std::cerr << "nilrep: NILREP_SEED is not an integer: " << env << "\n";
          return kExitUsage;
        }
      }
    }
    vopts.seed = v_seed;
    vopts.case_selector = v_case.c_str();
    vopts.alpha = v_alpha.empty() ? nullptr : v_alpha.c_str();
    vopts.lambda = v_lambda.empty() ? nullptr : v_lambda.c_str();
    vopts.nu = v_nu.empty() ? nullptr : v_nu.c_str();
    vopts.fault = v_fault.c_str();
    if (vopts.alpha && !vopts.lambda) {
      std::cerr << "nilrep: --alpha needs --lambda\n";
      return kExitUsage;
    }
    nilrep_report* raw = nullptr;
    nilrep_status st = nilrep_verify(&vopts, &raw);
    ReportPtr report(raw);
    if (st != NILREP_OK)
      return report_error(st);
    return emit(report.get(), verify_out);
  }

  if (orbit->parsed()) {
    nilrep_report* raw = nullptr;
    nilrep_status st = nilrep_orbit(o_alpha.c_str(), o_mu.c_str(), o_nu.c_str(), o_lambda.c_str(), &raw);
    ReportPtr report(raw);
    if (st != NILREP_OK)
      return report_error(st);
    return emit(report.get(), orbit_out);
  }

  if (rep->parsed()) {
    CasePtr c;
    if (nilrep_status st = make_case(rep_case, c); st != NILREP_OK)
      return report_error(st);
    auto coords = split_tuple(r_point);
    auto ks = split_tuple(r_k);
    if (coords.size() != 4 || ks.size() != 2) {
      std::cerr << "nilrep: --n takes four comma-separated rationals and --k two\n";
      return kExitUsage;
    }
    for (std::size_t i = 0; i < 4; ++i)
      ropts.point[i] = coords[i].c_str();
    ropts.k1 = ks[0].c_str();
    ropts.k2 = ks[1].c_str();
    ropts.grid_demo = r_grid ? 1 : 0;
    nilrep_report* raw = nullptr;
    nilrep_status st = nilrep_rep(c.get(), &ropts, &raw);
    ReportPtr report(raw);
    if (st != NILREP_OK)
      return report_error(st);
    return emit(report.get(), rep_out);
  }

  if (decompose->parsed()) {
    CasePtr c;
    if (nilrep_status st = make_case(dec_case, c); st != NILREP_OK)
      return report_error(st);
    nilrep_report* raw = nullptr;
    nilrep_status st = nilrep_decompose(c.get(), samples, &raw);
    ReportPtr report(raw);
    if (st != NILREP_OK)
      return report_error(st);
    return emit(report.get(), dec_out);
  }
  return kExitUsage;
}
