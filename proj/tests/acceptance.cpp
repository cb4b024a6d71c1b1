// Acceptance suite: one PASS/FAIL line per criterion.
//
//   nilrep_acceptance [path/to/nilrep]
//
// With a CLI path, criterion 13 also drives the executable and checks its
// exit codes and byte-identical JSON; without one only the C API is used.

#include "nilrep/gelfand.hpp"
#include "nilrep/nilrep.h"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

using namespace nilrep;

namespace {

constexpr int kGroupTrials = 1000;
constexpr int kOrbitTrials = 500;
constexpr int kMProductTrials = 500;
constexpr int kFamilySamples = 200;
constexpr int kPerturbations = 20;
constexpr int kRepPairs = 1000;
constexpr int kOmegaPairs = 500;
constexpr int kIntertwineGeneral = 500;
constexpr int kIntertwinePerGenerator = 125;
constexpr int kCharacterPairs = 500;
constexpr std::size_t kCharacterSample = 101;
constexpr std::size_t kGridN = 1024;
constexpr double kGridL = 16;
constexpr int kGridFunctions = 50;
constexpr double kGridTolerance = 1e-12;
constexpr double kRuntimeLimit = 5.0;

struct Outcome {
  bool passed;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& title, const Outcome& o)
{
  std::cout << (o.passed ? "PASS" : "FAIL") << "  criterion " << id << ": " << title << "  [" << o.detail
            << "]" << std::endl;
  if (!o.passed)
    ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start)
{
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

NPoint random_point(RationalSampler& r) { return NPoint::from_array(r.next_vec()); }
NVector random_vector(RationalSampler& r) { return NVector::from_array(r.next_vec()); }
KParams random_k(RationalSampler& r) { return {r.next(), r.next()}; }

std::vector<RepCase> acceptance_cases()
{
  return VerifyConfig::defaults().selected_cases();
}

// ---- 1 ------------------------------------------------------------------

Outcome group_algebra_suite()
{
  auto start = std::chrono::steady_clock::now();
  RationalSampler r(1001);
  int assoc = 0, inverse = 0, jacobi = 0, ad_hom = 0, ad_bracket = 0;
  for (int i = 0; i < kGroupTrials; ++i) {
    auto a = random_point(r), b = random_point(r), c = random_point(r);
    assoc += group_mul(group_mul(a, b), c) == group_mul(a, group_mul(b, c));
    inverse += group_mul(a, group_inv(a)) == NPoint::identity() && group_mul(group_inv(a), a) == NPoint::identity();
    auto u = random_vector(r), v = random_vector(r), w = random_vector(r);
    jacobi += jacobi_defect(u, v, w).is_zero() && bracket(u, v) == -bracket(v, u);
    ad_hom += Ad(group_mul(a, b)) == Ad(a) * Ad(b);
    Matrix4 m = Ad(c);
    auto mu = NVector::from_array(m * u.to_array()), mv = NVector::from_array(m * v.to_array());
    ad_bracket += NVector::from_array(m * bracket(u, v).to_array()) == bracket(mu, mv);
  }
  double t = seconds_since(start);
  std::ostringstream os;
  os << "associativity " << assoc << "/" << kGroupTrials << ", inverses " << inverse << "/" << kGroupTrials
     << ", jacobi " << jacobi << "/" << kGroupTrials << ", Ad-hom " << ad_hom << "/" << kGroupTrials
     << ", Ad-bracket " << ad_bracket << "/" << kGroupTrials << ", " << t << " s (limit " << kRuntimeLimit
     << " s)";
  const bool all = assoc == kGroupTrials && inverse == kGroupTrials && jacobi == kGroupTrials &&
                   ad_hom == kGroupTrials && ad_bracket == kGroupTrials;
  return {all && t < kRuntimeLimit, os.str()};
}

// ---- 2 ------------------------------------------------------------------

Outcome nilpotency_structure()
{
  auto series = lower_central_series();
  std::ostringstream os;
  os << "dims [";
  for (std::size_t i = 0; i < series.size(); ++i)
    os << (i ? "," : "") << series[i].dim();
  os << "], center " << to_string(center());
  const bool dims = series.size() == 3 && series[0].dim() == 2 && series[1].dim() == 1 && series[2].dim() == 0;
  const bool z = center() == Subspace::span(std::vector<NVector>{NVector::basis(3)});
  return {dims && z, os.str()};
}

// ---- 3 ------------------------------------------------------------------

Outcome aut0_family()
{
  RationalSampler r(1003);
  int accepted = 0;
  for (int i = 0; i < kFamilySamples; ++i) {
    AParams a{r.next_positive()};
    MParams m{r.next(), r.next(), r.next(), r.next(), r.next()};
    accepted += is_automorphism(aut0_element(a, m).matrix());
  }
  // Entries pinned by the family: everything except r, a, b, c, d, e.
  const std::vector<std::pair<std::size_t, std::size_t>> pinned{{0, 2}, {0, 3}, {1, 0}, {1, 1}, {1, 2},
                                                                {1, 3}, {2, 2}, {2, 3}, {3, 2}, {3, 3}};
  int rejected = 0;
  for (int i = 0; i < kPerturbations; ++i) {
    AParams a{r.next_positive()};
    MParams m{r.next(), r.next(), r.next(), r.next(), r.next()};
    Matrix4 k = aut0_element(a, m).matrix();
    auto [row, col] = pinned[static_cast<std::size_t>(i) % pinned.size()];
    k(row, col) += r.next_nonzero();
    try {
      rejected += !is_automorphism(k);
    } catch (const Error&) {
      ++rejected; // singular, so not an automorphism
    }
  }
  std::ostringstream os;
  os << "family accepted " << accepted << "/" << kFamilySamples << ", perturbations rejected " << rejected << "/"
     << kPerturbations;
  return {accepted == kFamilySamples && rejected == kPerturbations, os.str()};
}

// ---- 4 ------------------------------------------------------------------

Outcome m_product()
{
  RationalSampler r(1004);
  int agree = 0;
  for (int i = 0; i < kMProductTrials; ++i) {
    MParams a{r.next(), r.next(), r.next(), r.next(), r.next()};
    MParams b{r.next(), r.next(), r.next(), r.next(), r.next()};
    agree += m_element(m_mul(a, b)).matrix() == m_element(a).matrix() * m_element(b).matrix();
  }
  return {agree == kMProductTrials, std::to_string(agree) + "/" + std::to_string(kMProductTrials) + " agree"};
}

// ---- 5 ------------------------------------------------------------------

Outcome orbit_invariance()
{
  RationalSampler r(1005);
  int same = 0;
  for (int i = 0; i < kOrbitTrials; ++i) {
    auto n = random_point(r);
    auto l = Covector::from_array(r.next_vec());
    // a quarter of the samples on the non-generic stratum
    if (i % 4 == 0)
      l.lambda = 0;
    same += classify_orbit(coadjoint_action(n, l)) == classify_orbit(l);
  }
  return {same == kOrbitTrials, std::to_string(same) + "/" + std::to_string(kOrbitTrials) + " invariant"};
}

// ---- 6 ------------------------------------------------------------------

Outcome stabilizer_grid()
{
  auto grid = default_covector_grid();
  auto ks = default_k_grid();
  int generic = 0, nongeneric = 0, nu_zero = 0, zero = 0, passed = 0, total = 0;
  for (const auto& l : grid) {
    if (l.is_zero())
      ++zero;
    else if (sgn(l.lambda) != 0)
      ++generic;
    else if (sgn(l.nu) != 0)
      ++nongeneric;
    else
      ++nu_zero;
    for (const auto& k : ks) {
      ++total;
      passed += stabilizer_check(l, k);
    }
  }
  std::ostringstream os;
  os << passed << "/" << total << " combinations; covectors generic " << generic << ", nu!=0 " << nongeneric
     << ", nu=0 " << nu_zero << ", zero " << zero;
  const bool covered = generic > 0 && nongeneric > 0 && nu_zero > 0 && zero > 0;
  return {covered && total >= 200 && passed == total, os.str()};
}

// ---- 7 ------------------------------------------------------------------

Outcome polarization()
{
  int standard_ok = 0, standard_n = 0, whole_ok = 0, whole_n = 0, greedy_ok = 0, total = 0;
  for (const auto& l : default_covector_grid()) {
    ++total;
    SkewForm b = b_lambda(l);
    if (b.rank() == 2) {
      ++standard_n;
      standard_ok += verify_polarization(l, standard_polarization()).passed();
    } else {
      ++whole_n;
      whole_ok += verify_polarization(l, Subspace::whole()).passed();
    }
    auto g = verify_polarization(l, maximal_isotropic(b));
    greedy_ok += g.isotropic && g.maximal;
  }
  std::ostringstream os;
  os << "span{e1,e3,e4} polarizes " << standard_ok << "/" << standard_n << " rank-2 covectors, n polarizes "
     << whole_ok << "/" << whole_n << " rank-0 covectors, greedy isotropic+maximal " << greedy_ok << "/" << total;
  return {standard_ok == standard_n && whole_ok == whole_n && greedy_ok == total && standard_n > 0, os.str()};
}

// ---- 8 ------------------------------------------------------------------

Outcome rho_homomorphism()
{
  RationalSampler r(1008);
  int generic = 0, nongeneric_nonzero = 0;
  bool all = true;
  std::ostringstream os;
  for (const auto& c : acceptance_cases()) {
    int ok = 0;
    for (int i = 0; i < kRepPairs; ++i) {
      auto a = random_point(r), b = random_point(r);
      ok += rho(c, group_mul(a, b)) == op_compose(rho(c, a), rho(c, b)) && rho(c, a) == rho_via_generators(c, a);
    }
    all = all && ok == kRepPairs;
    generic += c.kind() == RepCase::Kind::Generic;
    nongeneric_nonzero += c.kind() == RepCase::Kind::NonGeneric && sgn(c.nu()) != 0;
    os << c.name() << " " << ok << "/" << kRepPairs << "; ";
  }
  return {all && generic >= 4 && nongeneric_nonzero >= 3, os.str()};
}

// ---- 9 ------------------------------------------------------------------

Outcome omega_true_representation()
{
  RationalSampler r(1009);
  bool all = true;
  int total = 0;
  for (const auto& c : acceptance_cases()) {
    for (int i = 0; i < kOmegaPairs; ++i) {
      auto k = random_k(r), k2 = random_k(r);
      all = all && op_compose(omega(c, k), omega(c, k2)) == omega(c, k + k2);
      ++total;
    }
    all = all && omega(c, {0, 0}).is_identity();
  }
  return {all, std::to_string(total) + " pairs over " + std::to_string(acceptance_cases().size()) +
                   " cases, all exact"};
}

// ---- 10 -----------------------------------------------------------------

Outcome intertwining()
{
  RationalSampler r(1010);
  bool all = true;
  int generators = 0, general = 0;
  for (const auto& c : acceptance_cases()) {
    for (int i = 0; i < kIntertwinePerGenerator; ++i) {
      auto k = random_k(r);
      Scalar v = r.next_nonzero();
      for (NPoint n : {NPoint{v, 0, 0, 0}, NPoint{0, v, 0, 0}, NPoint{0, 0, v, 0}, NPoint{0, 0, 0, v}}) {
        all = all && intertwine_defect(c, k, n).equal;
        ++generators;
      }
    }
    for (int i = 0; i < kIntertwineGeneral; ++i) {
      all = all && intertwine_defect(c, random_k(r), random_point(r)).equal;
      ++general;
    }
  }
  return {all, std::to_string(generators) + " generator and " + std::to_string(general) +
                   " general (k, n) samples, all exact"};
}

// ---- 11 -----------------------------------------------------------------

Outcome multiplicity_freeness()
{
  RationalSampler r(1011);
  auto sample = default_u_sample(kCharacterSample);
  bool all = true;
  int injective = 0, single = 0, consistency = 0, consistency_total = 0;
  for (const auto& c : acceptance_cases()) {
    auto d = multiplicity_free(c, sample);
    const bool degenerate = c.kind() == RepCase::Kind::Trivial ||
                            (c.kind() == RepCase::Kind::NonGeneric && sgn(c.nu()) == 0);
    if (degenerate) {
      all = all && d.single_character;
      single += d.single_character;
    } else {
      all = all && d.sampled_distinct && d.symbolic_injective && d.characters.size() == kCharacterSample;
      injective += d.sampled_distinct && d.symbolic_injective;
    }
    for (int i = 0; i < kCharacterPairs; ++i) {
      consistency += character_consistency(c, r.next(), random_k(r));
      ++consistency_total;
    }
  }
  std::ostringstream os;
  os << injective << " cases injective on " << kCharacterSample << " points, " << single
     << " single-character verdicts, character consistency " << consistency << "/" << consistency_total;
  return {all && consistency == consistency_total, os.str()};
}

// ---- 12 -----------------------------------------------------------------

Outcome grid_unitarity()
{
  auto start = std::chrono::steady_clock::now();
  GridSpec spec(kGridN, kGridL);
  RationalSampler r(1012);
  double worst = 0;
  int operators = 0;
  std::uint64_t seed = 1;
  for (const auto& c : acceptance_cases()) {
    for (int i = 0; i < 2; ++i) {
      // lattice shift x = j h
      Scalar x = spec.step() * r.next_int(-64, 64);
      NPoint n{r.next(), x, r.next(), r.next()};
      for (const auto& op : {rho(c, n), omega(c, random_k(r))}) {
        worst = std::max(worst, norm_defect(op, spec, kGridFunctions, seed++));
        worst = std::max(worst, unitarity_defect(op, spec, kGridFunctions, seed++));
        ++operators;
      }
    }
  }
  double t = seconds_since(start);
  std::ostringstream os;
  os << operators << " operators x " << kGridFunctions << " functions on n=" << kGridN << ", L=" << kGridL
     << "; worst relative defect " << worst << " (tolerance " << kGridTolerance << "), " << t << " s";
  return {worst <= kGridTolerance && t < kRuntimeLimit, os.str()};
}

// ---- 13 -----------------------------------------------------------------

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run_cli(const std::string& cli, const std::string& args)
{
  CliRun r;
  std::string cmd = "\"" + cli + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe)
    return r;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0)
    r.out.append(buf, n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Outcome end_to_end(const char* cli)
{
  std::ostringstream os;
  bool ok = true;

  auto verify = [](const char* fault, std::uint64_t seed, std::string& json) {
    nilrep_verify_options o;
    nilrep_verify_options_init(&o);
    o.seed = seed;
    o.fault = fault;
    nilrep_report* rep = nullptr;
    if (nilrep_verify(&o, &rep) != NILREP_OK)
      return -1;
    json = nilrep_report_json(rep);
    int passed = nilrep_report_passed(rep);
    nilrep_report_free(rep);
    return passed;
  };

  std::string a, b;
  const bool clean = verify("none", 7, a) == 1;
  const bool deterministic = verify("none", 7, b) == 1 && a == b;
  int caught = 0;
  for (std::size_t i = 0; i < nilrep_fault_count(); ++i) {
    std::string j;
    caught += verify(nilrep_fault_name(i), 7, j) == 0 && j.find("\"witness\"") != std::string::npos;
  }
  ok = clean && deterministic && caught == 5 && nilrep_fault_count() == 5;
  os << "C API: clean " << (clean ? "passed" : "FAILED") << ", " << caught << "/5 faults caught with witness, "
     << (deterministic ? "deterministic" : "NOT deterministic");

  if (cli) {
    auto run = run_cli(cli, "verify --case all --seed 7 --format json");
    auto again = run_cli(cli, "verify --case all --seed 7 --format json");
    int exit_one = 0;
    for (std::size_t i = 0; i < nilrep_fault_count(); ++i) {
      auto f = run_cli(cli, std::string("verify --case all --format json --inject-fault ") + nilrep_fault_name(i));
      exit_one += f.code == 1 && f.out.find("\"witness\"") != std::string::npos;
    }
    const bool cli_ok = run.code == 0 && again.code == 0 && run.out == again.out && run.out == a && exit_one == 5;
    os << "; CLI: verify exit " << run.code << ", " << exit_one << "/5 faults exit 1 with witness, JSON "
       << (run.out == again.out ? "byte-identical" : "DIFFERS") << (run.out == a ? " and equal to C API" : "");
    ok = ok && cli_ok;
  } else {
    os << "; CLI not exercised (no path given)";
  }
  return {ok, os.str()};
}

} // namespace

int main(int argc, char** argv)
{
  const char* cli = argc > 1 ? argv[1] : nullptr;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"exact group/algebra suite", group_algebra_suite},
      {"nilpotency structure", nilpotency_structure},
      {"Aut0(N) family and perturbations", aut0_family},
      {"M-product matches matrix product", m_product},
      {"coadjoint orbit invariance", orbit_invariance},
      {"K_Lambda = K on the sample grid", stabilizer_grid},
      {"polarization", polarization},
      {"rho is a homomorphism", rho_homomorphism},
      {"omega is a true representation", omega_true_representation},
      {"rho^k(n) omega(k) = omega(k) rho(n)", intertwining},
      {"multiplicity freeness", multiplicity_freeness},
      {"grid unitarity", grid_unitarity},
      {"end to end", [cli] { return end_to_end(cli); }},
  };
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    report(static_cast<int>(i + 1), criteria[i].first, o);
  }
  std::cout << (failures == 0 ? "ALL CRITERIA PASS" : std::to_string(failures) + " CRITERIA FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
