#ifndef NILREP_GELFAND_HPP
#define NILREP_GELFAND_HPP

// Machine check that (K, N) is a generalized Gelfand pair.
//
// The chain verified is: K_Lambda = K for every Lambda (stabilizer check),
// omega_Lambda is a true representation of K intertwining rho_Lambda with
// its K-twists, and omega_Lambda decomposes into pairwise distinct
// characters of K (multiplicity free).

#include "nilrep/rep_ops.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nilrep {

/// chi_{a,b}(k1, k2) = exp(i (a k1 + b k2)).
struct KCharacter {
  Scalar a, b;
  bool operator==(const KCharacter& o) const = default;
};

std::string to_string(const KCharacter& c);

/// Generic -> (-lambda u^2/2, lambda u); NonGeneric -> (nu u, 0); Trivial -> (0, 0).
KCharacter character_at(const RepCase& c, const Scalar& u);

/// Replaceable pieces of the model. Fault injection swaps one of them for a
/// deliberately wrong version so that each check can be shown to fail.
struct Model {
  std::function<PhaseShiftOp(const RepCase&, const NPoint&)> rho;
  std::function<PhaseShiftOp(const RepCase&, const KParams&)> omega;
  std::function<Covector(const KParams&, const Covector&)> k_dual;
  std::function<KCharacter(const RepCase&, const Scalar&)> character;

  static Model standard();
};

enum class Fault {
  None,
  OmegaSign,           ///< flips the sign of the k1 term of omega
  OmegaMultiplier,     ///< multiplies omega(k) by exp(i k1 k2): a projective, not true, representation
  RhoCocycle,          ///< drops the lambda x y / 2 term of rho
  StabilizerTranspose, ///< acts by k instead of k^t on X_Lambda
  CharacterCollapse,   ///< forgets the lambda u component of the characters
};

std::string to_string(Fault f);
/// Throws Error(Parse) on an unknown name.
Fault parse_fault(std::string_view name);
const std::vector<Fault>& all_faults();

Model faulty_model(Fault f);

/// omega(k) acts on the fiber over u by character_at(c, u).
bool character_consistency(const RepCase& c, const Scalar& u, const KParams& k, const Model& m = Model::standard());

struct DecompositionReport {
  RepCase rep = RepCase::trivial();
  std::vector<std::pair<Scalar, KCharacter>> characters;
  bool sampled_distinct = false;
  bool symbolic_injective = false;
  bool single_character = false;
  std::string rule;
  std::optional<std::pair<Scalar, Scalar>> witness; ///< two u with the same character
  bool multiplicity_free() const { return single_character || (sampled_distinct && symbolic_injective); }
};

/// Throws Error(InvalidArgument) on an empty sample or repeated u values.
DecompositionReport multiplicity_free(const RepCase& c, const std::vector<Scalar>& sample,
                                      const Model& m = Model::standard());

/// u_j = j/2 for j = -(count-1)/2 .. (count-1)/2 (count odd), or the first count such values.
std::vector<Scalar> default_u_sample(std::size_t count);

bool stabilizer_is_K(const std::vector<Covector>& lambdas, const std::vector<KParams>& ks,
                     const Model& m = Model::standard());

/// lambda in {0,+-1,+-2}, alpha in {0,+-1}, nu in {0,+-1,+-3}, mu in {0,1}.
std::vector<Covector> default_covector_grid();
/// k in {-2..2}^2.
std::vector<KParams> default_k_grid();

enum class CaseSelector { All, Generic, NonGeneric, Trivial };
std::string to_string(CaseSelector s);
CaseSelector parse_case_selector(std::string_view name);

struct VerifyConfig {
  std::uint64_t seed = 1;
  CaseSelector cases = CaseSelector::All;
  std::vector<std::pair<Scalar, Scalar>> generic_params; ///< (alpha, lambda)
  std::vector<Scalar> nongeneric_params;                 ///< nu
  int group_trials = 1000;
  int rep_trials = 1000;
  int pair_trials = 500;
  int perturbations = 20;
  std::size_t mf_sample = 101;
  std::size_t grid_n = 1024;
  double grid_half_width = 16;
  int grid_functions = 50;
  double grid_tolerance = 1e-12;
  Fault fault = Fault::None;
  bool include_structure = true;

  /// Four generic cases, three non-generic ones with nu != 0, and nu = 0.
  static VerifyConfig defaults();
  /// Throws Error(InvalidArgument) on an inconsistent configuration.
  void validate() const;
  std::vector<RepCase> selected_cases() const;
  bool operator==(const VerifyConfig&) const = default;
};

struct Witness {
  std::vector<std::pair<std::string, std::string>> fields;
  bool operator==(const Witness&) const = default;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::int64_t trials = 0;
  std::optional<Witness> witness;
  bool operator==(const CheckResult&) const = default;
};

struct CaseReport {
  std::string name; ///< "structure" or RepCase::name()
  std::vector<CheckResult> checks;
  bool passed() const;
  bool operator==(const CaseReport&) const = default;
};

struct TheoremReport {
  VerifyConfig config;
  std::vector<CaseReport> cases;
  bool verdict = false;
  bool operator==(const TheoremReport&) const = default;
};

/// Runs every check. Deterministic given config.seed.
TheoremReport verify_theorem(const VerifyConfig& config);

/// Group/algebra/automorphism/orbit checks that do not depend on a representation.
CaseReport verify_structure(const VerifyConfig& config, const Model& m);
CaseReport verify_case(const RepCase& c, std::size_t index, const VerifyConfig& config, const Model& m);

} // namespace nilrep

#endif
