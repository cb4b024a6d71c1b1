#ifndef NILREP_COADJOINT_HPP
#define NILREP_COADJOINT_HPP

#include "nilrep/automorphisms.hpp"
#include "nilrep/lie_core.hpp"

#include <string>
#include <variant>

namespace nilrep {

/// The functional (alpha, mu, nu, lambda) : (s,x,y,t) -> alpha s + mu x + nu y + lambda t.
struct Covector {
  Scalar alpha, mu, nu, lambda;

  static Covector from_array(const Vec4& v) { return {v[0], v[1], v[2], v[3]}; }
  Vec4 to_array() const { return {alpha, mu, nu, lambda}; }
  bool is_zero() const;
  bool operator==(const Covector& o) const = default;
};

std::string to_string(const Covector& c);

Scalar pairing(const Covector& c, const NVector& v);

/// O_{alpha,lambda}: lambda != 0, alpha is the value of the first coordinate at nu = 0.
struct GenericOrbit {
  Scalar alpha, lambda;
  bool operator==(const GenericOrbit& o) const = default;
};

/// O_nu: every covector with lambda = 0 and third coordinate nu. When nu = 0
/// and the covector is nonzero the true coadjoint orbit is a single point;
/// point_orbit records that, and is ignored by equality.
struct NonGenericOrbit {
  Scalar nu;
  bool point_orbit = false;
  bool operator==(const NonGenericOrbit& o) const { return nu == o.nu; }
};

struct ZeroOrbit {
  bool operator==(const ZeroOrbit&) const { return true; }
};

using OrbitId = std::variant<GenericOrbit, NonGenericOrbit, ZeroOrbit>;

std::string to_string(const OrbitId& o);

/// Ad*(n) L = L o Ad(n^-1).
Covector coadjoint_action(const NPoint& n, const Covector& c);

/// lambda != 0 -> Generic(alpha + nu^2/(2 lambda), lambda); lambda = 0 -> NonGeneric(nu); 0 -> Zero.
OrbitId classify_orbit(const Covector& c);

bool orbit_contains(const OrbitId& o, const Covector& c);

/// A covector of O_{alpha,lambda} with prescribed (mu, nu).
Covector generic_orbit_point(const GenericOrbit& o, const Scalar& mu, const Scalar& nu);

/// B[i][j] = L([e_i, e_j]).
class SkewForm {
public:
  explicit SkewForm(const Covector& c);
  const Matrix4& matrix() const { return b_; }
  Scalar operator()(const NVector& u, const NVector& v) const;
  std::size_t rank() const;

private:
  Matrix4 b_;
};

SkewForm b_lambda(const Covector& c);

Subspace radical(const SkewForm& b);

/// Radical completed greedily by e1..e4 while isotropy holds.
Subspace maximal_isotropic(const SkewForm& b);

/// The polarization {(s,0,y,t)} used to induce rho_Lambda.
Subspace standard_polarization();

struct PolarizationCheck {
  bool isotropic = false;
  bool maximal = false;
  bool subalgebra = false;
  bool passed() const { return isotropic && maximal && subalgebra; }
};

PolarizationCheck verify_polarization(const Covector& c, const Subspace& w);

/// k^t X_L, with X_L the Euclidean dual of L (same coordinates).
Covector k_transpose_apply(const KParams& k, const Covector& c);

/// True iff k^t X_L lies in the orbit of L.
bool stabilizer_check(const Covector& c, const KParams& k);

} // namespace nilrep

#endif
