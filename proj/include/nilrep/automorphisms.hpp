#ifndef NILREP_AUTOMORPHISMS_HPP
#define NILREP_AUTOMORPHISMS_HPP

// Aut0(N): automorphisms of n that fix the center pointwise. Every such
// matrix has the form
//
//   [ r   a   0          0 ]
//   [ 0   r^-1/2  0      0 ]
//   [ d   b   r^1/2      0 ]
//   [ e   c   -d r^-1/2  1 ]
//
// and factors as A x| M. The A factor is parametrized by rho = r^1/2 so that
// the exact layer stays rational.

#include "nilrep/lie_core.hpp"

#include <array>
#include <utility>

namespace nilrep {

struct KParams {
  Scalar k1, k2;
  KParams operator+(const KParams& o) const { return {k1 + o.k1, k2 + o.k2}; }
  KParams operator-() const { return {-k1, -k2}; }
  bool operator==(const KParams& o) const = default;
};

struct MParams {
  Scalar a, b, c, d, e;
  static MParams identity() { return {0, 0, 0, 0, 0}; }
  bool operator==(const MParams& o) const = default;
};

/// Element of A; rho > 0 and r = rho^2.
struct AParams {
  Scalar rho;
  /// Throws Error(Domain) unless r is the square of a positive rational.
  static AParams from_r(const Scalar& r);
  Scalar r() const { return rho * rho; }
  bool operator==(const AParams& o) const = default;
};

/// The subgroup H of M: (d, e) with (d,e)(d',e') = (d+d', e+e'-dd').
struct HParams {
  Scalar d, e;
  bool operator==(const HParams& o) const = default;
};

/// The abelian factor R^3 of M, parameters (a, b, c).
struct R3Params {
  Scalar a, b, c;
  bool operator==(const R3Params& o) const = default;
};

/// Strong type for a 4x4 matrix claimed to lie in Aut0(N).
class AutMatrix {
public:
  /// Throws Error(Domain) if m is singular or does not preserve the bracket and the center.
  explicit AutMatrix(const Matrix4& m);
  const Matrix4& matrix() const { return m_; }
  AutMatrix operator*(const AutMatrix& o) const { return AutMatrix(m_ * o.m_, Trusted{}); }
  AutMatrix inverse() const { return AutMatrix(m_.inverse(), Trusted{}); }
  bool operator==(const AutMatrix& o) const { return m_ == o.m_; }

private:
  struct Trusted {};
  AutMatrix(const Matrix4& m, Trusted) : m_(m) {}
  friend AutMatrix k_element(const KParams&);
  friend AutMatrix m_element(const MParams&);
  friend AutMatrix a_element(const AParams&);
  friend AutMatrix h_element(const HParams&);
  friend AutMatrix r3_element(const R3Params&);
  Matrix4 m_;
};

/// True iff k[u,v] = [ku,kv] on all basis pairs and k e4 = e4. Throws Error(Domain) if singular.
bool is_automorphism(const Matrix4& k);

AutMatrix k_element(const KParams& p);
AutMatrix m_element(const MParams& p);
AutMatrix a_element(const AParams& p);
AutMatrix h_element(const HParams& p);
AutMatrix r3_element(const R3Params& p);

/// a_element(alpha) * m_element(m).
AutMatrix aut0_element(const AParams& alpha, const MParams& m);

MParams m_mul(const MParams& lhs, const MParams& rhs);
MParams m_inv(const MParams& m);
HParams h_mul(const HParams& lhs, const HParams& rhs);

/// (d,e) . (a,b,c) = (a, b+da, c+ea-db).
R3Params h_act(const HParams& h, const R3Params& v);

/// m = h * v with h in H and v in R^3.
std::pair<HParams, R3Params> m_as_semidirect(const MParams& m);
MParams embed(const HParams& h);
MParams embed(const R3Params& v);

/// Reads M parameters off a matrix; nullopt-like failure is reported by throwing Error(Domain).
MParams m_params_of(const Matrix4& m);
bool in_m_family(const Matrix4& m);

/// k = a_element(alpha) * m_element(m). Throws Error(Domain) if k is outside the family.
std::pair<AParams, MParams> decompose_aut0(const Matrix4& k);

/// Group automorphism induced by k: n -> exp(k log n). On K this is
/// (s,x,y,t) -> (s, x, y + k1 x, t + k2 x).
NPoint apply_aut(const AutMatrix& k, const NPoint& n);

/// Double-precision Aut0 matrix for arbitrary r > 0. Demo layer only.
std::array<std::array<double, 4>, 4> aut0_matrix_real(double r, double a, double b, double c, double d,
                                                      double e);

} // namespace nilrep

#endif
