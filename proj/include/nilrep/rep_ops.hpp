#ifndef NILREP_REP_OPS_HPP
#define NILREP_REP_OPS_HPP

// Exact operator algebra for the induced representations rho_Lambda and the
// metaplectic representations omega_Lambda on L2(R).
//
// Every operator that occurs is a phase-shift operator
//
//   (A f)(u) = exp(i p(u)) f(u - a),   p(u) = c0 + c1 u + c2 u^2,
//
// so operator identities reduce to exact identities between (a, c0, c1, c2).
// Phases are compared as polynomials, never modulo 2 pi.

#include "nilrep/automorphisms.hpp"
#include "nilrep/coadjoint.hpp"

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nilrep {

struct QuadPhase {
  Scalar c0, c1, c2;

  static QuadPhase zero() { return {0, 0, 0}; }
  Scalar operator()(const Scalar& u) const { return c0 + c1 * u + c2 * u * u; }
  double operator()(double u) const;
  /// u -> p(u - a)
  QuadPhase shifted(const Scalar& a) const;
  QuadPhase operator+(const QuadPhase& o) const { return {c0 + o.c0, c1 + o.c1, c2 + o.c2}; }
  QuadPhase operator-(const QuadPhase& o) const { return {c0 - o.c0, c1 - o.c1, c2 - o.c2}; }
  QuadPhase operator-() const { return {-c0, -c1, -c2}; }
  bool is_zero() const { return sgn(c0) == 0 && sgn(c1) == 0 && sgn(c2) == 0; }
  bool operator==(const QuadPhase& o) const = default;
};

class PhaseShiftOp {
public:
  PhaseShiftOp() : shift_(0), phase_(QuadPhase::zero()) {}
  PhaseShiftOp(Scalar shift, QuadPhase phase) : shift_(std::move(shift)), phase_(std::move(phase)) {}

  static PhaseShiftOp identity() { return {}; }
  static PhaseShiftOp translation(const Scalar& a) { return {a, QuadPhase::zero()}; }
  static PhaseShiftOp multiplication(const QuadPhase& p) { return {0, p}; }

  const Scalar& shift() const { return shift_; }
  const QuadPhase& phase() const { return phase_; }
  bool is_identity() const { return sgn(shift_) == 0 && phase_.is_zero(); }

  bool operator==(const PhaseShiftOp& o) const = default;

private:
  Scalar shift_;
  QuadPhase phase_;
};

std::string to_string(const QuadPhase& p);
std::string to_string(const PhaseShiftOp& op);

/// (A o B) f = A(B f): (a_A + a_B, p_A(u) + p_B(u - a_A)).
PhaseShiftOp op_compose(const PhaseShiftOp& lhs, const PhaseShiftOp& rhs);
PhaseShiftOp op_inverse(const PhaseShiftOp& op);

/// Which representation rho_Lambda is meant; one-to-one with OrbitId.
class RepCase {
public:
  enum class Kind { Generic, NonGeneric, Trivial };

  /// Throws Error(InvalidArgument) when lambda = 0.
  static RepCase generic(const Scalar& alpha, const Scalar& lambda);
  static RepCase non_generic(const Scalar& nu);
  static RepCase trivial();
  static RepCase for_orbit(const OrbitId& o);

  Kind kind() const { return kind_; }
  const Scalar& alpha() const { return alpha_; }
  const Scalar& lambda() const { return lambda_; }
  const Scalar& nu() const { return nu_; }

  /// (alpha,0,0,lambda), (0,0,nu,0) or 0.
  Covector representative() const;
  /// "generic(alpha=..., lambda=...)" and friends.
  std::string name() const;
  /// Display name in the usual notation, e.g. "rho_{0,1}".
  std::string symbol(const char* letter) const;

  bool operator==(const RepCase& o) const = default;

private:
  RepCase(Kind k, Scalar a, Scalar l, Scalar n) : kind_(k), alpha_(a), lambda_(l), nu_(n) {}
  Kind kind_;
  Scalar alpha_, lambda_, nu_;
};

enum class Generator { S, X, Y, T };

/// rho(case, value along one coordinate axis), straight from the generator formulas.
PhaseShiftOp rho_generator(const RepCase& c, Generator g, const Scalar& value);

/// Closed form of rho(case, n).
///
/// Generic(alpha, lambda): shift x, phase
///   alpha s + lambda t + lambda x y / 2 - lambda u y - lambda s (u - x)^2 / 2.
/// NonGeneric(nu): shift x, phase nu (s (u - x) + y).
/// Both follow from (rho(n) f)(u) = f(n^-1 (0,u,0,0)) with
/// n^-1 (0,u,0,0) = (0,u-x,0,0) (-s, 0, s(x-u) - y, -t + s(u-x)^2/2 + uy - xy/2)
/// and the defining equivariance f(n m) = chi(m^-1) f(n).
PhaseShiftOp rho(const RepCase& c, const NPoint& n);

/// rho(0,x,0,0) o rho(s,0,0,0) o rho(0,0,y,0) o rho(0,0,0,t - xy/2), using
/// (s,x,y,t) = (0,x,0,0)(s,0,y,t - xy/2).
PhaseShiftOp rho_via_generators(const RepCase& c, const NPoint& n);

/// Generic: phase -lambda k1 u^2/2 + lambda k2 u; NonGeneric: phase nu k1 u; Trivial: identity.
PhaseShiftOp omega(const RepCase& c, const KParams& k);

/// rho^k(n) = rho(k . n).
PhaseShiftOp rho_twisted(const RepCase& c, const KParams& k, const NPoint& n);

struct IntertwineResult {
  bool equal = false;
  PhaseShiftOp lhs; ///< rho^k(n) o omega(k)
  PhaseShiftOp rhs; ///< omega(k) o rho(n)
  Scalar max_discrepancy; ///< max |coefficient difference|, 0 when equal
};

IntertwineResult intertwine_defect(const RepCase& c, const KParams& k, const NPoint& n);

/// Max |coefficient difference| between two operators (shift and phase).
Scalar op_discrepancy(const PhaseShiftOp& a, const PhaseShiftOp& b);

// ---------------------------------------------------------------------------
// Floating-point grid layer

/// Periodic grid u_j = -L + j h, h = 2L/n, n a power of two.
class GridSpec {
public:
  /// Throws Error(InvalidArgument) unless n is a power of two and half_width > 0.
  GridSpec(std::size_t n, double half_width);

  std::size_t size() const { return n_; }
  double half_width() const { return half_width_d_; }
  const Scalar& step() const { return step_; }
  double point(std::size_t j) const;
  /// a / h when it is an integer.
  std::optional<long> lattice_offset(const Scalar& a) const;

private:
  std::size_t n_;
  double half_width_d_;
  Scalar half_width_;
  Scalar step_;
};

class GridFunction {
public:
  GridFunction(GridSpec spec, std::vector<std::complex<double>> values);
  static GridFunction gaussian(const GridSpec& spec, double center, double width);
  static GridFunction random(const GridSpec& spec, std::uint64_t seed);

  const GridSpec& spec() const { return spec_; }
  const std::vector<std::complex<double>>& values() const { return values_; }

  /// h * sum f_j conj(g_j)
  std::complex<double> inner(const GridFunction& g) const;
  double norm() const;

private:
  GridSpec spec_;
  std::vector<std::complex<double>> values_;
};

enum class ShiftMode {
  Lattice,  ///< shift must be an integer multiple of h; exact permutation
  Spectral, ///< band-limited Fourier shift; any rational shift
};

/// (A f)_j = exp(i p(u_j)) f(u_j - a). Throws Error(Domain) on a non-lattice shift in Lattice mode.
GridFunction apply_to_grid(const PhaseShiftOp& op, const GridFunction& f, ShiftMode mode = ShiftMode::Lattice);

/// max over random f, g of |<Af,Ag> - <f,g>| / (|f| |g|).
double unitarity_defect(const PhaseShiftOp& op, const GridSpec& spec, int trials, std::uint64_t seed);

/// max over random f of | |Af| - |f| | / |f|.
double norm_defect(const PhaseShiftOp& op, const GridSpec& spec, int trials, std::uint64_t seed);

} // namespace nilrep

#endif
