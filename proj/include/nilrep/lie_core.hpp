#ifndef NILREP_LIE_CORE_HPP
#define NILREP_LIE_CORE_HPP

// The 4-dimensional nilpotent Lie algebra n and the group N = S x| H1.
//
// Group elements use the semidirect-product coordinates (s, x, y, t) in which
//
//   (s,x,y,t)(s',x',y',t') = (s+s', x+x', sx'+y+y', t+t'+(y'x+sxx'-x'y)/2)
//
// and the bracket is [(s,x,y,t),(s',x',y',t')] = (0, 0, sx'-s'x, xy'-x'y).
// These coordinates are not exponential coordinates: a one-parameter subgroup
// with initial velocity (s,x,y,t) passes through (s, x, y+sx/2, t+sx^2/12) at
// time 1. exp_map / log_map convert between the two charts and are what make
// Ad a homomorphism.

#include "nilrep/scalar.hpp"

#include <string>
#include <vector>

namespace nilrep {

/// Element of the Lie algebra n.
struct NVector {
  Scalar s, x, y, t;

  static NVector from_array(const Vec4& v) { return {v[0], v[1], v[2], v[3]}; }
  Vec4 to_array() const { return {s, x, y, t}; }
  static NVector basis(std::size_t i);

  NVector operator+(const NVector& o) const { return {s + o.s, x + o.x, y + o.y, t + o.t}; }
  NVector operator-(const NVector& o) const { return {s - o.s, x - o.x, y - o.y, t - o.t}; }
  NVector operator-() const { return {-s, -x, -y, -t}; }
  NVector scaled(const Scalar& c) const { return {c * s, c * x, c * y, c * t}; }
  bool is_zero() const;
  bool operator==(const NVector& o) const = default;
};

/// Element of the group N in semidirect-product coordinates.
struct NPoint {
  Scalar s, x, y, t;

  static NPoint identity() { return {0, 0, 0, 0}; }
  static NPoint from_array(const Vec4& v) { return {v[0], v[1], v[2], v[3]}; }
  Vec4 to_array() const { return {s, x, y, t}; }
  bool operator==(const NPoint& o) const = default;
};

/// Element of the Heisenberg group H1, coordinates (x, y, t).
struct H1Point {
  Scalar x, y, t;
  bool operator==(const H1Point& o) const = default;
};

std::string to_string(const NVector& v);
std::string to_string(const NPoint& n);

NVector bracket(const NVector& u, const NVector& v);

/// [u,[v,w]] + [v,[w,u]] + [w,[u,v]]; identically zero.
NVector jacobi_defect(const NVector& u, const NVector& v, const NVector& w);

NPoint group_mul(const NPoint& a, const NPoint& b);
NPoint group_inv(const NPoint& n);

/// Heisenberg law (x,y,t)(x',y',t') = (x+x', y+y', t+t'+(y'x-x'y)/2).
H1Point h1_mul(const H1Point& a, const H1Point& b);
H1Point h1_bracket(const H1Point& a, const H1Point& b);

/// s . (x,y,t) = (x, sx+y, t); an action of S on H1 by automorphisms.
H1Point s_action(const Scalar& s, const H1Point& h);

NPoint exp_map(const NVector& u);
NVector log_map(const NPoint& n);

/// Matrix of v -> [u, v].
Matrix4 ad_matrix(const NVector& u);

/// exp(ad u) as the finite sum I + A + A^2/2 + A^3/6, exact since A^4 = 0.
Matrix4 exp_ad(const NVector& u);

/// Adjoint representation of the group: Ad(n) = exp(ad(log n)).
Matrix4 Ad(const NPoint& n);

/// Linear subspace of n (or of any Q^4) kept as a reduced row echelon basis.
class Subspace {
public:
  Subspace() = default; // {0}
  static Subspace span(const std::vector<Vec4>& vectors);
  static Subspace span(const std::vector<NVector>& vectors);
  static Subspace whole();
  /// {v : row . v = 0 for every row}.
  static Subspace kernel(const std::vector<Vec4>& rows);

  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec4>& basis() const { return basis_; }
  std::vector<NVector> basis_vectors() const;
  bool contains(const Vec4& v) const;
  bool contains(const NVector& v) const { return contains(v.to_array()); }
  bool contains(const Subspace& other) const;
  Subspace with(const Vec4& v) const;

  bool operator==(const Subspace& o) const { return basis_ == o.basis_; }

private:
  std::vector<Vec4> basis_; // RREF rows
};

std::string to_string(const Subspace& w);

/// [n^1, n^2, n^3] with n^1 = [n,n] and n^{j+1} = [n, n^j].
std::vector<Subspace> lower_central_series();

/// Common kernel of ad(e_i), i = 1..4.
Subspace center();

} // namespace nilrep

#endif
