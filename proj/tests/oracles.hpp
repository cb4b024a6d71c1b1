#ifndef NILREP_TESTS_ORACLES_HPP
#define NILREP_TESTS_ORACLES_HPP

// Independent reference computations used only by the tests. Nothing here
// calls into the library beyond the Scalar type, so agreement with the
// library is real evidence rather than a tautology.

#include "nilrep/scalar.hpp"

#include <array>

namespace oracle {

using nilrep::Scalar;
using V = std::array<Scalar, 4>;

inline V mul(const V& a, const V& b)
{
  return {a[0] + b[0], a[1] + b[1], a[0] * b[1] + a[2] + b[2],
          a[3] + b[3] + (b[2] * a[1] + a[0] * a[1] * b[1] - b[1] * a[2]) / 2};
}

// Solves a b = e coordinate by coordinate.
inline V inv(const V& a)
{
  V b;
  b[0] = -a[0];
  b[1] = -a[1];
  b[2] = -(a[0] * b[1] + a[2]);
  b[3] = -a[3] - (b[2] * a[1] + a[0] * a[1] * b[1] - b[1] * a[2]) / 2;
  return b;
}

inline V bracket(const V& u, const V& v)
{
  return {0, 0, u[0] * v[1] - v[0] * u[1], u[1] * v[2] - v[1] * u[2]};
}

inline V add(const V& a, const V& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]}; }

inline V scale(const Scalar& c, const V& a) { return {c * a[0], c * a[1], c * a[2], c * a[3]}; }

// Baker-Campbell-Hausdorff, exact for a 3-step nilpotent algebra.
inline V bch(const V& x, const V& y)
{
  V xy = bracket(x, y);
  V r = add(add(x, y), scale(Scalar(1, 2), xy));
  r = add(r, scale(Scalar(1, 12), bracket(x, xy)));
  r = add(r, scale(Scalar(-1, 12), bracket(y, xy)));
  return r;
}

// Exact derivative at 0 of a polynomial of degree <= 4 from its values at -2..2.
template <class F>
V derivative_at_zero(F&& curve)
{
  V p1 = curve(Scalar(1)), m1 = curve(Scalar(-1)), p2 = curve(Scalar(2)), m2 = curve(Scalar(-2));
  V d;
  for (std::size_t i = 0; i < 4; ++i)
    d[i] = (8 * (p1[i] - m1[i]) - (p2[i] - m2[i])) / 12;
  return d;
}

// Ad(n) v as the velocity of eps -> n (eps v) n^-1. The coordinate chart has
// identity differential at e, so the straight curve eps v has velocity v.
inline V ad_by_conjugation(const V& n, const V& v)
{
  V ni = inv(n);
  return derivative_at_zero([&](const Scalar& eps) { return mul(mul(n, scale(eps, v)), ni); });
}

inline std::array<V, 4> ad_matrix_columns(const V& n)
{
  std::array<V, 4> cols;
  for (std::size_t j = 0; j < 4; ++j) {
    V e{0, 0, 0, 0};
    e[j] = 1;
    cols[j] = ad_by_conjugation(n, e);
  }
  return cols;
}

// Lambda o Ad(n^-1).
inline V coadjoint(const V& n, const V& lambda)
{
  auto cols = ad_matrix_columns(inv(n));
  V r;
  for (std::size_t j = 0; j < 4; ++j)
    r[j] = lambda[0] * cols[j][0] + lambda[1] * cols[j][1] + lambda[2] * cols[j][2] + lambda[3] * cols[j][3];
  return r;
}

// The induced representation realised on functions of u: (rho(n) f)(u) = f(g)
// with g = n^-1 (0,u,0,0). Writing g = (0,u',0,0) m with m = (s,0,y,t) in the
// polarizing subgroup, f(g) = exp(-i Lambda(m)) f(u'). Returns (u - u', -Lambda(m)).
struct InducedValue {
  Scalar shift;
  Scalar phase;
};

inline InducedValue induced(const V& lambda, const V& n, const Scalar& u)
{
  V g = mul(inv(n), V{0, u, 0, 0});
  V m{g[0], 0, g[2], g[3] - g[2] * g[1] / 2};
  Scalar pairing = lambda[0] * m[0] + lambda[2] * m[2] + lambda[3] * m[3];
  return {u - g[1], -pairing};
}

} // namespace oracle

#endif
