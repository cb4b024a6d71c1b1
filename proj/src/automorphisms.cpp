#include "nilrep/automorphisms.hpp"

#include <cmath>

namespace nilrep {

AutMatrix::AutMatrix(const Matrix4& m) : m_(m)
{
  if (!is_automorphism(m))
    throw Error(ErrorKind::Domain, "matrix is not in Aut0(N):\n" + to_string(m));
}

AParams AParams::from_r(const Scalar& r)
{
  if (sgn(r) <= 0)
    throw Error(ErrorKind::Domain, "A parameter r must be positive, got " + to_string(r));
  mpz_class num = r.get_num(), den = r.get_den();
  mpz_class rn = sqrt(num), rd = sqrt(den);
  if (rn * rn != num || rd * rd != den)
    throw Error(ErrorKind::Domain, "r = " + to_string(r) + " is not a rational square");
  Scalar rho(rn, rd);
  rho.canonicalize();
  return {rho};
}

bool is_automorphism(const Matrix4& k)
{
  if (sgn(k.determinant()) == 0)
    throw Error(ErrorKind::Domain, "singular matrix passed to is_automorphism");
  const Vec4 e4{0, 0, 0, 1};
  if (k * e4 != e4)
    return false;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      auto ei = NVector::basis(i), ej = NVector::basis(j);
      auto lhs = k * bracket(ei, ej).to_array();
      auto rhs = bracket(NVector::from_array(k * ei.to_array()), NVector::from_array(k * ej.to_array()));
      if (lhs != rhs.to_array())
        return false;
    }
  return true;
}

AutMatrix k_element(const KParams& p)
{
  return AutMatrix(Matrix4::from_rows({Vec4{1, 0, 0, 0}, Vec4{0, 1, 0, 0}, Vec4{0, p.k1, 1, 0},
                                       Vec4{0, p.k2, 0, 1}}),
                   AutMatrix::Trusted{});
}

AutMatrix m_element(const MParams& p)
{
  return AutMatrix(Matrix4::from_rows({Vec4{1, p.a, 0, 0}, Vec4{0, 1, 0, 0}, Vec4{p.d, p.b, 1, 0},
                                       Vec4{p.e, p.c, -p.d, 1}}),
                   AutMatrix::Trusted{});
}

AutMatrix a_element(const AParams& p)
{
  if (sgn(p.rho) <= 0)
    throw Error(ErrorKind::Domain, "A parameter rho must be positive");
  Scalar inv = 1 / p.rho;
  return AutMatrix(Matrix4::from_rows({Vec4{p.r(), 0, 0, 0}, Vec4{0, inv, 0, 0}, Vec4{0, 0, p.rho, 0},
                                       Vec4{0, 0, 0, 1}}),
                   AutMatrix::Trusted{});
}

AutMatrix h_element(const HParams& p)
{
  return m_element(embed(p));
}

AutMatrix r3_element(const R3Params& p)
{
  return m_element(embed(p));
}

AutMatrix aut0_element(const AParams& alpha, const MParams& m)
{
  return a_element(alpha) * m_element(m);
}

MParams m_mul(const MParams& l, const MParams& r)
{
  return {l.a + r.a, l.b + r.b + l.d * r.a, l.c + r.c + l.e * r.a - l.d * r.b, l.d + r.d,
          l.e + r.e - l.d * r.d};
}

MParams m_inv(const MParams& m)
{
  Scalar b = m.d * m.a - m.b;
  return {-m.a, b, m.e * m.a + m.d * b - m.c, -m.d, -m.e - m.d * m.d};
}

HParams h_mul(const HParams& l, const HParams& r)
{
  return {l.d + r.d, l.e + r.e - l.d * r.d};
}

R3Params h_act(const HParams& h, const R3Params& v)
{
  return {v.a, v.b + h.d * v.a, v.c + h.e * v.a - h.d * v.b};
}

MParams embed(const HParams& h)
{
  return {0, 0, 0, h.d, h.e};
}

MParams embed(const R3Params& v)
{
  return {v.a, v.b, v.c, 0, 0};
}

std::pair<HParams, R3Params> m_as_semidirect(const MParams& m)
{
  // h * v = (a', b' + d a', c' + e a' - d b', d, e); solve for (a', b', c').
  Scalar b = m.b - m.d * m.a;
  Scalar c = m.c - m.e * m.a + m.d * b;
  return {HParams{m.d, m.e}, R3Params{m.a, b, c}};
}

bool in_m_family(const Matrix4& m)
{
  MParams p{m(0, 1), m(2, 1), m(3, 1), m(2, 0), m(3, 0)};
  return m_element(p).matrix() == m;
}

MParams m_params_of(const Matrix4& m)
{
  if (!in_m_family(m))
    throw Error(ErrorKind::Domain, "matrix is not in M:\n" + to_string(m));
  return {m(0, 1), m(2, 1), m(3, 1), m(2, 0), m(3, 0)};
}

std::pair<AParams, MParams> decompose_aut0(const Matrix4& k)
{
  const Scalar& rho = k(2, 2);
  if (sgn(k(0, 0)) <= 0 || sgn(rho) <= 0 || k(0, 0) != rho * rho || k(1, 1) * rho != 1)
    throw Error(ErrorKind::Domain, "matrix is outside the Aut0(N) family:\n" + to_string(k));
  AParams alpha{rho};
  Matrix4 m = a_element(alpha).matrix().inverse() * k;
  return {alpha, m_params_of(m)};
}

NPoint apply_aut(const AutMatrix& k, const NPoint& n)
{
  return exp_map(NVector::from_array(k.matrix() * log_map(n).to_array()));
}

std::array<std::array<double, 4>, 4> aut0_matrix_real(double r, double a, double b, double c, double d,
                                                      double e)
{
  if (!(r > 0))
    throw Error(ErrorKind::Domain, "A parameter r must be positive");
  const double root = std::sqrt(r);
  return {{{r, a, 0, 0}, {0, 1 / root, 0, 0}, {d, b, root, 0}, {e, c, -d / root, 1}}};
}

} // namespace nilrep
