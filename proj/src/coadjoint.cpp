#include "nilrep/coadjoint.hpp"

#include <sstream>

namespace nilrep {

bool Covector::is_zero() const
{
  return sgn(alpha) == 0 && sgn(mu) == 0 && sgn(nu) == 0 && sgn(lambda) == 0;
}

std::string to_string(const Covector& c)
{
  std::ostringstream os;
  os << "(" << to_string(c.alpha) << ", " << to_string(c.mu) << ", " << to_string(c.nu) << ", "
     << to_string(c.lambda) << ")";
  return os.str();
}

Scalar pairing(const Covector& c, const NVector& v)
{
  return c.alpha * v.s + c.mu * v.x + c.nu * v.y + c.lambda * v.t;
}

std::string to_string(const OrbitId& o)
{
  struct {
    std::string operator()(const GenericOrbit& g) const
    {
      return "Generic(" + to_string(g.alpha) + ", " + to_string(g.lambda) + ")";
    }
    std::string operator()(const NonGenericOrbit& n) const
    {
      return "NonGeneric(" + to_string(n.nu) + ")" + (n.point_orbit ? " [point orbit]" : "");
    }
    std::string operator()(const ZeroOrbit&) const { return "Zero"; }
  } visitor;
  return std::visit(visitor, o);
}

Covector coadjoint_action(const NPoint& n, const Covector& c)
{
  // row vector L times Ad(n^-1)
  Matrix4 m = Ad(group_inv(n));
  Vec4 l = c.to_array();
  Vec4 out{0, 0, 0, 0};
  for (std::size_t j = 0; j < 4; ++j)
    for (std::size_t i = 0; i < 4; ++i)
      out[j] += l[i] * m(i, j);
  return Covector::from_array(out);
}

OrbitId classify_orbit(const Covector& c)
{
  if (sgn(c.lambda) != 0)
    return GenericOrbit{c.alpha + c.nu * c.nu / (2 * c.lambda), c.lambda};
  if (c.is_zero())
    return ZeroOrbit{};
  return NonGenericOrbit{c.nu, sgn(c.nu) == 0};
}

bool orbit_contains(const OrbitId& o, const Covector& c)
{
  return classify_orbit(c) == o;
}

Covector generic_orbit_point(const GenericOrbit& o, const Scalar& mu, const Scalar& nu)
{
  return {o.alpha - nu * nu / (2 * o.lambda), mu, nu, o.lambda};
}

SkewForm::SkewForm(const Covector& c)
{
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      b_(i, j) = pairing(c, bracket(NVector::basis(i), NVector::basis(j)));
}

Scalar SkewForm::operator()(const NVector& u, const NVector& v) const
{
  Scalar acc = 0;
  auto ua = u.to_array(), va = v.to_array();
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      acc += ua[i] * b_(i, j) * va[j];
  return acc;
}

std::size_t SkewForm::rank() const
{
  std::vector<Vec4> rows;
  for (std::size_t i = 0; i < 4; ++i)
    rows.push_back(b_.row(i));
  return Subspace::span(rows).dim();
}

SkewForm b_lambda(const Covector& c)
{
  return SkewForm(c);
}

Subspace radical(const SkewForm& b)
{
  std::vector<Vec4> rows;
  for (std::size_t i = 0; i < 4; ++i)
    rows.push_back(b.matrix().row(i));
  return Subspace::kernel(rows);
}

namespace {

bool isotropic_with(const SkewForm& b, const Subspace& w, const NVector& v)
{
  for (const auto& u : w.basis_vectors())
    if (sgn(b(u, v)) != 0)
      return false;
  return true;
}

} // namespace

Subspace maximal_isotropic(const SkewForm& b)
{
  Subspace w = radical(b);
  for (std::size_t i = 0; i < 4; ++i) {
    auto e = NVector::basis(i);
    if (!w.contains(e) && isotropic_with(b, w, e))
      w = w.with(e.to_array());
  }
  return w;
}

Subspace standard_polarization()
{
  return Subspace::span(std::vector<NVector>{NVector::basis(0), NVector::basis(2), NVector::basis(3)});
}

PolarizationCheck verify_polarization(const Covector& c, const Subspace& w)
{
  SkewForm b(c);
  PolarizationCheck out;
  auto basis = w.basis_vectors();
  out.isotropic = true;
  out.subalgebra = true;
  for (const auto& u : basis)
    for (const auto& v : basis) {
      if (sgn(b(u, v)) != 0)
        out.isotropic = false;
      if (!w.contains(bracket(u, v)))
        out.subalgebra = false;
    }
  out.maximal = w.dim() == radical(b).dim() + b.rank() / 2;
  return out;
}

Covector k_transpose_apply(const KParams& k, const Covector& c)
{
  return Covector::from_array(k_element(k).matrix().transposed() * c.to_array());
}

bool stabilizer_check(const Covector& c, const KParams& k)
{
  return orbit_contains(classify_orbit(c), k_transpose_apply(k, c));
}

} // namespace nilrep
