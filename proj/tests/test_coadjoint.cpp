#include "nilrep/automorphisms.hpp"
#include "nilrep/coadjoint.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace nilrep;

TEST_CASE("coadjoint action")
{
  RationalSampler r(31);
  for (int i = 0; i < 100; ++i) {
    auto l = Covector::from_array(r.next_vec());
    auto n = NPoint::from_array(r.next_vec());
    auto m = NPoint::from_array(r.next_vec());
    CHECK(coadjoint_action(NPoint::identity(), l) == l);
    CHECK(coadjoint_action(n, l).to_array() == oracle::coadjoint(n.to_array(), l.to_array()));
    CHECK(coadjoint_action(n, coadjoint_action(m, l)) == coadjoint_action(group_mul(n, m), l));
  }
  Covector moved = coadjoint_action({0, 1, 0, 0}, {0, 0, 0, 1});
  CHECK(moved.lambda == 1);
  CHECK(orbit_contains(GenericOrbit{0, 1}, moved));
}

TEST_CASE("orbit classification")
{
  CHECK(classify_orbit({2, 0, 0, 3}) == OrbitId{GenericOrbit{2, 3}});
  CHECK(classify_orbit({0, 0, 5, 0}) == OrbitId{NonGenericOrbit{5}});
  CHECK(classify_orbit({0, 0, 0, 0}) == OrbitId{ZeroOrbit{}});
  // alpha + nu^2 / (2 lambda) is the invariant; (3,7,2,1) sits on O_{5,1}.
  CHECK(classify_orbit({3, 7, 2, 1}) == OrbitId{GenericOrbit{5, 1}});
  CHECK(orbit_contains(GenericOrbit{5, 1}, {3, 7, 2, 1}));
  CHECK(orbit_contains(GenericOrbit{0, 1}, {-2, 5, 2, 1}));
  CHECK_FALSE(orbit_contains(GenericOrbit{0, 1}, {0, 0, 0, 2}));
  auto point = std::get<NonGenericOrbit>(classify_orbit({4, 1, 0, 0}));
  CHECK(point.point_orbit);
  CHECK(point == NonGenericOrbit{0});

  RationalSampler r(32);
  for (int i = 0; i < 100; ++i) {
    Scalar beta = r.next(), eta = r.next(), nu = r.next();
    CHECK(orbit_contains(NonGenericOrbit{nu}, {beta, eta, nu, 0}));
    GenericOrbit g{r.next(), r.next_nonzero()};
    Covector c = generic_orbit_point(g, r.next(), r.next());
    CHECK(classify_orbit(c) == OrbitId{g});
  }
}

TEST_CASE("orbit invariance and the generic orbit formula")
{
  RationalSampler r(33);
  for (int i = 0; i < 200; ++i) {
    auto l = Covector::from_array(r.next_vec());
    auto n = NPoint::from_array(r.next_vec());
    CHECK(classify_orbit(coadjoint_action(n, l)) == classify_orbit(l));

    Scalar alpha = r.next(), lambda = r.next_nonzero();
    Covector moved = coadjoint_action(n, {alpha, 0, 0, lambda});
    CHECK(moved.lambda == lambda);
    CHECK(moved.alpha == alpha - moved.nu * moved.nu / (2 * lambda));
  }
}

TEST_CASE("skew form, radical and isotropic subspaces")
{
  using Basis = std::vector<NVector>;
  auto e = [](std::size_t i) { return NVector::basis(i); };

  SkewForm g = b_lambda({7, 0, 0, 2});
  CHECK(g.matrix()(1, 2) == 2);
  CHECK(g.matrix()(2, 1) == -2);
  CHECK(g.rank() == 2);
  CHECK(radical(g) == Subspace::span(Basis{e(0), e(3)}));

  SkewForm n = b_lambda({0, 0, 3, 0});
  CHECK(n.matrix()(0, 1) == 3);
  CHECK(n.matrix()(1, 0) == -3);
  CHECK(radical(n) == Subspace::span(Basis{e(2), e(3)}));

  SkewForm z = b_lambda({0, 0, 0, 0});
  CHECK(z.matrix().is_zero());
  CHECK(radical(z).dim() == 4);
  CHECK(maximal_isotropic(z).dim() == 4);

  CHECK(maximal_isotropic(g).dim() == 3);
  CHECK(maximal_isotropic(n).dim() == 3);
  CHECK(verify_polarization({7, 0, 0, 2}, standard_polarization()).passed());
  CHECK(verify_polarization({0, 0, 3, 0}, standard_polarization()).passed());
  CHECK_FALSE(verify_polarization({7, 0, 0, 1}, Subspace::span(Basis{e(1), e(2), e(3)})).isotropic);
  CHECK(verify_polarization({0, 0, 0, 0}, Subspace::whole()).passed());

  RationalSampler r(34);
  for (int i = 0; i < 100; ++i) {
    auto l = Covector::from_array(r.next_vec());
    SkewForm b = b_lambda(l);
    auto u = NVector::from_array(r.next_vec()), v = NVector::from_array(r.next_vec());
    CHECK(b(u, v) == pairing(l, bracket(u, v)));
    CHECK(b.matrix()(0, 1) == l.nu);
    CHECK(b.matrix()(1, 2) == l.lambda);
    auto check = verify_polarization(l, maximal_isotropic(b));
    CHECK(check.isotropic);
    CHECK(check.maximal);
  }
}

TEST_CASE("stabilizer")
{
  CHECK(k_transpose_apply({1, 2}, {3, 0, 0, 1}) == Covector{3, 2, 0, 1});
  CHECK(stabilizer_check({3, 0, 0, 1}, {1, 2}));
  CHECK(k_transpose_apply({7, -7}, {0, 0, 0, 1}) == Covector{0, -7, 0, 1});
  CHECK(stabilizer_check({0, 0, 0, 1}, {7, -7}));
  CHECK(stabilizer_check({0, 0, 0, 0}, {3, 4}));
  RationalSampler r(35);
  for (int i = 0; i < 100; ++i) {
    KParams k{r.next(), r.next()};
    CHECK(k_transpose_apply(k, {0, 0, 5, 0}) == Covector{0, 5 * k.k1, 5, 0});
    auto l = Covector::from_array(r.next_vec());
    CHECK(k_transpose_apply(k, l).to_array() == k_element(k).matrix().transposed() * l.to_array());
    CHECK(stabilizer_check(l, {0, 0}));
    CHECK(stabilizer_check(l, k));
  }
}
