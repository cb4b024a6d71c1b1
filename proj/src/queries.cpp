#include "nilrep/queries.hpp"

#include "nilrep/report.hpp"

#include <sstream>

namespace nilrep {

using ojson = nlohmann::ordered_json;

namespace {

ojson subspace_json(const Subspace& w)
{
  ojson basis = ojson::array();
  for (const auto& v : w.basis()) {
    ojson row = ojson::array();
    for (const auto& e : v)
      row.push_back(to_string(e));
    basis.push_back(row);
  }
  return {{"dim", w.dim()}, {"basis", basis}};
}

ojson matrix_json(const Matrix4& m)
{
  ojson rows = ojson::array();
  for (std::size_t i = 0; i < 4; ++i) {
    ojson row = ojson::array();
    for (std::size_t j = 0; j < 4; ++j)
      row.push_back(to_string(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

ojson op_json(const PhaseShiftOp& op)
{
  return {{"shift", to_string(op.shift())},
          {"phase", {to_string(op.phase().c0), to_string(op.phase().c1), to_string(op.phase().c2)}},
          {"formula", to_string(op)}};
}

ojson point_json(const NPoint& n)
{
  return {to_string(n.s), to_string(n.x), to_string(n.y), to_string(n.t)};
}

ojson case_json(const RepCase& c)
{
  switch (c.kind()) {
  case RepCase::Kind::Generic:
    return {{"kind", "generic"}, {"alpha", to_string(c.alpha())}, {"lambda", to_string(c.lambda())}};
  case RepCase::Kind::NonGeneric:
    return {{"kind", "nongeneric"}, {"nu", to_string(c.nu())}};
  case RepCase::Kind::Trivial:
    break;
  }
  return {{"kind", "trivial"}};
}

std::string orbit_symbol(const OrbitId& o)
{
  if (auto g = std::get_if<GenericOrbit>(&o))
    return "O_{" + to_string(g->alpha) + "," + to_string(g->lambda) + "}";
  if (auto n = std::get_if<NonGenericOrbit>(&o))
    return "O_" + to_string(n->nu);
  return "O_0 = {0}";
}

} // namespace

Document describe_orbit(const Covector& c)
{
  Document doc;
  OrbitId orbit = classify_orbit(c);
  SkewForm b = b_lambda(c);
  Subspace rad = radical(b);
  Subspace iso = maximal_isotropic(b);
  const bool degenerate = b.rank() == 0;
  const Subspace m = degenerate ? Subspace::whole() : standard_polarization();
  PolarizationCheck polar = verify_polarization(c, m);
  const bool stabilizer = stabilizer_is_K({c}, default_k_grid());
  RepCase rep = RepCase::for_orbit(orbit);

  ojson orbit_json;
  std::ostringstream os;
  os << "Lambda = " << to_string(c) << "\n";
  os << "orbit: " << to_string(orbit) << "  " << orbit_symbol(orbit) << "\n";
  if (auto g = std::get_if<GenericOrbit>(&orbit)) {
    os << "  O = {(" << to_string(g->alpha) << " - nu^2/(2*" << to_string(g->lambda) << "), mu, nu, "
       << to_string(g->lambda) << ") : mu, nu in R}\n";
    orbit_json = {{"kind", "generic"}, {"alpha", to_string(g->alpha)}, {"lambda", to_string(g->lambda)}};
  } else if (auto n = std::get_if<NonGenericOrbit>(&orbit)) {
    os << "  O = {(beta, eta, " << to_string(n->nu) << ", 0) : beta, eta in R}";
    if (n->point_orbit)
      os << "  (Ad*-orbit of Lambda itself is the single point; grouped with O_0)";
    os << "\n";
    orbit_json = {{"kind", "nongeneric"}, {"nu", to_string(n->nu)}, {"point_orbit", n->point_orbit}};
  } else {
    os << "  O = {0}\n";
    orbit_json = {{"kind", "zero"}};
  }
  os << "representation: " << rep.symbol("rho") << "\n";
  os << "B_Lambda =\n" << to_string(b.matrix()) << "\n";
  os << "rank B_Lambda = " << b.rank() << "\n";
  os << "radical = " << to_string(rad) << "\n";
  os << "maximal isotropic (greedy) = " << to_string(iso) << "\n";
  os << "m_Lambda = " << (degenerate ? "n" : "{(s,0,y,t)}") << ": isotropic=" << polar.isotropic << " maximal=" << polar.maximal
     << " subalgebra=" << polar.subalgebra << " -> " << (polar.passed() ? "polarization" : "NOT a polarization")
     << "\n";
  os << "K_Lambda = K on k in {-2..2}^2: " << (stabilizer ? "yes" : "NO") << "\n";

  doc.text = os.str();
  doc.json = {{"covector", {to_string(c.alpha), to_string(c.mu), to_string(c.nu), to_string(c.lambda)}},
              {"orbit", orbit_json},
              {"representation", case_json(rep)},
              {"b_lambda", matrix_json(b.matrix())},
              {"rank", b.rank()},
              {"radical", subspace_json(rad)},
              {"maximal_isotropic", subspace_json(iso)},
              {"polarization",
               {{"subspace", subspace_json(m)},
                {"isotropic", polar.isotropic}, {"maximal", polar.maximal}, {"subalgebra", polar.subalgebra}}},
              {"stabilizer_is_K", stabilizer}};
  doc.ok = polar.passed() && stabilizer;
  return doc;
}

Document describe_rep(const RepQuery& q)
{
  Document doc;
  PhaseShiftOp r = rho(q.rep, q.n);
  PhaseShiftOp w = omega(q.rep, q.k);
  PhaseShiftOp twisted = rho_twisted(q.rep, q.k, q.n);
  IntertwineResult it = intertwine_defect(q.rep, q.k, q.n);

  std::ostringstream os;
  const std::string k_str = "(" + to_string(q.k.k1) + ", " + to_string(q.k.k2) + ")";
  os << "case: " << q.rep.name() << "\n";
  os << q.rep.symbol("rho") << to_string(q.n) << ":  shift " << to_string(r.shift()) << ", phase "
     << to_string(r.phase()) << "\n    " << to_string(r) << "\n";
  os << q.rep.symbol("omega") << k_str << ":  shift " << to_string(w.shift()) << ", phase "
     << to_string(w.phase()) << "\n    " << to_string(w) << "\n";
  os << q.rep.symbol("rho") << "^k" << to_string(q.n) << " = " << q.rep.symbol("rho")
     << to_string(apply_aut(k_element(q.k), q.n)) << ":  " << to_string(twisted) << "\n";
  os << "rho^k(n) omega(k) = omega(k) rho(n): " << (it.equal ? "yes" : "NO") << "\n";

  doc.json = {{"case", case_json(q.rep)},
              {"n", point_json(q.n)},
              {"k", {to_string(q.k.k1), to_string(q.k.k2)}},
              {"rho", op_json(r)},
              {"omega", op_json(w)},
              {"rho_twisted", op_json(twisted)},
              {"intertwines", it.equal}};

  if (q.grid_demo) {
    GridSpec spec(q.grid_n, q.grid_half_width);
    if (!spec.lattice_offset(r.shift()))
      throw Error(ErrorKind::Domain, "grid demo needs x to be a multiple of the grid step h = " +
                                         to_string(spec.step()) + " (got x = " + to_string(r.shift()) +
                                         "); choose x = j*h or change --grid-n / --grid-L");
    auto f = GridFunction::gaussian(spec, 0.0, 1.0);
    auto rf = apply_to_grid(r, f);
    auto wf = apply_to_grid(w, f);
    std::ostringstream g;
    g.precision(17);
    g << "grid demo (n=" << spec.size() << ", L=" << spec.half_width() << ", gaussian f):\n";
    g << "  |f| = " << f.norm() << "\n  |rho(n) f| = " << rf.norm() << "\n  |omega(k) f| = " << wf.norm()
      << "\n";
    os << g.str();
    doc.json["grid"] = {{"n", spec.size()},
                        {"half_width", spec.half_width()},
                        {"norm_f", f.norm()},
                        {"norm_rho_f", rf.norm()},
                        {"norm_omega_f", wf.norm()}};
  }
  doc.text = os.str();
  doc.ok = it.equal;
  return doc;
}

Document describe_decomposition(const RepCase& c, std::size_t sample_size)
{
  Document doc;
  auto d = multiplicity_free(c, default_u_sample(sample_size));
  std::ostringstream os;
  os << "case: " << c.name() << "\n";
  switch (c.kind()) {
  case RepCase::Kind::Generic:
    os << "L2(R) = integral over u of chi_{-" << to_string(c.lambda()) << " u^2/2, " << to_string(c.lambda())
       << " u} du\n";
    break;
  case RepCase::Kind::NonGeneric:
    os << "L2(R) = integral over u of chi_{" << to_string(c.nu()) << " u, 0} du\n";
    break;
  case RepCase::Kind::Trivial:
    os << "trivial representation: omega = chi_{0,0}\n";
    break;
  }
  os << "rule: " << d.rule << "\n";
  os << "sample: " << d.characters.size() << " points, characters pairwise distinct: "
     << (d.sampled_distinct ? "yes" : "no") << "\n";
  const std::size_t shown = std::min<std::size_t>(d.characters.size(), 5);
  for (std::size_t i = 0; i < shown; ++i)
    os << "  u = " << to_string(d.characters[i].first) << "  ->  " << to_string(d.characters[i].second) << "\n";
  if (shown < d.characters.size())
    os << "  ...\n";
  os << "multiplicity free: " << (d.multiplicity_free() ? "yes" : "NO") << "\n";
  doc.text = os.str();
  doc.json = to_json(d);
  doc.ok = d.multiplicity_free();
  return doc;
}

Document describe_verification(const TheoremReport& r)
{
  return {render_text(r), to_json(r), r.verdict};
}

} // namespace nilrep
