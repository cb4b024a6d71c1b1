#include "nilrep/gelfand.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace nilrep {

std::string to_string(const KCharacter& c)
{
  return "chi_{" + to_string(c.a) + "," + to_string(c.b) + "}";
}

KCharacter character_at(const RepCase& c, const Scalar& u)
{
  switch (c.kind()) {
  case RepCase::Kind::Generic:
    return {-c.lambda() * u * u / 2, c.lambda() * u};
  case RepCase::Kind::NonGeneric:
    return {c.nu() * u, 0};
  case RepCase::Kind::Trivial:
    break;
  }
  return {0, 0};
}

Model Model::standard()
{
  return {[](const RepCase& c, const NPoint& n) { return nilrep::rho(c, n); },
          [](const RepCase& c, const KParams& k) { return nilrep::omega(c, k); },
          [](const KParams& k, const Covector& l) { return k_transpose_apply(k, l); },
          [](const RepCase& c, const Scalar& u) { return character_at(c, u); }};
}

namespace {

const std::vector<std::pair<Fault, std::string>>& fault_names()
{
  static const std::vector<std::pair<Fault, std::string>> names{
      {Fault::None, "none"},
      {Fault::OmegaSign, "omega-sign"},
      {Fault::OmegaMultiplier, "omega-multiplier"},
      {Fault::RhoCocycle, "rho-cocycle"},
      {Fault::StabilizerTranspose, "stabilizer-transpose"},
      {Fault::CharacterCollapse, "character-collapse"},
  };
  return names;
}

} // namespace

std::string to_string(Fault f)
{
  for (const auto& [fault, name] : fault_names())
    if (fault == f)
      return name;
  return "none";
}

Fault parse_fault(std::string_view name)
{
  for (const auto& [fault, n] : fault_names())
    if (n == name)
      return fault;
  throw Error(ErrorKind::Parse, "unknown fault mode '" + std::string(name) + "'");
}

const std::vector<Fault>& all_faults()
{
  static const std::vector<Fault> faults{Fault::OmegaSign, Fault::OmegaMultiplier, Fault::RhoCocycle,
                                         Fault::StabilizerTranspose, Fault::CharacterCollapse};
  return faults;
}

Model faulty_model(Fault f)
{
  Model m = Model::standard();
  switch (f) {
  case Fault::None:
    break;
  case Fault::OmegaSign:
    m.omega = [](const RepCase& c, const KParams& k) { return omega(c, KParams{-k.k1, k.k2}); };
    break;
  case Fault::OmegaMultiplier:
    m.omega = [](const RepCase& c, const KParams& k) {
      PhaseShiftOp w = omega(c, k);
      QuadPhase p = w.phase();
      p.c0 += k.k1 * k.k2;
      return PhaseShiftOp(w.shift(), p);
    };
    break;
  case Fault::RhoCocycle:
    m.rho = [](const RepCase& c, const NPoint& n) {
      PhaseShiftOp r = rho(c, n);
      if (c.kind() != RepCase::Kind::Generic)
        return r;
      QuadPhase p = r.phase();
      p.c0 -= c.lambda() * n.x * n.y / 2;
      return PhaseShiftOp(r.shift(), p);
    };
    break;
  case Fault::StabilizerTranspose:
    m.k_dual = [](const KParams& k, const Covector& l) {
      return Covector::from_array(k_element(k).matrix() * l.to_array());
    };
    break;
  case Fault::CharacterCollapse:
    m.character = [](const RepCase& c, const Scalar& u) {
      KCharacter ch = character_at(c, u);
      if (c.kind() == RepCase::Kind::Generic)
        ch.b = 0;
      else
        ch.a = 0;
      return ch;
    };
    break;
  }
  return m;
}

bool character_consistency(const RepCase& c, const Scalar& u, const KParams& k, const Model& m)
{
  PhaseShiftOp w = m.omega(c, k);
  KCharacter ch = m.character(c, u);
  return sgn(w.shift()) == 0 && w.phase()(u) == ch.a * k.k1 + ch.b * k.k2;
}

std::vector<Scalar> default_u_sample(std::size_t count)
{
  std::vector<Scalar> out;
  const long half = static_cast<long>(count / 2);
  for (long j = -half; static_cast<std::size_t>(j + half) < count; ++j) {
    Scalar u(j, 2);
    u.canonicalize();
    out.push_back(u);
  }
  return out;
}

DecompositionReport multiplicity_free(const RepCase& c, const std::vector<Scalar>& sample, const Model& m)
{
  if (sample.empty())
    throw Error(ErrorKind::InvalidArgument, "multiplicity_free needs a nonempty u sample");
  {
    auto sorted = sample;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw Error(ErrorKind::InvalidArgument, "u sample contains repeated values");
  }

  DecompositionReport r;
  r.rep = c;
  for (const auto& u : sample)
    r.characters.emplace_back(u, m.character(c, u));

  std::map<std::pair<Scalar, Scalar>, Scalar> seen;
  r.sampled_distinct = true;
  for (const auto& [u, ch] : r.characters) {
    auto [it, inserted] = seen.try_emplace({ch.a, ch.b}, u);
    if (!inserted && r.sampled_distinct) {
      r.sampled_distinct = false;
      r.witness = std::make_pair(it->second, u);
    }
  }

  // Character parameters are read off a quadratic phase, so each component is
  // a polynomial of degree <= 2 in u; equal nonzero first differences at
  // u = 0, 1, 2 mean the component is affine with nonzero slope, hence injective.
  auto affine_nonconstant = [&](auto component) {
    Scalar v0 = component(m.character(c, 0)), v1 = component(m.character(c, 1)),
           v2 = component(m.character(c, 2));
    return v2 - v1 == v1 - v0 && v1 != v0;
  };
  const bool a_injective = affine_nonconstant([](const KCharacter& ch) { return ch.a; });
  const bool b_injective = affine_nonconstant([](const KCharacter& ch) { return ch.b; });
  r.symbolic_injective = a_injective || b_injective;

  switch (c.kind()) {
  case RepCase::Kind::Generic:
    r.rule = "u -> lambda u is injective for lambda != 0";
    break;
  case RepCase::Kind::NonGeneric:
    if (sgn(c.nu()) != 0) {
      r.rule = "u -> nu u is injective for nu != 0";
    } else {
      r.single_character = true;
      r.rule = "nu = 0: omega is the identity, every u carries the single character chi_{0,0}";
    }
    break;
  case RepCase::Kind::Trivial:
    r.single_character = true;
    r.rule = "Lambda = 0: trivial representation, omega is the single character chi_{0,0}";
    break;
  }
  if (r.single_character) {
    // vacuous, but the map must still be constant (0,0)
    for (const auto& [u, ch] : r.characters)
      if (!(ch == KCharacter{0, 0})) {
        r.single_character = false;
        r.symbolic_injective = false;
        r.witness = std::make_pair(u, u);
        break;
      }
  }
  return r;
}

bool stabilizer_is_K(const std::vector<Covector>& lambdas, const std::vector<KParams>& ks, const Model& m)
{
  for (const auto& l : lambdas)
    for (const auto& k : ks)
      if (!orbit_contains(classify_orbit(l), m.k_dual(k, l)))
        return false;
  return true;
}

std::vector<Covector> default_covector_grid()
{
  std::vector<Covector> grid;
  for (int lambda : {0, 1, -1, 2, -2})
    for (int alpha : {0, 1, -1})
      for (int nu : {0, 1, -1, 3, -3})
        for (int mu : {0, 1})
          grid.push_back({alpha, mu, nu, lambda});
  return grid;
}

std::vector<KParams> default_k_grid()
{
  std::vector<KParams> grid;
  for (int k1 = -2; k1 <= 2; ++k1)
    for (int k2 = -2; k2 <= 2; ++k2)
      grid.push_back({k1, k2});
  return grid;
}

std::string to_string(CaseSelector s)
{
  switch (s) {
  case CaseSelector::Generic:
    return "generic";
  case CaseSelector::NonGeneric:
    return "nongeneric";
  case CaseSelector::Trivial:
    return "trivial";
  case CaseSelector::All:
    break;
  }
  return "all";
}

CaseSelector parse_case_selector(std::string_view name)
{
  for (auto s : {CaseSelector::All, CaseSelector::Generic, CaseSelector::NonGeneric, CaseSelector::Trivial})
    if (to_string(s) == name)
      return s;
  throw Error(ErrorKind::Parse, "unknown case selector '" + std::string(name) + "'");
}

VerifyConfig VerifyConfig::defaults()
{
  VerifyConfig c;
  c.generic_params = {{0, 1}, {1, -1}, {Scalar(-1, 2), 2}, {3, Scalar(-1, 3)}};
  c.nongeneric_params = {1, -3, Scalar(1, 2), 0};
  return c;
}

void VerifyConfig::validate() const
{
  auto bad = [](const std::string& what) { throw Error(ErrorKind::InvalidArgument, what); };
  if (group_trials <= 0 || rep_trials <= 0 || pair_trials <= 0 || perturbations <= 0 || grid_functions <= 0)
    bad("trial counts must be positive");
  if (mf_sample < 2)
    bad("multiplicity-free sample needs at least two points");
  if (!(grid_tolerance > 0))
    bad("tolerance must be positive");
  for (const auto& [alpha, lambda] : generic_params)
    if (sgn(lambda) == 0)
      bad("lambda must be nonzero for a generic case");
  GridSpec(grid_n, grid_half_width);
  if (selected_cases().empty())
    bad("no representation cases selected");
}

std::vector<RepCase> VerifyConfig::selected_cases() const
{
  std::vector<RepCase> out;
  if (cases == CaseSelector::All || cases == CaseSelector::Generic)
    for (const auto& [alpha, lambda] : generic_params)
      out.push_back(RepCase::generic(alpha, lambda));
  if (cases == CaseSelector::All || cases == CaseSelector::NonGeneric)
    for (const auto& nu : nongeneric_params)
      out.push_back(RepCase::non_generic(nu));
  if (cases == CaseSelector::All || cases == CaseSelector::Trivial)
    out.push_back(RepCase::trivial());
  return out;
}

bool CaseReport::passed() const
{
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

// ---------------------------------------------------------------------------
// Check drivers

namespace {

class Recorder {
public:
  explicit Recorder(std::string name) { result_.name = std::move(name); }

  template <class MakeWitness>
  void record(bool ok, MakeWitness&& make_witness)
  {
    ++result_.trials;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.witness = Witness{make_witness()};
    }
  }
  /// Counts extra trials that were folded into a single recorded outcome.
  void count(std::int64_t n) { result_.trials += n; }

  CheckResult take() { return std::move(result_); }

private:
  CheckResult result_;
};

using Fields = std::vector<std::pair<std::string, std::string>>;

RationalSampler sampler_for(const VerifyConfig& cfg, std::size_t section, std::size_t check)
{
  std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                    static_cast<std::uint32_t>(section), static_cast<std::uint32_t>(check)};
  return RationalSampler(seq);
}

NPoint random_point(RationalSampler& r)
{
  return NPoint::from_array(r.next_vec());
}

NVector random_vector(RationalSampler& r)
{
  return NVector::from_array(r.next_vec());
}

KParams random_k(RationalSampler& r)
{
  return {r.next(), r.next()};
}

MParams random_m(RationalSampler& r)
{
  return {r.next(), r.next(), r.next(), r.next(), r.next()};
}

std::string str(const PhaseShiftOp& op)
{
  return to_string(op);
}

std::string str(const KParams& k)
{
  return "(" + to_string(k.k1) + ", " + to_string(k.k2) + ")";
}

std::string str(const MParams& m)
{
  return "(" + to_string(m.a) + ", " + to_string(m.b) + ", " + to_string(m.c) + ", " + to_string(m.d) + ", " +
         to_string(m.e) + ")";
}

} // namespace

CaseReport verify_structure(const VerifyConfig& cfg, const Model& m)
{
  CaseReport report;
  report.name = "structure";
  std::size_t check = 0;
  auto next_sampler = [&] { return sampler_for(cfg, 0, check++); };

  {
    Recorder rec("group-associativity");
    auto r = next_sampler();
    for (int i = 0; i < cfg.group_trials; ++i) {
      auto a = random_point(r), b = random_point(r), c = random_point(r);
      auto lhs = group_mul(group_mul(a, b), c), rhs = group_mul(a, group_mul(b, c));
      rec.record(lhs == rhs, [&] {
        return Fields{{"a", to_string(a)}, {"b", to_string(b)}, {"c", to_string(c)},
                      {"(ab)c", to_string(lhs)}, {"a(bc)", to_string(rhs)}};
      });
    }
    report.checks.push_back(rec.take());
  }
  {
    Recorder rec("group-inverse");
    auto r = next_sampler();
    for (int i = 0; i < cfg.group_trials; ++i) {
      auto n = random_point(r);
      auto inv = group_inv(n);
      rec.record(group_mul(n, inv) == NPoint::identity() && group_mul(inv, n) == NPoint::identity(),
                 [&] { return Fields{{"n", to_string(n)}, {"n^-1", to_string(inv)}}; });
    }
    report.checks.push_back(rec.take());
  }
  {
    Recorder rec("bracket-antisymmetry-jacobi");
    auto r = next_sampler();
    for (int i = 0; i < cfg.group_trials; ++i) {
      auto u = random_vector(r), v = random_vector(r), w = random_vector(r);
      bool ok = bracket(u, v) == -bracket(v, u) && jacobi_defect(u, v, w).is_zero();
      rec.record(ok, [&] {
        return Fields{{"u", to_string(u)}, {"v", to_string(v)}, {"w", to_string(w)},
                      {"jacobi", to_string(jacobi_defect(u, v, w))}};
      });
    }
    report.checks.push_back(rec.take());
  }
  {
    Recorder rec("ad-homomorphism");
    auto r = next_sampler();
    for (int i = 0; i < cfg.group_trials; ++i) {
      auto a = random_point(r), b = random_point(r);
      rec.record(Ad(group_mul(a, b)) == Ad(a) * Ad(b),
                 [&] { return Fields{{"a", to_string(a)}, {"b", to_string(b)}}; });
    }
    report.checks.push_back(rec.take());
  }
  {
    Recorder rec("ad-preserves-bracket");
    auto r = next_sampler();
    for (int i = 0; i < cfg.group_trials; ++i) {
      auto n = random_point(r);
      auto u = random_vector(r), v = random_vector(r);
      Matrix4 ad = Ad(n);
      auto lhs = ad * bracket(u, v).to_array();
      auto rhs = bracket(NVector::from_array(ad * u.to_array()), NVector::from_array(ad * v.to_array()));
      rec.record(lhs == rhs.to_array(),
                 [&] { return Fields{{"n", to_string(n)}, {"u", to_string(u)}, {"v", to_string(v)}}; });
    }
    report.checks.push_back(rec.take());
  }
  {
    Recorder rec("ad-nilpotent");
    auto r = next_sampler();
    for (int i = 0; i < cfg.group_trials; ++i) {
      auto u = random_vector(r);
      Matrix4 a = ad_matrix(u);
      rec.record((a * a * a * a).is_zero(), [&] { return Fields{{"u", to_string(u)}}; });
    }
    report.checks.push_back(rec.take());
  }
  {
    Recorder rec("s-action");
    auto r = next_sampler();
    for (int i = 0; i < cfg.group_trials; ++i) {
      Scalar s = r.next(), s2 = r.next();
      H1Point h{r.next(), r.next(), r.next()}, g{r.next(), r.next(), r.next()};
      bool ok = s_action(s, s_action(s2, h)) == s_action(s + s2, h) &&
                s_action(s, h1_mul(h, g)) == h1_mul(s_action(s, h), s_action(s, g));
      rec.record(ok, [&] { return Fields{{"s", to_string(s)}, {"s'", to_string(s2)}}; });
    }
    report.checks.push_back(rec.take());
  }
  {
    Recorder rec("lower-central-series");
    auto series = lower_central_series();
    const auto e3 = NVector::basis(2), e4 = NVector::basis(3);
    bool ok = series.size() == 3 && series[0].dim() == 2 && series[1].dim() == 1 && series[2].dim() == 0 &&
              series[0] == Subspace::span(std::vector<NVector>{e3, e4}) &&
              series[1] == Subspace::span(std::vector<NVector>{e4});
    rec.record(ok, [&] {
      Fields f;
      for (std::size_t i = 0; i < series.size(); ++i)
        f.emplace_back("n^" + std::to_string(i + 1), to_string(series[i]));
      return f;
    });
    report.checks.push_back(rec.take());
  }
  {
    Recorder rec("center");
    auto c = center();
    rec.record(c == Subspace::span(std::vector<NVector>{NVector::basis(3)}),
               [&] { return Fields{{"center", to_string(c)}}; });
    report.checks.push_back(rec.take());
  }
  {
    Recorder rec("aut0-family");
    auto r = next_sampler();
    for (int i = 0; i < cfg.pair_trials; ++i) {
      AParams a{r.next_positive()};
      MParams mp = random_m(r);
      Matrix4 k = a_element(a).matrix() * m_element(mp).matrix();
      bool ok = is_automorphism(k);
      if (ok) {
        auto [a2, m2] = decompose_aut0(k);
        ok = a2 == a && m2 == mp;
      }
      rec.record(ok, [&] { return Fields{{"rho", to_string(a.rho)}, {"m", str(mp)}}; });
    }
    report.checks.push_back(rec.take());
  }
  {
    Recorder rec("aut0-perturbation");
    auto r = next_sampler();
    // entries fixed by the family: everything except a, b, c, d, e positions
    static const std::vector<std::pair<std::size_t, std::size_t>> constrained{
        {0, 0}, {0, 2}, {0, 3}, {1, 0}, {1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 2}, {3, 3}, {2, 0}};
    for (int i = 0; i < cfg.perturbations; ++i) {
      AParams a{r.next_positive()};
      MParams mp = random_m(r);
      Matrix4 k = a_element(a).matrix() * m_element(mp).matrix();
      auto [row, col] = constrained[static_cast<std::size_t>(r.next_int(0, static_cast<int>(constrained.size()) - 1))];
      Scalar delta = r.next_nonzero();
      k(row, col) += delta;
      bool accepted;
      try {
        accepted = is_automorphism(k);
      } catch (const Error&) {
        accepted = false; // singular
      }
      rec.record(!accepted, [&] {
        return Fields{{"entry", "(" + std::to_string(row) + "," + std::to_string(col) + ")"},
                      {"delta", to_string(delta)},
                      {"matrix", to_string(k)}};
      });
    }
    report.checks.push_back(rec.take());
  }
  {
    Recorder rec("m-product-matrix");
    auto r = next_sampler();
    for (int i = 0; i < cfg.pair_trials; ++i) {
      MParams p = random_m(r), q = random_m(r), w = random_m(r);
      bool ok = m_element(m_mul(p, q)).matrix() == m_element(p).matrix() * m_element(q).matrix() &&
                m_mul(m_mul(p, q), w) == m_mul(p, m_mul(q, w));
      rec.record(ok, [&] { return Fields{{"m", str(p)}, {"m'", str(q)}, {"m*m'", str(m_mul(p, q))}}; });
    }
    report.checks.push_back(rec.take());
  }
  {
    Recorder rec("h-semidirect");
    auto r = next_sampler();
    for (int i = 0; i < cfg.pair_trials; ++i) {
      MParams p = random_m(r);
      auto [h, v] = m_as_semidirect(p);
      HParams h2{r.next(), r.next()};
      bool ok = m_mul(embed(h), embed(v)) == p && m_mul(embed(h), embed(h2)) == embed(h_mul(h, h2));
      rec.record(ok, [&] { return Fields{{"m", str(p)}}; });
    }
    report.checks.push_back(rec.take());
  }
  {
    Recorder rec("aut-action-homomorphism");
    auto r = next_sampler();
    for (int i = 0; i < cfg.pair_trials; ++i) {
      AutMatrix k = aut0_element(AParams{r.next_positive()}, random_m(r));
      auto a = random_point(r), b = random_point(r);
      rec.record(apply_aut(k, group_mul(a, b)) == group_mul(apply_aut(k, a), apply_aut(k, b)),
                 [&] { return Fields{{"k", to_string(k.matrix())}, {"a", to_string(a)}, {"b", to_string(b)}}; });
    }
    report.checks.push_back(rec.take());
  }
  {
    Recorder rec("orbit-invariance");
    auto r = next_sampler();
    for (int i = 0; i < cfg.pair_trials; ++i) {
      auto n = random_point(r);
      Covector l{r.next(), r.next(), r.next(), i % 3 == 0 ? Scalar(0) : r.next()};
      Covector moved = coadjoint_action(n, l);
      OrbitId orbit = classify_orbit(l);
      bool ok = classify_orbit(moved) == orbit;
      if (auto g = std::get_if<GenericOrbit>(&orbit); g && ok) {
        // the moved covector is again of the form (alpha - nu^2/(2 lambda), mu, nu, lambda)
        ok = moved == generic_orbit_point(*g, moved.mu, moved.nu);
      }
      rec.record(ok, [&] {
        return Fields{{"n", to_string(n)}, {"Lambda", to_string(l)}, {"Ad*(n)Lambda", to_string(moved)}};
      });
    }
    report.checks.push_back(rec.take());
  }
  {
    Recorder rec("coadjoint-action-composition");
    auto r = next_sampler();
    for (int i = 0; i < cfg.pair_trials; ++i) {
      auto a = random_point(r), b = random_point(r);
      Covector l = Covector::from_array(r.next_vec());
      rec.record(coadjoint_action(a, coadjoint_action(b, l)) == coadjoint_action(group_mul(a, b), l), [&] {
        return Fields{{"a", to_string(a)}, {"b", to_string(b)}, {"Lambda", to_string(l)}};
      });
    }
    report.checks.push_back(rec.take());
  }
  {
    Recorder rec("stabilizer-grid");
    for (const auto& l : default_covector_grid())
      for (const auto& k : default_k_grid()) {
        Covector moved = m.k_dual(k, l);
        rec.record(orbit_contains(classify_orbit(l), moved), [&] {
          return Fields{{"Lambda", to_string(l)}, {"k", str(k)}, {"k^t X_Lambda", to_string(moved)},
                        {"orbit", to_string(classify_orbit(l))}};
        });
      }
    report.checks.push_back(rec.take());
  }
  {
    Recorder rec("polarization");
    const Subspace standard = standard_polarization();
    for (const auto& l : default_covector_grid()) {
      const bool degenerate = b_lambda(l).rank() == 0;
      auto polar = verify_polarization(l, degenerate ? Subspace::whole() : standard);
      auto greedy = maximal_isotropic(b_lambda(l));
      auto greedy_check = verify_polarization(l, greedy);
      rec.record(polar.passed() && greedy_check.isotropic && greedy_check.maximal, [&] {
        return Fields{{"Lambda", to_string(l)}, {"greedy", to_string(greedy)}};
      });
    }
    report.checks.push_back(rec.take());
  }
  return report;
}

CaseReport verify_case(const RepCase& c, std::size_t index, const VerifyConfig& cfg, const Model& m)
{
  CaseReport report;
  report.name = c.name();
  std::size_t check = 0;
  auto next_sampler = [&] { return sampler_for(cfg, index + 1, check++); };

  auto intertwines = [&](const KParams& k, const NPoint& n, Recorder& rec) {
    PhaseShiftOp w = m.omega(c, k);
    PhaseShiftOp lhs = op_compose(m.rho(c, apply_aut(k_element(k), n)), w);
    PhaseShiftOp rhs = op_compose(w, m.rho(c, n));
    rec.record(lhs == rhs, [&] {
      return Fields{{"k", str(k)},
                    {"n", to_string(n)},
                    {"rho^k(n) omega(k)", str(lhs)},
                    {"omega(k) rho(n)", str(rhs)},
                    {"max_discrepancy", to_string(op_discrepancy(lhs, rhs))}};
    });
  };

  {
    Recorder rec("rho-homomorphism");
    auto r = next_sampler();
    for (int i = 0; i < cfg.rep_trials; ++i) {
      auto a = random_point(r), b = random_point(r);
      auto lhs = m.rho(c, group_mul(a, b));
      auto rhs = op_compose(m.rho(c, a), m.rho(c, b));
      rec.record(lhs == rhs, [&] {
        return Fields{{"n1", to_string(a)}, {"n2", to_string(b)}, {"rho(n1 n2)", str(lhs)},
                      {"rho(n1) rho(n2)", str(rhs)}};
      });
    }
    report.checks.push_back(rec.take());
  }
  {
    Recorder rec("rho-generator-factorization");
    auto r = next_sampler();
    for (int i = 0; i < cfg.pair_trials; ++i) {
      auto n = random_point(r);
      auto closed = m.rho(c, n);
      auto composed = rho_via_generators(c, n);
      rec.record(closed == composed, [&] {
        return Fields{{"n", to_string(n)}, {"closed form", str(closed)}, {"generators", str(composed)}};
      });
    }
    report.checks.push_back(rec.take());
  }
  {
    Recorder rec("omega-true-representation");
    auto r = next_sampler();
    rec.record(m.omega(c, KParams{0, 0}).is_identity(), [] { return Fields{{"k", "(0, 0)"}}; });
    for (int i = 0; i < cfg.pair_trials; ++i) {
      auto k = random_k(r), k2 = random_k(r);
      auto lhs = op_compose(m.omega(c, k), m.omega(c, k2));
      auto rhs = m.omega(c, k + k2);
      rec.record(lhs == rhs, [&] {
        return Fields{{"k", str(k)}, {"k'", str(k2)}, {"omega(k) omega(k')", str(lhs)}, {"omega(k+k')", str(rhs)}};
      });
    }
    report.checks.push_back(rec.take());
  }
  {
    Recorder rec("intertwining-generators");
    auto r = next_sampler();
    const int per_generator = std::max(1, cfg.pair_trials / 4);
    for (int g = 0; g < 4; ++g)
      for (int i = 0; i < per_generator; ++i) {
        Vec4 v{0, 0, 0, 0};
        v[static_cast<std::size_t>(g)] = r.next();
        intertwines(random_k(r), NPoint::from_array(v), rec);
      }
    report.checks.push_back(rec.take());
  }
  {
    Recorder rec("intertwining-general");
    auto r = next_sampler();
    for (int i = 0; i < cfg.pair_trials; ++i) {
      auto k = random_k(r);
      intertwines(k, random_point(r), rec);
    }
    report.checks.push_back(rec.take());
  }
  {
    Recorder rec("stabilizer");
    auto r = next_sampler();
    OrbitId orbit = classify_orbit(c.representative());
    for (int i = 0; i < cfg.pair_trials; ++i) {
      Covector l = c.representative();
      if (auto g = std::get_if<GenericOrbit>(&orbit))
        l = generic_orbit_point(*g, r.next(), r.next());
      else if (c.kind() == RepCase::Kind::NonGeneric)
        l = {r.next(), r.next(), c.nu(), 0};
      auto k = random_k(r);
      Covector moved = m.k_dual(k, l);
      rec.record(orbit_contains(classify_orbit(l), moved), [&] {
        return Fields{{"Lambda", to_string(l)}, {"k", str(k)}, {"k^t X_Lambda", to_string(moved)}};
      });
    }
    report.checks.push_back(rec.take());
  }
  {
    Recorder rec("character-consistency");
    auto r = next_sampler();
    for (int i = 0; i < cfg.pair_trials; ++i) {
      Scalar u = r.next();
      auto k = random_k(r);
      rec.record(character_consistency(c, u, k, m), [&] {
        return Fields{{"u", to_string(u)},
                      {"k", str(k)},
                      {"omega(k)", str(m.omega(c, k))},
                      {"character", to_string(m.character(c, u))}};
      });
    }
    report.checks.push_back(rec.take());
  }
  {
    Recorder rec("multiplicity-free");
    auto sample = default_u_sample(cfg.mf_sample);
    auto d = multiplicity_free(c, sample, m);
    rec.count(static_cast<std::int64_t>(sample.size()) - 1);
    rec.record(d.multiplicity_free(), [&] {
      Fields f{{"rule", d.rule}};
      if (d.witness) {
        f.emplace_back("u1", to_string(d.witness->first));
        f.emplace_back("u2", to_string(d.witness->second));
        f.emplace_back("character", to_string(m.character(c, d.witness->first)));
      }
      return f;
    });
    report.checks.push_back(rec.take());
  }
  {
    Recorder rec("grid-unitarity");
    auto r = next_sampler();
    GridSpec spec(cfg.grid_n, cfg.grid_half_width);
    std::vector<PhaseShiftOp> ops;
    for (int i = 0; i < 2; ++i) {
      NPoint n = random_point(r);
      n.x = Scalar(r.next_int(-64, 64)) * spec.step();
      ops.push_back(m.rho(c, n));
      ops.push_back(m.omega(c, random_k(r)));
    }
    std::uint64_t seed = r.engine()();
    for (const auto& op : ops) {
      double u = unitarity_defect(op, spec, cfg.grid_functions, seed);
      double nd = norm_defect(op, spec, cfg.grid_functions, seed + 7919);
      rec.count(cfg.grid_functions - 1);
      rec.record(u <= cfg.grid_tolerance && nd <= cfg.grid_tolerance, [&] {
        std::ostringstream os_u, os_n;
        os_u << u;
        os_n << nd;
        return Fields{{"op", str(op)}, {"unitarity_defect", os_u.str()}, {"norm_defect", os_n.str()}};
      });
    }
    report.checks.push_back(rec.take());
  }
  return report;
}

TheoremReport verify_theorem(const VerifyConfig& config)
{
  config.validate();
  TheoremReport report;
  report.config = config;
  Model model = faulty_model(config.fault);
  if (config.include_structure)
    report.cases.push_back(verify_structure(config, model));
  auto cases = config.selected_cases();
  for (std::size_t i = 0; i < cases.size(); ++i)
    report.cases.push_back(verify_case(cases[i], i, config, model));
  report.verdict = std::all_of(report.cases.begin(), report.cases.end(),
                               [](const CaseReport& c) { return c.passed(); });
  return report;
}

} // namespace nilrep
