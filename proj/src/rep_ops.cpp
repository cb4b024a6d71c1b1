#include "nilrep/rep_ops.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace nilrep {

double QuadPhase::operator()(double u) const
{
  return to_double(c0) + to_double(c1) * u + to_double(c2) * u * u;
}

QuadPhase QuadPhase::shifted(const Scalar& a) const
{
  // c0 + c1 (u - a) + c2 (u - a)^2
  return {c0 - c1 * a + c2 * a * a, c1 - 2 * c2 * a, c2};
}

std::string to_string(const QuadPhase& p)
{
  std::ostringstream os;
  bool first = true;
  auto term = [&](const Scalar& c, const char* mono) {
    if (sgn(c) == 0)
      return;
    Scalar mag = abs(c);
    if (first)
      os << (sgn(c) < 0 ? "-" : "");
    else
      os << (sgn(c) < 0 ? " - " : " + ");
    first = false;
    if (*mono == '\0' || mag != 1)
      os << to_string(mag);
    if (*mono != '\0' && mag != 1)
      os << "*";
    os << mono;
  };
  term(p.c0, "");
  term(p.c1, "u");
  term(p.c2, "u^2");
  if (first)
    os << "0";
  return os.str();
}

std::string to_string(const PhaseShiftOp& op)
{
  std::ostringstream os;
  os << "f(u) -> ";
  if (!op.phase().is_zero())
    os << "exp(i*(" << to_string(op.phase()) << ")) * ";
  os << "f(u";
  if (sgn(op.shift()) > 0)
    os << " - " << to_string(op.shift());
  else if (sgn(op.shift()) < 0)
    os << " + " << to_string(Scalar(-op.shift()));
  os << ")";
  return os.str();
}

PhaseShiftOp op_compose(const PhaseShiftOp& lhs, const PhaseShiftOp& rhs)
{
  return {lhs.shift() + rhs.shift(), lhs.phase() + rhs.phase().shifted(lhs.shift())};
}

PhaseShiftOp op_inverse(const PhaseShiftOp& op)
{
  // (-a, -p(u + a))
  return {-op.shift(), -op.phase().shifted(-op.shift())};
}

Scalar op_discrepancy(const PhaseShiftOp& a, const PhaseShiftOp& b)
{
  Scalar worst = abs(a.shift() - b.shift());
  for (const Scalar& d : {Scalar(a.phase().c0 - b.phase().c0), Scalar(a.phase().c1 - b.phase().c1),
                          Scalar(a.phase().c2 - b.phase().c2)})
    worst = std::max(worst, Scalar(abs(d)));
  return worst;
}

// ---------------------------------------------------------------------------
// RepCase

RepCase RepCase::generic(const Scalar& alpha, const Scalar& lambda)
{
  if (sgn(lambda) == 0)
    throw Error(ErrorKind::InvalidArgument, "generic representation needs lambda != 0");
  return {Kind::Generic, alpha, lambda, 0};
}

RepCase RepCase::non_generic(const Scalar& nu)
{
  return {Kind::NonGeneric, 0, 0, nu};
}

RepCase RepCase::trivial()
{
  return {Kind::Trivial, 0, 0, 0};
}

RepCase RepCase::for_orbit(const OrbitId& o)
{
  if (auto g = std::get_if<GenericOrbit>(&o))
    return generic(g->alpha, g->lambda);
  if (auto n = std::get_if<NonGenericOrbit>(&o))
    return non_generic(n->nu);
  return trivial();
}

Covector RepCase::representative() const
{
  switch (kind_) {
  case Kind::Generic:
    return {alpha_, 0, 0, lambda_};
  case Kind::NonGeneric:
    return {0, 0, nu_, 0};
  case Kind::Trivial:
    break;
  }
  return {0, 0, 0, 0};
}

std::string RepCase::name() const
{
  switch (kind_) {
  case Kind::Generic:
    return "generic(alpha=" + to_string(alpha_) + ", lambda=" + to_string(lambda_) + ")";
  case Kind::NonGeneric:
    return "nongeneric(nu=" + to_string(nu_) + ")";
  case Kind::Trivial:
    break;
  }
  return "trivial";
}

std::string RepCase::symbol(const char* letter) const
{
  switch (kind_) {
  case Kind::Generic:
    return std::string(letter) + "_{" + to_string(alpha_) + "," + to_string(lambda_) + "}";
  case Kind::NonGeneric:
    return std::string(letter) + "_" + to_string(nu_);
  case Kind::Trivial:
    break;
  }
  return std::string(letter) + "_0";
}

// ---------------------------------------------------------------------------
// rho, omega

PhaseShiftOp rho_generator(const RepCase& c, Generator g, const Scalar& v)
{
  if (g == Generator::X && c.kind() != RepCase::Kind::Trivial)
    return PhaseShiftOp::translation(v);

  switch (c.kind()) {
  case RepCase::Kind::Generic: {
    const Scalar& a = c.alpha();
    const Scalar& l = c.lambda();
    switch (g) {
    case Generator::S: // exp(i s (alpha - lambda u^2/2))
      return PhaseShiftOp::multiplication({a * v, 0, -l * v / 2});
    case Generator::Y: // exp(-i lambda u y)
      return PhaseShiftOp::multiplication({0, -l * v, 0});
    case Generator::T: // exp(i lambda t)
      return PhaseShiftOp::multiplication({l * v, 0, 0});
    case Generator::X:
      break;
    }
    break;
  }
  case RepCase::Kind::NonGeneric: {
    const Scalar& n = c.nu();
    switch (g) {
    case Generator::S: // exp(i nu s u)
      return PhaseShiftOp::multiplication({0, n * v, 0});
    case Generator::Y: // exp(i nu y)
      return PhaseShiftOp::multiplication({n * v, 0, 0});
    case Generator::T:
    case Generator::X:
      break;
    }
    break;
  }
  case RepCase::Kind::Trivial:
    break;
  }
  return PhaseShiftOp::identity();
}

PhaseShiftOp rho(const RepCase& c, const NPoint& n)
{
  switch (c.kind()) {
  case RepCase::Kind::Generic: {
    const Scalar& a = c.alpha();
    const Scalar& l = c.lambda();
    QuadPhase p{a * n.s + l * n.t + l * n.x * n.y / 2 - l * n.s * n.x * n.x / 2, l * n.s * n.x - l * n.y,
                -l * n.s / 2};
    return {n.x, p};
  }
  case RepCase::Kind::NonGeneric: {
    const Scalar& v = c.nu();
    return {n.x, QuadPhase{v * (n.y - n.s * n.x), v * n.s, 0}};
  }
  case RepCase::Kind::Trivial:
    break;
  }
  return PhaseShiftOp::identity();
}

PhaseShiftOp rho_via_generators(const RepCase& c, const NPoint& n)
{
  PhaseShiftOp out = rho_generator(c, Generator::X, n.x);
  out = op_compose(out, rho_generator(c, Generator::S, n.s));
  out = op_compose(out, rho_generator(c, Generator::Y, n.y));
  out = op_compose(out, rho_generator(c, Generator::T, n.t - n.x * n.y / 2));
  return out;
}

PhaseShiftOp omega(const RepCase& c, const KParams& k)
{
  switch (c.kind()) {
  case RepCase::Kind::Generic:
    return PhaseShiftOp::multiplication({0, c.lambda() * k.k2, -c.lambda() * k.k1 / 2});
  case RepCase::Kind::NonGeneric:
    return PhaseShiftOp::multiplication({0, c.nu() * k.k1, 0});
  case RepCase::Kind::Trivial:
    break;
  }
  return PhaseShiftOp::identity();
}

PhaseShiftOp rho_twisted(const RepCase& c, const KParams& k, const NPoint& n)
{
  return rho(c, apply_aut(k_element(k), n));
}

IntertwineResult intertwine_defect(const RepCase& c, const KParams& k, const NPoint& n)
{
  IntertwineResult r;
  PhaseShiftOp w = omega(c, k);
  r.lhs = op_compose(rho_twisted(c, k, n), w);
  r.rhs = op_compose(w, rho(c, n));
  r.equal = r.lhs == r.rhs;
  r.max_discrepancy = op_discrepancy(r.lhs, r.rhs);
  return r;
}

// ---------------------------------------------------------------------------
// Grid layer

GridSpec::GridSpec(std::size_t n, double half_width) : n_(n), half_width_d_(half_width)
{
  if (n < 2 || (n & (n - 1)) != 0)
    throw Error(ErrorKind::InvalidArgument, "grid size must be a power of two, got " + std::to_string(n));
  if (!(half_width > 0) || !std::isfinite(half_width))
    throw Error(ErrorKind::InvalidArgument, "grid half-width must be positive");
  half_width_ = Scalar(half_width); // exact binary value of the double
  step_ = 2 * half_width_ / Scalar(static_cast<unsigned long>(n));
  step_.canonicalize();
}

double GridSpec::point(std::size_t j) const
{
  return -half_width_d_ + static_cast<double>(j) * to_double(step_);
}

std::optional<long> GridSpec::lattice_offset(const Scalar& a) const
{
  Scalar q = a / step_;
  if (q.get_den() != 1)
    return std::nullopt;
  return q.get_num().get_si();
}

GridFunction::GridFunction(GridSpec spec, std::vector<std::complex<double>> values)
    : spec_(std::move(spec)), values_(std::move(values))
{
  if (values_.size() != spec_.size())
    throw Error(ErrorKind::InvalidArgument, "grid function has wrong number of samples");
}

GridFunction GridFunction::gaussian(const GridSpec& spec, double center, double width)
{
  std::vector<std::complex<double>> v(spec.size());
  for (std::size_t j = 0; j < v.size(); ++j) {
    double z = (spec.point(j) - center) / width;
    v[j] = std::exp(-0.5 * z * z);
  }
  return {spec, std::move(v)};
}

GridFunction GridFunction::random(const GridSpec& spec, std::uint64_t seed)
{
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::vector<std::complex<double>> v(spec.size());
  for (auto& z : v)
    z = {normal(rng), normal(rng)};
  return {spec, std::move(v)};
}

std::complex<double> GridFunction::inner(const GridFunction& g) const
{
  std::complex<double> acc = 0;
  for (std::size_t j = 0; j < values_.size(); ++j)
    acc += values_[j] * std::conj(g.values_[j]);
  return to_double(spec_.step()) * acc;
}

double GridFunction::norm() const
{
  return std::sqrt(inner(*this).real());
}

namespace {

std::vector<std::complex<double>> spectral_shift(const std::vector<std::complex<double>>& f, double shift,
                                                 double period)
{
  const int n = static_cast<int>(f.size());
  std::vector<std::complex<double>> buf(f);
  auto* data = reinterpret_cast<fftw_complex*>(buf.data());
  fftw_plan fwd = fftw_plan_dft_1d(n, data, data, FFTW_FORWARD, FFTW_ESTIMATE);
  fftw_plan bwd = fftw_plan_dft_1d(n, data, data, FFTW_BACKWARD, FFTW_ESTIMATE);
  fftw_execute(fwd);
  for (int k = 0; k < n; ++k) {
    int freq = k <= n / 2 ? k : k - n;
    double w = 2 * std::numbers::pi * freq / period;
    buf[static_cast<std::size_t>(k)] *= std::polar(1.0, -w * shift) / static_cast<double>(n);
  }
  fftw_execute(bwd);
  fftw_destroy_plan(fwd);
  fftw_destroy_plan(bwd);
  return buf;
}

} // namespace

GridFunction apply_to_grid(const PhaseShiftOp& op, const GridFunction& f, ShiftMode mode)
{
  const GridSpec& spec = f.spec();
  const std::size_t n = spec.size();
  std::vector<std::complex<double>> shifted(n);
  if (auto offset = spec.lattice_offset(op.shift())) {
    const long m = static_cast<long>(n);
    for (std::size_t j = 0; j < n; ++j) {
      long src = ((static_cast<long>(j) - *offset) % m + m) % m;
      shifted[j] = f.values()[static_cast<std::size_t>(src)];
    }
  } else if (mode == ShiftMode::Spectral) {
    shifted = spectral_shift(f.values(), to_double(op.shift()), 2 * spec.half_width());
  } else {
    throw Error(ErrorKind::Domain, "shift " + to_string(op.shift()) + " is not a multiple of the grid step " +
                                       to_string(spec.step()));
  }
  for (std::size_t j = 0; j < n; ++j)
    shifted[j] *= std::polar(1.0, op.phase()(spec.point(j)));
  return {spec, std::move(shifted)};
}

double unitarity_defect(const PhaseShiftOp& op, const GridSpec& spec, int trials, std::uint64_t seed)
{
  double worst = 0;
  for (int i = 0; i < trials; ++i) {
    auto f = GridFunction::random(spec, seed + 2 * static_cast<std::uint64_t>(i));
    auto g = GridFunction::random(spec, seed + 2 * static_cast<std::uint64_t>(i) + 1);
    auto af = apply_to_grid(op, f);
    auto ag = apply_to_grid(op, g);
    double d = std::abs(af.inner(ag) - f.inner(g)) / (f.norm() * g.norm());
    worst = std::max(worst, d);
  }
  return worst;
}

double norm_defect(const PhaseShiftOp& op, const GridSpec& spec, int trials, std::uint64_t seed)
{
  double worst = 0;
  for (int i = 0; i < trials; ++i) {
    auto f = GridFunction::random(spec, seed + static_cast<std::uint64_t>(i));
    double nf = f.norm();
    worst = std::max(worst, std::abs(apply_to_grid(op, f).norm() - nf) / nf);
  }
  return worst;
}

} // namespace nilrep
