#include "nilrep/nilrep.h"

#include "nilrep/queries.hpp"
#include "nilrep/report.hpp"

#include <array>
#include <memory>
#include <string>
#include <vector>

struct nilrep_case {
  nilrep::RepCase rep;
};

struct nilrep_op {
  nilrep::PhaseShiftOp op;
  std::array<std::string, 4> coefficients;
  std::string formula;

  explicit nilrep_op(nilrep::PhaseShiftOp o)
      : op(std::move(o)),
        coefficients{nilrep::to_string(op.shift()), nilrep::to_string(op.phase().c0),
                     nilrep::to_string(op.phase().c1), nilrep::to_string(op.phase().c2)},
        formula(nilrep::to_string(op))
  {
  }
};

struct nilrep_report {
  std::string text;
  std::string json;
  bool passed;
};

namespace {

thread_local std::string last_error;

nilrep_status fail(nilrep_status status, std::string message)
{
  last_error = std::move(message);
  return status;
}

template <class F>
nilrep_status guarded(F&& body)
{
  try {
    last_error.clear();
    body();
    return NILREP_OK;
  } catch (const nilrep::Error& e) {
    switch (e.kind()) {
    case nilrep::ErrorKind::Parse:
      return fail(NILREP_ERR_PARSE, e.what());
    case nilrep::ErrorKind::InvalidArgument:
      return fail(NILREP_ERR_INVALID_ARGUMENT, e.what());
    case nilrep::ErrorKind::Domain:
      return fail(NILREP_ERR_DOMAIN, e.what());
    }
    return fail(NILREP_ERR_INTERNAL, e.what());
  } catch (const std::exception& e) {
    return fail(NILREP_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(NILREP_ERR_INTERNAL, "unknown exception");
  }
}

nilrep::Scalar scalar_or_zero(const char* text)
{
  return text ? nilrep::parse_scalar(text) : nilrep::Scalar(0);
}

nilrep::Scalar required_scalar(const char* text, const char* what)
{
  if (!text)
    throw nilrep::Error(nilrep::ErrorKind::InvalidArgument, std::string("missing value for ") + what);
  return nilrep::parse_scalar(text);
}

nilrep_report* make_report(const nilrep::Document& doc)
{
  return new nilrep_report{doc.text, doc.json.dump(2) + "\n", doc.ok};
}

} // namespace

#define NILREP_REQUIRE(ptr)                                                                                  \
  do {                                                                                                       \
    if (!(ptr))                                                                                              \
      return fail(NILREP_ERR_NULL_ARGUMENT, "null argument: " #ptr);                                         \
  } while (0)

extern "C" {

const char* nilrep_version(void)
{
  return "1.0.0";
}

const char* nilrep_status_string(nilrep_status status)
{
  switch (status) {
  case NILREP_OK:
    return "ok";
  case NILREP_ERR_NULL_ARGUMENT:
    return "null argument";
  case NILREP_ERR_PARSE:
    return "parse error";
  case NILREP_ERR_INVALID_ARGUMENT:
    return "invalid argument";
  case NILREP_ERR_DOMAIN:
    return "domain error";
  case NILREP_ERR_INTERNAL:
    return "internal error";
  }
  return "unknown status";
}

const char* nilrep_last_error(void)
{
  return last_error.c_str();
}

nilrep_status nilrep_case_create(nilrep_case_kind kind, const char* p1, const char* p2, nilrep_case** out)
{
  NILREP_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    switch (kind) {
    case NILREP_CASE_GENERIC:
      *out = new nilrep_case{nilrep::RepCase::generic(required_scalar(p1, "alpha"), required_scalar(p2, "lambda"))};
      return;
    case NILREP_CASE_NONGENERIC:
      *out = new nilrep_case{nilrep::RepCase::non_generic(required_scalar(p1, "nu"))};
      return;
    case NILREP_CASE_TRIVIAL:
      *out = new nilrep_case{nilrep::RepCase::trivial()};
      return;
    }
    throw nilrep::Error(nilrep::ErrorKind::InvalidArgument, "unknown case kind");
  });
}

void nilrep_case_free(nilrep_case* c)
{
  delete c;
}

nilrep_status nilrep_op_rho(const nilrep_case* c, const char* const point[4], nilrep_op** out)
{
  NILREP_REQUIRE(c);
  NILREP_REQUIRE(point);
  NILREP_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    nilrep::NPoint n{scalar_or_zero(point[0]), scalar_or_zero(point[1]), scalar_or_zero(point[2]),
                     scalar_or_zero(point[3])};
    *out = new nilrep_op(nilrep::rho(c->rep, n));
  });
}

nilrep_status nilrep_op_omega(const nilrep_case* c, const char* k1, const char* k2, nilrep_op** out)
{
  NILREP_REQUIRE(c);
  NILREP_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = new nilrep_op(nilrep::omega(c->rep, {scalar_or_zero(k1), scalar_or_zero(k2)})); });
}

nilrep_status nilrep_op_compose(const nilrep_op* lhs, const nilrep_op* rhs, nilrep_op** out)
{
  NILREP_REQUIRE(lhs);
  NILREP_REQUIRE(rhs);
  NILREP_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = new nilrep_op(nilrep::op_compose(lhs->op, rhs->op)); });
}

nilrep_status nilrep_op_inverse(const nilrep_op* op, nilrep_op** out)
{
  NILREP_REQUIRE(op);
  NILREP_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = new nilrep_op(nilrep::op_inverse(op->op)); });
}

nilrep_status nilrep_op_equal(const nilrep_op* a, const nilrep_op* b, int* out)
{
  NILREP_REQUIRE(a);
  NILREP_REQUIRE(b);
  NILREP_REQUIRE(out);
  *out = a->op == b->op ? 1 : 0;
  return NILREP_OK;
}

const char* nilrep_op_coefficient(const nilrep_op* op, int index)
{
  if (!op || index < 0 || index > 3)
    return nullptr;
  return op->coefficients[static_cast<std::size_t>(index)].c_str();
}

const char* nilrep_op_formula(const nilrep_op* op)
{
  return op ? op->formula.c_str() : nullptr;
}

nilrep_status nilrep_op_unitarity_defect(const nilrep_op* op, size_t grid_n, double half_width, int trials,
                                         uint64_t seed, double* out)
{
  NILREP_REQUIRE(op);
  NILREP_REQUIRE(out);
  return guarded([&] {
    if (trials <= 0)
      throw nilrep::Error(nilrep::ErrorKind::InvalidArgument, "trials must be positive");
    *out = nilrep::unitarity_defect(op->op, nilrep::GridSpec(grid_n, half_width), trials, seed);
  });
}

void nilrep_op_free(nilrep_op* op)
{
  delete op;
}

void nilrep_verify_options_init(nilrep_verify_options* o)
{
  if (!o)
    return;
  const auto d = nilrep::VerifyConfig::defaults();
  *o = nilrep_verify_options{};
  o->seed = d.seed;
  o->case_selector = "all";
  o->grid_n = d.grid_n;
  o->grid_half_width = d.grid_half_width;
  o->grid_tolerance = d.grid_tolerance;
  o->fault = "none";
}

nilrep_status nilrep_verify(const nilrep_verify_options* o, nilrep_report** out)
{
  NILREP_REQUIRE(o);
  NILREP_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    auto cfg = nilrep::VerifyConfig::defaults();
    cfg.seed = o->seed;
    if (o->case_selector)
      cfg.cases = nilrep::parse_case_selector(o->case_selector);
    if (o->alpha || o->lambda)
      cfg.generic_params = {{scalar_or_zero(o->alpha), required_scalar(o->lambda, "lambda")}};
    if (o->nu)
      cfg.nongeneric_params = {nilrep::parse_scalar(o->nu)};
    if (o->group_trials)
      cfg.group_trials = o->group_trials;
    if (o->rep_trials)
      cfg.rep_trials = o->rep_trials;
    if (o->pair_trials)
      cfg.pair_trials = o->pair_trials;
    if (o->grid_functions)
      cfg.grid_functions = o->grid_functions;
    if (o->grid_n)
      cfg.grid_n = o->grid_n;
    if (o->grid_half_width != 0)
      cfg.grid_half_width = o->grid_half_width;
    if (o->grid_tolerance != 0)
      cfg.grid_tolerance = o->grid_tolerance;
    if (o->fault)
      cfg.fault = nilrep::parse_fault(o->fault);
    *out = make_report(nilrep::describe_verification(nilrep::verify_theorem(cfg)));
  });
}

size_t nilrep_fault_count(void)
{
  return nilrep::all_faults().size();
}

const char* nilrep_fault_name(size_t index)
{
  static const auto names = [] {
    std::vector<std::string> v;
    for (auto f : nilrep::all_faults())
      v.push_back(nilrep::to_string(f));
    return v;
  }();
  return index < names.size() ? names[index].c_str() : nullptr;
}

nilrep_status nilrep_orbit(const char* alpha, const char* mu, const char* nu, const char* lambda, nilrep_report** out)
{
  NILREP_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    nilrep::Covector c{scalar_or_zero(alpha), scalar_or_zero(mu), scalar_or_zero(nu), scalar_or_zero(lambda)};
    *out = make_report(nilrep::describe_orbit(c));
  });
}

void nilrep_rep_options_init(nilrep_rep_options* o)
{
  if (!o)
    return;
  *o = nilrep_rep_options{};
  o->grid_n = 1024;
  o->grid_half_width = 16;
}

nilrep_status nilrep_rep(const nilrep_case* c, const nilrep_rep_options* o, nilrep_report** out)
{
  NILREP_REQUIRE(c);
  NILREP_REQUIRE(o);
  NILREP_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    nilrep::RepQuery q;
    q.rep = c->rep;
    q.n = {scalar_or_zero(o->point[0]), scalar_or_zero(o->point[1]), scalar_or_zero(o->point[2]),
           scalar_or_zero(o->point[3])};
    q.k = {scalar_or_zero(o->k1), scalar_or_zero(o->k2)};
    q.grid_demo = o->grid_demo != 0;
    q.grid_n = o->grid_n;
    q.grid_half_width = o->grid_half_width;
    *out = make_report(nilrep::describe_rep(q));
  });
}

nilrep_status nilrep_decompose(const nilrep_case* c, size_t sample_size, nilrep_report** out)
{
  NILREP_REQUIRE(c);
  NILREP_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = make_report(nilrep::describe_decomposition(c->rep, sample_size)); });
}

int nilrep_report_passed(const nilrep_report* r)
{
  return r && r->passed ? 1 : 0;
}

const char* nilrep_report_text(const nilrep_report* r)
{
  return r ? r->text.c_str() : nullptr;
}

const char* nilrep_report_json(const nilrep_report* r)
{
  return r ? r->json.c_str() : nullptr;
}

void nilrep_report_free(nilrep_report* r)
{
  delete r;
}

} // extern "C"
