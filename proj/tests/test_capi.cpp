#include "nilrep/nilrep.h"

#include <doctest.h>

#include <string>

namespace {

struct Case {
  nilrep_case* p = nullptr;
  ~Case() { nilrep_case_free(p); }
};
struct Op {
  nilrep_op* p = nullptr;
  ~Op() { nilrep_op_free(p); }
};
struct Report {
  nilrep_report* p = nullptr;
  ~Report() { nilrep_report_free(p); }
};

nilrep_verify_options quick_options()
{
  nilrep_verify_options o;
  nilrep_verify_options_init(&o);
  o.group_trials = 40;
  o.rep_trials = 40;
  o.pair_trials = 40;
  o.grid_functions = 2;
  o.grid_n = 256;
  return o;
}

} // namespace

TEST_CASE("status strings and version")
{
  CHECK(std::string(nilrep_version()).size() > 0);
  CHECK(std::string(nilrep_status_string(NILREP_OK)) == "ok");
  CHECK(std::string(nilrep_status_string(NILREP_ERR_DOMAIN)) == "domain error");
}

TEST_CASE("case creation errors")
{
  Case c;
  CHECK(nilrep_case_create(NILREP_CASE_GENERIC, "1", "0", &c.p) == NILREP_ERR_INVALID_ARGUMENT);
  CHECK(c.p == nullptr);
  CHECK(std::string(nilrep_last_error()).find("lambda") != std::string::npos);
  CHECK(nilrep_case_create(NILREP_CASE_GENERIC, "1", "x", &c.p) == NILREP_ERR_PARSE);
  CHECK(nilrep_case_create(NILREP_CASE_GENERIC, "1", nullptr, &c.p) == NILREP_ERR_INVALID_ARGUMENT);
  CHECK(nilrep_case_create(NILREP_CASE_GENERIC, "1", "1", nullptr) == NILREP_ERR_NULL_ARGUMENT);
  CHECK(nilrep_case_create(NILREP_CASE_TRIVIAL, nullptr, nullptr, &c.p) == NILREP_OK);
}

TEST_CASE("operators through the C API")
{
  Case c;
  REQUIRE(nilrep_case_create(NILREP_CASE_GENERIC, "1", "2", &c.p) == NILREP_OK);
  const char* n[4] = {"1", "2", "3", "4"};
  Op r;
  REQUIRE(nilrep_op_rho(c.p, n, &r.p) == NILREP_OK);
  CHECK(std::string(nilrep_op_coefficient(r.p, 0)) == "2");
  CHECK(std::string(nilrep_op_coefficient(r.p, 1)) == "11");
  CHECK(std::string(nilrep_op_coefficient(r.p, 2)) == "-2");
  CHECK(std::string(nilrep_op_coefficient(r.p, 3)) == "-1");
  CHECK(nilrep_op_coefficient(r.p, 4) == nullptr);
  CHECK(std::string(nilrep_op_formula(r.p)).find("f(u - 2)") != std::string::npos);

  // rho(n) rho(n)^-1 = rho(e)
  Op inv, prod, id;
  REQUIRE(nilrep_op_inverse(r.p, &inv.p) == NILREP_OK);
  REQUIRE(nilrep_op_compose(r.p, inv.p, &prod.p) == NILREP_OK);
  const char* e[4] = {"0", "0", "0", "0"};
  REQUIRE(nilrep_op_rho(c.p, e, &id.p) == NILREP_OK);
  int equal = 0;
  REQUIRE(nilrep_op_equal(prod.p, id.p, &equal) == NILREP_OK);
  CHECK(equal == 1);

  // omega(k) omega(k') = omega(k + k')
  Op w1, w2, w12, w3;
  REQUIRE(nilrep_op_omega(c.p, "1", "2", &w1.p) == NILREP_OK);
  REQUIRE(nilrep_op_omega(c.p, "1/2", "-5", &w2.p) == NILREP_OK);
  REQUIRE(nilrep_op_omega(c.p, "3/2", "-3", &w3.p) == NILREP_OK);
  REQUIRE(nilrep_op_compose(w1.p, w2.p, &w12.p) == NILREP_OK);
  REQUIRE(nilrep_op_equal(w12.p, w3.p, &equal) == NILREP_OK);
  CHECK(equal == 1);

  double defect = 1;
  REQUIRE(nilrep_op_unitarity_defect(r.p, 1024, 16, 10, 3, &defect) == NILREP_OK);
  CHECK(defect <= 1e-12);
  CHECK(nilrep_op_unitarity_defect(r.p, 1000, 16, 10, 3, &defect) == NILREP_ERR_INVALID_ARGUMENT);
  CHECK(nilrep_op_unitarity_defect(r.p, 1024, 16, 0, 3, &defect) == NILREP_ERR_INVALID_ARGUMENT);
}

TEST_CASE("verify through the C API")
{
  auto o = quick_options();
  Report a, b;
  REQUIRE(nilrep_verify(&o, &a.p) == NILREP_OK);
  CHECK(nilrep_report_passed(a.p) == 1);
  REQUIRE(nilrep_verify(&o, &b.p) == NILREP_OK);
  CHECK(std::string(nilrep_report_json(a.p)) == std::string(nilrep_report_json(b.p)));
  CHECK(std::string(nilrep_report_text(a.p)).find("verdict: PASSED") != std::string::npos);

  REQUIRE(nilrep_fault_count() == 5);
  for (size_t i = 0; i < nilrep_fault_count(); ++i) {
    CAPTURE(nilrep_fault_name(i));
    o.fault = nilrep_fault_name(i);
    Report f;
    REQUIRE(nilrep_verify(&o, &f.p) == NILREP_OK);
    CHECK(nilrep_report_passed(f.p) == 0);
    CHECK(std::string(nilrep_report_json(f.p)).find("\"witness\"") != std::string::npos);
  }
  CHECK(nilrep_fault_name(5) == nullptr);

  o.fault = "nonsense";
  Report bad;
  CHECK(nilrep_verify(&o, &bad.p) == NILREP_ERR_PARSE);
  o.fault = "none";
  o.case_selector = "generic";
  o.lambda = "0";
  CHECK(nilrep_verify(&o, &bad.p) == NILREP_ERR_INVALID_ARGUMENT);
  CHECK(nilrep_verify(nullptr, &bad.p) == NILREP_ERR_NULL_ARGUMENT);
}

TEST_CASE("orbit, rep and decompose through the C API")
{
  Report r;
  REQUIRE(nilrep_orbit("3", "7", "2", "1", &r.p) == NILREP_OK);
  CHECK(std::string(nilrep_report_json(r.p)).find("\"alpha\": \"5\"") != std::string::npos);

  Case c;
  REQUIRE(nilrep_case_create(NILREP_CASE_NONGENERIC, "3", nullptr, &c.p) == NILREP_OK);
  nilrep_rep_options ro;
  nilrep_rep_options_init(&ro);
  ro.point[1] = "1/3";
  ro.k1 = "2";
  Report rep;
  REQUIRE(nilrep_rep(c.p, &ro, &rep.p) == NILREP_OK);
  CHECK(nilrep_report_passed(rep.p) == 1);
  ro.grid_demo = 1;
  Report grid;
  CHECK(nilrep_rep(c.p, &ro, &grid.p) == NILREP_ERR_DOMAIN);
  CHECK(std::string(nilrep_last_error()).find("grid step") != std::string::npos);

  Report d;
  REQUIRE(nilrep_decompose(c.p, 101, &d.p) == NILREP_OK);
  CHECK(nilrep_report_passed(d.p) == 1);
  Report empty;
  CHECK(nilrep_decompose(c.p, 0, &empty.p) == NILREP_ERR_INVALID_ARGUMENT);
}
