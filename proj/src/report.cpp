#include "nilrep/report.hpp"

#include <sstream>

namespace nilrep {

using ojson = nlohmann::ordered_json;

ojson to_json(const VerifyConfig& c)
{
  ojson generic = ojson::array();
  for (const auto& [alpha, lambda] : c.generic_params)
    generic.push_back({{"alpha", to_string(alpha)}, {"lambda", to_string(lambda)}});
  ojson nongeneric = ojson::array();
  for (const auto& nu : c.nongeneric_params)
    nongeneric.push_back(to_string(nu));
  return {{"seed", c.seed},
          {"case", to_string(c.cases)},
          {"generic", generic},
          {"nongeneric", nongeneric},
          {"group_trials", c.group_trials},
          {"rep_trials", c.rep_trials},
          {"pair_trials", c.pair_trials},
          {"perturbations", c.perturbations},
          {"mf_sample", c.mf_sample},
          {"grid_n", c.grid_n},
          {"grid_half_width", c.grid_half_width},
          {"grid_functions", c.grid_functions},
          {"grid_tolerance", c.grid_tolerance},
          {"fault", to_string(c.fault)},
          {"include_structure", c.include_structure}};
}

VerifyConfig config_from_json(const ojson& j)
{
  try {
    VerifyConfig c;
    c.seed = j.at("seed").get<std::uint64_t>();
    c.cases = parse_case_selector(j.at("case").get<std::string>());
    for (const auto& g : j.at("generic"))
      c.generic_params.emplace_back(parse_scalar(g.at("alpha").get<std::string>()),
                                    parse_scalar(g.at("lambda").get<std::string>()));
    for (const auto& nu : j.at("nongeneric"))
      c.nongeneric_params.push_back(parse_scalar(nu.get<std::string>()));
    c.group_trials = j.at("group_trials").get<int>();
    c.rep_trials = j.at("rep_trials").get<int>();
    c.pair_trials = j.at("pair_trials").get<int>();
    c.perturbations = j.at("perturbations").get<int>();
    c.mf_sample = j.at("mf_sample").get<std::size_t>();
    c.grid_n = j.at("grid_n").get<std::size_t>();
    c.grid_half_width = j.at("grid_half_width").get<double>();
    c.grid_functions = j.at("grid_functions").get<int>();
    c.grid_tolerance = j.at("grid_tolerance").get<double>();
    c.fault = parse_fault(j.at("fault").get<std::string>());
    c.include_structure = j.at("include_structure").get<bool>();
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("malformed config JSON: ") + e.what());
  }
}

ojson to_json(const TheoremReport& r)
{
  ojson cases = ojson::array();
  for (const auto& c : r.cases) {
    ojson checks = ojson::array();
    for (const auto& chk : c.checks) {
      ojson item{{"name", chk.name}, {"passed", chk.passed}, {"trials", chk.trials}};
      if (chk.witness) {
        ojson w = ojson::object();
        for (const auto& [k, v] : chk.witness->fields)
          w[k] = v;
        item["witness"] = w;
      }
      checks.push_back(item);
    }
    cases.push_back({{"case", c.name}, {"passed", c.passed()}, {"checks", checks}});
  }
  return {{"version", kReportVersion}, {"config", to_json(r.config)}, {"cases", cases}, {"verdict", r.verdict}};
}

TheoremReport report_from_json(const ojson& j)
{
  try {
    if (j.at("version").get<int>() != kReportVersion)
      throw Error(ErrorKind::Parse, "unsupported report version");
    TheoremReport r;
    r.config = config_from_json(j.at("config"));
    for (const auto& c : j.at("cases")) {
      CaseReport cr;
      cr.name = c.at("case").get<std::string>();
      for (const auto& chk : c.at("checks")) {
        CheckResult res;
        res.name = chk.at("name").get<std::string>();
        res.passed = chk.at("passed").get<bool>();
        res.trials = chk.at("trials").get<std::int64_t>();
        if (chk.contains("witness")) {
          Witness w;
          for (const auto& [k, v] : chk.at("witness").items())
            w.fields.emplace_back(k, v.get<std::string>());
          res.witness = std::move(w);
        }
        cr.checks.push_back(std::move(res));
      }
      r.cases.push_back(std::move(cr));
    }
    r.verdict = j.at("verdict").get<bool>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("malformed report JSON: ") + e.what());
  }
}

ojson to_json(const DecompositionReport& r)
{
  ojson chars = ojson::array();
  for (const auto& [u, ch] : r.characters)
    chars.push_back({{"u", to_string(u)}, {"a", to_string(ch.a)}, {"b", to_string(ch.b)}});
  ojson out{{"case", r.rep.name()},
            {"rule", r.rule},
            {"single_character", r.single_character},
            {"sampled_distinct", r.sampled_distinct},
            {"symbolic_injective", r.symbolic_injective},
            {"multiplicity_free", r.multiplicity_free()},
            {"characters", chars}};
  if (r.witness)
    out["witness"] = {{"u1", to_string(r.witness->first)}, {"u2", to_string(r.witness->second)}};
  return out;
}

std::string render_text(const TheoremReport& r)
{
  std::ostringstream os;
  os << "(K, N) generalized Gelfand pair verification  seed=" << r.config.seed;
  if (r.config.fault != Fault::None)
    os << "  injected fault=" << to_string(r.config.fault);
  os << "\n";
  for (const auto& c : r.cases) {
    os << "\n[" << (c.passed() ? "PASS" : "FAIL") << "] " << c.name << "\n";
    for (const auto& chk : c.checks) {
      os << "  " << (chk.passed ? "ok  " : "FAIL") << "  " << chk.name << "  (" << chk.trials << " trials)\n";
      if (chk.witness)
        for (const auto& [k, v] : chk.witness->fields)
          os << "        " << k << " = " << v << "\n";
    }
  }
  os << "\nverdict: " << (r.verdict ? "PASSED ((K, N) is a generalized Gelfand pair on every sampled case)" : "FAILED")
     << "\n";
  return os.str();
}

} // namespace nilrep
