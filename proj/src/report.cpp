#include "mechopt/report.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace mechopt {

namespace {

std::string render_valuation(const Valuation& v) {
  std::string out = "(";
  for (std::size_t g = 0; g < v.size(); ++g) {
    if (g) out += ", ";
    out += render_rat(v[g]);
  }
  return out + ")";
}

}  // namespace

std::string render_solve_text(const Scenario& s, const MechanismResult& r) {
  std::ostringstream os;
  os << "efficient allocation: " << s.allocations[r.efficient_allocation] << "\n";
  for (const auto& ap : r.per_agent)
    os << s.agents[ap.agent] << ": vcg=" << render_rat(ap.vcg) << " wt=" << render_rat(ap.wt)
       << " opt=" << render_rat(ap.opt_alloc) << "\n";
  os << "revenue: vcg=" << render_rat(r.revenue_vcg) << " wt=" << render_rat(r.revenue_wt)
     << " opt=" << render_rat(r.revenue_opt) << "\n";
  return os.str();
}

nlohmann::json render_solve_json(const Scenario& s, const MechanismResult& r) {
  nlohmann::json j;
  j["efficient_allocation"] = s.allocations[r.efficient_allocation];
  j["agents"] = nlohmann::json::array();
  for (const auto& ap : r.per_agent) {
    nlohmann::json a;
    a["name"] = s.agents[ap.agent];
    a["vcg"] = render_rat(ap.vcg);
    a["wt"] = render_rat(ap.wt);
    a["opt"] = render_rat(ap.opt_alloc);
    a["component"] = ap.component;
    nlohmann::json ha = nlohmann::json::object();
    for (const auto& [alloc, h] : ap.h_alloc) ha[s.allocations[alloc]] = render_rat(h);
    a["h_alloc"] = std::move(ha);
    nlohmann::json hc = nlohmann::json::object();
    for (const auto& [comp, h] : ap.h_comp) hc["C" + std::to_string(comp)] = render_rat(h);
    a["h_comp"] = std::move(hc);
    j["agents"].push_back(std::move(a));
  }
  j["revenue"] = {{"vcg", render_rat(r.revenue_vcg)},
                  {"wt", render_rat(r.revenue_wt)},
                  {"opt", render_rat(r.revenue_opt)}};
  return j;
}

std::string render_compare_text(const Scenario& s, const MechanismResult& r) {
  std::ostringstream os;
  os << "revenue: vcg=" << render_rat(r.revenue_vcg) << " wt=" << render_rat(r.revenue_wt)
     << " opt=" << render_rat(r.revenue_opt) << "\n";
  for (const auto& ap : r.per_agent)
    os << s.agents[ap.agent] << ": opt-wt=" << render_rat(ap.opt_alloc - ap.wt)
       << " wt-vcg=" << render_rat(ap.wt - ap.vcg) << "\n";
  return os.str();
}

nlohmann::json render_compare_json(const Scenario& s, const MechanismResult& r) {
  nlohmann::json j;
  j["revenue"] = {{"vcg", render_rat(r.revenue_vcg)},
                  {"wt", render_rat(r.revenue_wt)},
                  {"opt", render_rat(r.revenue_opt)}};
  j["uplifts"] = nlohmann::json::array();
  for (const auto& ap : r.per_agent)
    j["uplifts"].push_back({{"name", s.agents[ap.agent]},
                            {"opt_minus_wt", render_rat(ap.opt_alloc - ap.wt)},
                            {"wt_minus_vcg", render_rat(ap.wt - ap.vcg)}});
  return j;
}

std::string render_verify_text(const VerifyReport& r) {
  std::ostringstream os;
  for (const auto& v : r.ic_violations)
    os << "IC violation: true type " << render_valuation(v.true_type) << " gains "
       << render_rat(v.gap) << " by reporting " << render_valuation(v.report) << "\n";
  for (const auto& v : r.ir_violations)
    os << "IR violation: type " << render_valuation(v.type) << " has utility -"
       << render_rat(v.deficit) << "\n";
  for (const auto& v : r.dominance_violations) os << "dominance violation: " << v << "\n";
  for (const auto& v : r.equivalence_violations) os << "equivalence violation: " << v << "\n";
  os << (r.pass() ? "verify: PASS\n" : "verify: FAIL\n");
  return os.str();
}

}  // namespace mechopt
