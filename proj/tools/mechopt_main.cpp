#include "mechopt/report.hpp"
#include "mechopt/scenario_io.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iostream>

namespace {

// Exit codes: 0 ok / verification pass, 1 counterexample found,
// 2 input or validation error, 3 internal inconsistency.
constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

std::size_t resolve_agent(const mechopt::Scenario& s, const std::string& agent) {
  for (std::size_t i = 0; i < s.agents.size(); ++i)
    if (s.agents[i] == agent) return i;
  try {
    std::size_t idx = std::stoul(agent);
    if (idx < s.agents.size()) return idx;
  } catch (const std::exception&) {
  }
  throw mechopt::ValidationError({"unknown agent '" + agent + "'"});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Revenue-optimal efficient mechanism solver"};
  app.require_subcommand(1);

  std::string path;
  std::string format = "text";
  std::string agent;
  std::string kind = "allocation";
  std::string grid_step = "1/2";
  std::string bound = "10";
  std::string h_bump;

  auto* solve = app.add_subcommand("solve", "Solve a scenario and print the payment table");
  solve->add_option("scenario", path, "Scenario JSON file")->required();
  solve->add_option("--format", format, "text | json");

  auto* compare = app.add_subcommand("compare", "Revenue comparison and per-agent uplifts");
  compare->add_option("scenario", path, "Scenario JSON file")->required();
  compare->add_option("--format", format, "text | json");

  auto* verify = app.add_subcommand("verify", "Brute-force IC/IR/dominance verification");
  verify->add_option("scenario", path, "Scenario JSON file")->required();
  verify->add_option("--grid-step", grid_step, "Grid step for type enumeration");
  verify->add_option("--bound", bound, "Truncation bound for unbounded box ends");
  verify->add_option("--bump-h", h_bump, "Raise each agent's binding h label by this amount")
      ->group("");  // test hook, hidden from help

  auto* graph = app.add_subcommand("graph", "Export an agent's price graph as DOT");
  graph->add_option("scenario", path, "Scenario JSON file")->required();
  graph->add_option("--agent", agent, "Agent name or index")->required();
  graph->add_option("--kind", kind, "allocation | component")
      ->check(CLI::IsMember({"allocation", "component"}));

  CLI11_PARSE(app, argc, argv);

  try {
    mechopt::Scenario s = mechopt::load_scenario(path);
    mechopt::validate_or_throw(s);

    if (solve->parsed() || compare->parsed()) {
      mechopt::MechanismResult r = mechopt::solve(s);
      if (format == "json") {
        auto j = solve->parsed() ? mechopt::render_solve_json(s, r)
                                 : mechopt::render_compare_json(s, r);
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << (solve->parsed() ? mechopt::render_solve_text(s, r)
                                      : mechopt::render_compare_text(s, r));
      }
      return kExitOk;
    }

    if (verify->parsed()) {
      mechopt::Rat bump = h_bump.empty() ? mechopt::Rat(0) : mechopt::parse_rat(h_bump);
      mechopt::VerifyReport r = mechopt::verify_scenario(
          s, mechopt::parse_rat(grid_step), mechopt::parse_rat(bound), bump);
      std::cout << mechopt::render_verify_text(r);
      return r.pass() ? kExitOk : kExitCounterexample;
    }

    // graph
    std::size_t i = resolve_agent(s, agent);
    mechopt::ExternalityContext ctx = mechopt::externality_ctx(s.reported, i);
    mechopt::PriceGraph g;
    if (kind == "component") {
      auto comps = mechopt::connected_components(s.spaces[i]);
      g = mechopt::build_component_graph(comps, ctx);
    } else {
      g = mechopt::build_allocation_graph(s.spaces[i], ctx, s.allocations);
    }
    mechopt::ShortestPaths sp = mechopt::shortest_paths(g);
    std::cout << mechopt::to_dot(g, sp);
    return kExitOk;
  } catch (const mechopt::ValidationError& e) {
    for (const auto& v : e.violations) std::cerr << "violation: " << v << "\n";
    return kExitInput;
  } catch (const mechopt::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const mechopt::MembershipError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const mechopt::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
}
