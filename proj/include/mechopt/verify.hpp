#pragma once

#include "mechopt/mechanisms.hpp"

#include <functional>
#include <optional>

namespace mechopt {

// Finite sample of a type space used for brute-force checks. Box pieces are
// discretized on an arithmetic grid from the lower corner; unbounded upper
// ends are truncated at lower + bound (a verification limitation only).
struct SampleSet {
  std::vector<Valuation> samples;
  Rat grid_step;
  Rat bound;
};

struct SampleCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

SampleSet enumerate_types(const TypeSpace& ts, const Rat& grid_step, const Rat& bound,
                          std::size_t cap = 200000);

/// Infimum witnesses from every kernel used in graph construction, plus
/// strict-interior bumps for witnesses that sit on a tie boundary. Injecting
/// these into a SampleSet makes binding constraints testable exactly.
std::vector<Valuation> infimum_witnesses(const TypeSpace& ts, const ExternalityContext& ctx);

// A pricing rule under test: report -> (implemented allocation, payment).
struct PricedReport {
  std::size_t allocation;
  Rat payment;
};
using Pricer = std::function<PricedReport(const Valuation&)>;

/// Allocation-wise pricer from solved shortest paths. `bump` raises the h of
/// one vertex position by an offset (mutation testing).
Pricer make_alloc_pricer(PriceGraph g, ShortestPaths sp, ExternalityContext ctx,
                         std::optional<std::pair<std::size_t, Rat>> bump = {});

Pricer make_comp_pricer(PriceGraph g, ShortestPaths sp, std::vector<Component> comps,
                        ExternalityContext ctx,
                        std::optional<std::pair<std::size_t, Rat>> bump = {});

struct IcViolation {
  Valuation true_type;
  Valuation report;
  Rat gap;  // utility(misreport) - utility(truth) > 0
};

struct IrViolation {
  Valuation type;
  Rat deficit;  // -utility > 0
};

/// Exhaustive pairwise truthfulness check over the sample set.
std::vector<IcViolation> check_ic(const Pricer& pricer, const SampleSet& samples);

/// Nonnegative-utility check at every sample.
std::vector<IrViolation> check_ir(const Pricer& pricer, const SampleSet& samples);

/// vcg <= wt <= opt per agent, exact.
std::vector<std::string> check_dominance(const MechanismResult& result);

enum class InfExpr { welfare, diff };

/// Grid minimum of the expression over samples lying in the piece, filtered
/// to eff == restriction when given (always for diff). +infinity when no
/// sample qualifies. A true upper bound on the closed-form infimum.
ExtRat oracle_infimum(const Piece& p, InfExpr expr, std::optional<std::size_t> restriction,
                      std::size_t beta, const ExternalityContext& ctx,
                      const SampleSet& samples);

struct VerifyReport {
  std::vector<IcViolation> ic_violations;
  std::vector<IrViolation> ir_violations;
  std::vector<std::string> dominance_violations;
  std::vector<std::string> equivalence_violations;

  bool pass() const {
    return ic_violations.empty() && ir_violations.empty() && dominance_violations.empty() &&
           equivalence_violations.empty();
  }
};

/// Full brute-force verification of the optimal pricers (both
/// characterizations) on a scenario, with witness injection. `h_bump`, when
/// nonzero, raises each agent's h at the reported type's allocation vertex —
/// a deliberate mutation that must produce violations.
VerifyReport verify_scenario(const Scenario& s, const Rat& grid_step, const Rat& bound,
                             const Rat& h_bump = Rat(0));

}  // namespace mechopt
