#pragma once

#include "netredist/mechanisms.hpp"

#include <cstdint>
#include <optional>
#include <tuple>
#include <vector>

namespace netredist {

// A single unilateral misreport: what `agent` claims and whom they invite.
struct Deviation {
    AgentId agent;
    Money reported_valuation;
    std::vector<AgentId> invited;  // sorted subset of the agent's true neighbours
};

struct IcViolation {
    Deviation deviation;
    Money truthful_utility;
    Money deviant_utility;  // strictly greater, or it would not be recorded
};

struct IrWitness {
    AgentId agent;
    std::vector<AgentId> invited;
    Money utility;  // negative
};

// Search budget for the deviation spaces. Agents whose degree exceeds
// degree_cap get sample_count seeded random invitation subsets instead of the
// exhaustive power set and are listed as sampled in the result.
struct DeviationSearchOptions {
    int degree_cap = 8;
    int sample_count = 512;
    std::uint64_t sample_seed = 0x5eedULL;
    std::vector<Money> extra_valuations;  // appended to the IC valuation grid
};

struct IrResult {
    bool holds = true;
    std::optional<IrWitness> witness;
    std::vector<AgentId> sampled_agents;
};

struct IcResult {
    std::vector<IcViolation> violations;  // agent id asc, then valuation asc, then subset order
    std::vector<AgentId> sampled_agents;
};

struct EfficiencyRecord {
    Money mechanism_welfare;
    Money neighbour_baseline_welfare;
    Money optimal_welfare;
    bool dominates_baseline = false;  // mechanism_welfare >= neighbour baseline
};

struct BudgetPoint {
    long long n;       // market size bucket
    Money mean_ratio;  // mean of surplus / social welfare over the bucket
    int samples;
};

struct AuditReport {
    Mechanism mechanism;
    bool ir_holds = false;
    std::optional<IrWitness> ir_witness;
    bool non_deficit = false;
    Money surplus;       // truthful-profile surplus
    Money budget_ratio;  // truthful surplus / welfare, 0 when welfare is 0
    std::vector<IcViolation> ic_violations;
    std::vector<AgentId> sampled_agents;
    EfficiencyRecord efficiency;

    bool clean() const { return ir_holds && non_deficit && ic_violations.empty(); }
};

// What the run is worth to the agent: item value if they won, minus payment.
// Agents outside the outcome (not generated) have utility 0.
Money agent_utility(const Outcome& outcome, const AgentId& agent, const Money& true_valuation);

// Builds the market a profile generates and runs the chosen mechanism on it.
Outcome evaluate_mechanism(const SocialNetwork& net, const StrategyProfile& profile, Mechanism m);

// Every agent, truthful valuation, every invitation subset (within the search
// budget): utility must never go negative. Stops at the first witness.
IrResult check_ir(const SocialNetwork& net, Mechanism m, const DeviationSearchOptions& opts = {});

bool check_non_deficit(const Outcome& outcome);

// Unilateral deviations from `base` (truthful when null): reported valuations
// from a grid of {0, every true valuation, midpoints, max+1, extras} crossed
// with invitation subsets; records every strictly profitable deviation.
IcResult audit_ic(const SocialNetwork& net, Mechanism m, const DeviationSearchOptions& opts = {},
                  const StrategyProfile* base = nullptr);

// Truthful welfare of the walk mechanism vs the no-diffusion baseline vs the
// best reachable bid.
EfficiencyRecord efficiency_report(const SocialNetwork& net);

// (n, surplus, social welfare) records -> per-n mean surplus/welfare ratios,
// sorted by n. Needs at least two distinct n buckets.
std::vector<BudgetPoint> measure_budget_balance(
    const std::vector<std::tuple<long long, Money, Money>>& records);

AuditReport run_audit(const SocialNetwork& net, Mechanism m,
                      const DeviationSearchOptions& opts = {});

}  // namespace netredist
