#pragma once

#include "netredist/generated_graph.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace netredist {

enum class Mechanism { nrm, cavallo, cavallo_neighbours };

const char* to_string(Mechanism m);
std::optional<Mechanism> parse_mechanism(const std::string& name);

// One position of the redistribution walk down the highest bidder's
// domination chain. All money fields are exact.
struct StepRecord {
    AgentId ancestor;              // a_j
    Money required_payment;        // top bid outside a_j's dominated set
    Money prev_required_payment;   // same quantity one step earlier (0 at step 1)
    std::vector<AgentId> block;    // competing block X at this step, sorted by id
    std::map<AgentId, int> block_sizes;             // k -> |dominated set of k|
    std::map<AgentId, Money> counterfactual_surplus;// k -> clamped surplus without k's subtree
    std::map<AgentId, Money> rebates;               // k -> share of this step's price increment
    Money step_surplus;            // (required - prev) - sum of rebates; never negative
    bool allocated_here = false;   // ancestor's own bid covered the required payment
};

// Result of one mechanism run. Signed payments: positive = pays the owner,
// negative = is paid. Every bidder of the evaluated graph has an entry.
struct Outcome {
    std::optional<AgentId> winner;
    std::vector<std::pair<AgentId, Money>> payments;  // sorted by id
    Money surplus;                                    // sum of all payments
    Money social_welfare;                             // winner's reported valuation, 0 if no winner
    std::vector<StepRecord> trace;                    // filled by run_nrm when requested

    Money payment_of(const AgentId& id) const;  // 0 for agents without an entry
};

// Highest reported valuation in the generated market; EmptyInstanceError when
// there are no bidders.
Money efficient_social_welfare(const GeneratedGraph& g);

// Classic redistribution baseline lifted onto the generated graph: each agent
// pays their externality (computed with their whole dominated set removed) and
// receives a 1/n share of an order statistic — the third-highest bid for the
// two top-ranked bidders, the second-highest for everyone else. May run a
// deficit on networks.
Outcome run_cavallo(const GeneratedGraph& g);

// No-diffusion baseline: the same auction restricted to the owner's direct
// true neighbours (their reported valuations; invitations are irrelevant).
Outcome run_cavallo_neighbours(const SocialNetwork& net, const StrategyProfile& profile);
Outcome run_cavallo_neighbours(const SocialNetwork& net);  // truthful reports

// Surplus the step-j block would have generated without `member`'s dominated
// set: the market is re-generated with that set removed, the walk is replayed,
// and the value only counts if the new chain still has `prev_ancestor` at
// position j-1 and some ancestor at position j; clamped at 0.
Money counterfactual_block_surplus(const GeneratedGraph& g, const AgentId& member, int position,
                                   const AgentId& prev_ancestor, const Money& prev_required);

// One walk position: required payment, block, counterfactual rebates, and
// whether the ancestor's own bid already covers the required payment.
StepRecord nrm_step(const GeneratedGraph& g, const AgentId& ancestor, const AgentId& prev_ancestor,
                    int position, const Money& prev_required);

// The network redistribution mechanism: walk the highest bidder's domination
// chain from the owner downward, collect each step's price increment, and
// redistribute it within the local competing block in proportion to dominated
// subtree sizes. Allocates at the first chain member whose own bid meets the
// required payment (the highest bidder always does). Surplus is non-negative
// by construction.
Outcome run_nrm(const GeneratedGraph& g, bool with_trace = true);

}  // namespace netredist
