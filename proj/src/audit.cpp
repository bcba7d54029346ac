#include "netredist/audit.hpp"

#include "netredist/errors.hpp"
#include "netredist/rng.hpp"

#include <algorithm>
#include <map>

namespace netredist {

Money agent_utility(const Outcome& outcome, const AgentId& agent, const Money& true_valuation) {
    Money u = -outcome.payment_of(agent);
    if (outcome.winner && *outcome.winner == agent) u += true_valuation;
    return u;
}

Outcome evaluate_mechanism(const SocialNetwork& net, const StrategyProfile& profile, Mechanism m) {
    switch (m) {
        case Mechanism::cavallo_neighbours:
            return run_cavallo_neighbours(net, profile);
        case Mechanism::cavallo:
            return run_cavallo(GeneratedGraph::build(net, profile));
        case Mechanism::nrm:
        default:
            return run_nrm(GeneratedGraph::build(net, profile), /*with_trace=*/false);
    }
}

bool check_non_deficit(const Outcome& outcome) { return outcome.surplus >= 0; }

namespace {

// invitation candidates: the agent's true neighbours minus the owner (owner
// invites are no-ops, enumerating them would only pad the search space)
std::vector<AgentId> invitable(const SocialNetwork& net, const AgentId& agent) {
    std::vector<AgentId> out;
    for (const AgentId& nb : net.agent(agent).neighbours)
        if (nb != net.owner()) out.push_back(nb);
    return out;
}

std::vector<AgentId> subset_of(const std::vector<AgentId>& pool, std::uint64_t mask) {
    std::vector<AgentId> out;
    for (size_t i = 0; i < pool.size(); ++i)
        if (mask & (std::uint64_t(1) << i)) out.push_back(pool[i]);
    return out;
}

// Runs `body(invited)` over the agent's invitation subsets: the full power set
// in ascending mask order when the degree allows it, otherwise sample_count
// seeded draws. Returns false when sampling was used. body returning false
// stops the walk early.
template <typename Body>
bool for_each_subset(const SocialNetwork& net, const AgentId& agent, int agent_index,
                     const DeviationSearchOptions& opts, Body&& body) {
    const std::vector<AgentId> pool = invitable(net, agent);
    const size_t d = pool.size();
    if (static_cast<int>(d) <= opts.degree_cap) {
        const std::uint64_t count = std::uint64_t(1) << d;
        for (std::uint64_t mask = 0; mask < count; ++mask)
            if (!body(subset_of(pool, mask))) break;
        return true;
    }
    Rng rng(mix_seed(opts.sample_seed, static_cast<std::uint64_t>(agent_index), d));
    for (int i = 0; i < opts.sample_count; ++i) {
        std::vector<AgentId> invited;
        for (const AgentId& nb : pool)
            if (rng.next() & 1) invited.push_back(nb);
        if (!body(invited)) break;
    }
    return false;
}

}  // namespace

IrResult check_ir(const SocialNetwork& net, Mechanism m, const DeviationSearchOptions& opts) {
    IrResult res;
    StrategyProfile profile = StrategyProfile::truthful(net);
    int agent_index = 0;
    for (const auto& [id, info] : net.agents()) {
        const StrategyEntry truthful_entry = **profile.find(id);
        bool exhaustive = for_each_subset(net, id, agent_index, opts, [&](std::vector<AgentId> invited) {
            profile.set(id, StrategyEntry{info.valuation, std::move(invited)});
            Outcome oc = evaluate_mechanism(net, profile, m);
            Money u = agent_utility(oc, id, info.valuation);
            if (u < 0) {
                res.holds = false;
                res.witness = IrWitness{id, (**profile.find(id)).invited, u};
                return false;
            }
            return true;
        });
        profile.set(id, truthful_entry);
        if (!exhaustive) res.sampled_agents.push_back(id);
        if (!res.holds) break;
        ++agent_index;
    }
    return res;
}

IcResult audit_ic(const SocialNetwork& net, Mechanism m, const DeviationSearchOptions& opts,
                  const StrategyProfile* base) {
    IcResult res;
    StrategyProfile profile = base ? *base : StrategyProfile::truthful(net);

    // valuation grid: 0, every true valuation, midpoints between consecutive
    // distinct ones, one step past the top, plus caller extras. Mechanism
    // outcomes only change at reported order statistics, so this grid hits
    // every behaviourally distinct report.
    std::vector<Money> grid{Money(0)};
    for (const auto& [id, info] : net.agents()) grid.push_back(info.valuation);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    const size_t distinct = grid.size();
    for (size_t i = 0; i + 1 < distinct; ++i) grid.push_back((grid[i] + grid[i + 1]) / 2);
    grid.push_back(grid[distinct - 1] + 1);
    for (const Money& v : opts.extra_valuations) grid.push_back(v);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    int agent_index = 0;
    for (const auto& [id, info] : net.agents()) {
        const std::optional<StrategyEntry>* base_rec = profile.find(id);
        const std::optional<StrategyEntry> saved = base_rec ? *base_rec : std::nullopt;

        // honest benchmark: this agent truthful, everyone else per the base
        StrategyEntry honest{info.valuation, invitable(net, id)};
        profile.set(id, honest);
        const Money honest_utility = agent_utility(evaluate_mechanism(net, profile, m), id, info.valuation);

        bool exhaustive = true;
        for (const Money& bid : grid) {
            bool cont = for_each_subset(net, id, agent_index, opts, [&](std::vector<AgentId> invited) {
                if (bid == honest.reported_valuation && invited == honest.invited) return true;
                profile.set(id, StrategyEntry{bid, invited});
                Outcome oc = evaluate_mechanism(net, profile, m);
                Money u = agent_utility(oc, id, info.valuation);
                if (u > honest_utility)
                    res.violations.push_back(
                        IcViolation{Deviation{id, bid, std::move(invited)}, honest_utility, u});
                return true;
            });
            exhaustive = exhaustive && cont;
        }
        if (!exhaustive) res.sampled_agents.push_back(id);

        if (saved) profile.set(id, *saved); else profile.set_absent(id);
        ++agent_index;
    }
    return res;
}

EfficiencyRecord efficiency_report(const SocialNetwork& net) {
    StrategyProfile truthful = StrategyProfile::truthful(net);
    GeneratedGraph g = GeneratedGraph::build(net, truthful);
    EfficiencyRecord rec;
    rec.mechanism_welfare = run_nrm(g, /*with_trace=*/false).social_welfare;
    rec.neighbour_baseline_welfare = run_cavallo_neighbours(net, truthful).social_welfare;
    rec.optimal_welfare = efficient_social_welfare(g);
    rec.dominates_baseline = rec.mechanism_welfare >= rec.neighbour_baseline_welfare;
    return rec;
}

std::vector<BudgetPoint> measure_budget_balance(
    const std::vector<std::tuple<long long, Money, Money>>& records) {
    std::map<long long, std::pair<Money, int>> buckets;  // n -> (ratio sum, count)
    for (const auto& [n, surplus, welfare] : records) {
        Money ratio = welfare == 0 ? Money(0) : Money(surplus / welfare);
        auto& [sum, count] = buckets[n];
        sum += ratio;
        ++count;
    }
    if (buckets.size() < 2)
        throw InsufficientDataError("budget-balance trend needs at least two market sizes, got " +
                                    std::to_string(buckets.size()));
    std::vector<BudgetPoint> out;
    for (const auto& [n, agg] : buckets)
        out.push_back(BudgetPoint{n, agg.first / agg.second, agg.second});
    return out;
}

AuditReport run_audit(const SocialNetwork& net, Mechanism m, const DeviationSearchOptions& opts) {
    AuditReport report;
    report.mechanism = m;

    StrategyProfile truthful = StrategyProfile::truthful(net);
    Outcome truthful_outcome = evaluate_mechanism(net, truthful, m);
    report.non_deficit = check_non_deficit(truthful_outcome);
    report.surplus = truthful_outcome.surplus;
    report.budget_ratio = truthful_outcome.social_welfare == 0
                              ? Money(0)
                              : Money(truthful_outcome.surplus / truthful_outcome.social_welfare);

    IrResult ir = check_ir(net, m, opts);
    report.ir_holds = ir.holds;
    report.ir_witness = ir.witness;

    IcResult ic = audit_ic(net, m, opts);
    report.ic_violations = std::move(ic.violations);

    report.sampled_agents = ir.sampled_agents;
    for (const AgentId& id : ic.sampled_agents)
        if (!std::binary_search(report.sampled_agents.begin(), report.sampled_agents.end(), id))
            report.sampled_agents.insert(
                std::upper_bound(report.sampled_agents.begin(), report.sampled_agents.end(), id), id);

    report.efficiency = efficiency_report(net);
    return report;
}

}  // namespace netredist
