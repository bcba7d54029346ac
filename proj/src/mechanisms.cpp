#include "netredist/mechanisms.hpp"

#include "netredist/errors.hpp"

#include <algorithm>

namespace netredist {

const char* to_string(Mechanism m) {
    switch (m) {
        case Mechanism::nrm: return "nrm";
        case Mechanism::cavallo: return "cavallo";
        case Mechanism::cavallo_neighbours: return "cavallo-neighbours";
    }
    return "?";
}

std::optional<Mechanism> parse_mechanism(const std::string& name) {
    if (name == "nrm") return Mechanism::nrm;
    if (name == "cavallo") return Mechanism::cavallo;
    if (name == "cavallo-neighbours") return Mechanism::cavallo_neighbours;
    return std::nullopt;
}

Money Outcome::payment_of(const AgentId& id) const {
    auto it = std::lower_bound(payments.begin(), payments.end(), id,
                               [](const auto& p, const AgentId& key) { return p.first < key; });
    if (it == payments.end() || it->first != id) return Money(0);
    return it->second;
}

namespace {

// payments indexed by vertex; assembled into the id-keyed Outcome at the end
struct Ledger {
    explicit Ledger(const GeneratedGraph& g) : amounts(g.vertex_count(), Money(0)) {}
    std::vector<Money> amounts;
};

Outcome materialize(const GeneratedGraph& g, int winner, const Ledger& led) {
    Outcome out;
    if (winner >= 0) {
        out.winner = g.id_at(winner);
        out.social_welfare = g.value_at(winner);
    }
    out.surplus = Money(0);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (v == g.owner_index()) continue;
        out.payments.emplace_back(g.id_at(v), led.amounts[v]);
        out.surplus += led.amounts[v];
    }
    return out;
}

// top reported bid outside a's dominated subtree (the "required payment" at a)
Money required_payment_at(const GeneratedGraph& g, int a) {
    for (int v : g.rank_order())
        if (!g.dominates(a, v)) return g.value_at(v);
    return Money(0);
}

// ---------------------------------------------------------------------------
// counterfactual: remove member's dominated set, replay the walk, and read off
// the surplus this step would still have produced
Money counterfactual_core(const GeneratedGraph& g, int member, int position, int prev,
                          const Money& prev_required) {
    const int V = g.vertex_count();
    std::vector<char> removed(V, 0);
    for (int x = 0; x < V; ++x)
        if (g.dominates(member, x)) removed[x] = 1;

    const detail::DominatorInfo red = detail::compute_dominators(g.arcs(), g.owner_index(), &removed);

    int top_bidder = -1;  // highest surviving bidder, original tie-break order
    for (int v : g.rank_order())
        if (red.reachable(v)) {
            top_bidder = v;
            break;
        }
    if (top_bidder < 0) return Money(0);

    // (owner, ..., top_bidder) through the reduced graph's dominators
    std::vector<int> chain{top_bidder};
    for (int v = top_bidder; v != g.owner_index(); ) {
        v = red.idom[v];
        chain.push_back(v);
    }
    std::reverse(chain.begin(), chain.end());

    // the walk must still be at the same place: prev at position-1, and a
    // position-th ancestor must exist at all
    if (static_cast<int>(chain.size()) <= position) return Money(0);
    if (chain[position - 1] != prev) return Money(0);
    const int alt = chain[position];

    Money top(0);
    for (int v : g.rank_order())
        if (red.reachable(v) && !red.in_subtree(alt, v)) {
            top = g.value_at(v);
            break;
        }
    Money s = top - prev_required;
    return s < 0 ? Money(0) : s;
}

struct StepCore {
    int ancestor = -1;
    Money required;
    Money prev_required;
    std::vector<int> block;        // sorted
    std::vector<long long> sizes;  // parallel
    std::vector<Money> surplus;    // parallel
    std::vector<Money> rebate;     // parallel
    Money step_surplus;
    bool allocated = false;
};

StepCore step_core(const GeneratedGraph& g, int ancestor, int prev, int position,
                   const Money& prev_required) {
    StepCore s;
    s.ancestor = ancestor;
    s.prev_required = prev_required;
    s.required = required_payment_at(g, ancestor);

    // competing block: prev's child neighbours that prev actually dominates.
    // On trees that is every child. On graphs both halves matter: a child
    // reachable around prev (idom above prev) would collect a rebate priced
    // partly by its own bid, and a chain stop that hops past the children
    // (idom without adjacency) would collect one that truthful play never
    // pays — either way a strategic report could buy a share, so neither
    // belongs in the block.
    for (int k : g.children_at(prev))
        if (g.idom_at(k) == prev) s.block.push_back(k);

    long long total = 0;
    for (int k : s.block) {
        s.sizes.push_back(g.dominated_size_at(k));
        total += s.sizes.back();
    }
    Money rebated(0);
    for (size_t i = 0; i < s.block.size(); ++i) {
        Money sk = counterfactual_core(g, s.block[i], position, prev, prev_required);
        Money rk = Money(s.sizes[i]) * sk / total;
        s.surplus.push_back(sk);
        s.rebate.push_back(rk);
        rebated += rk;
    }
    s.step_surplus = (s.required - prev_required) - rebated;
    s.allocated = g.value_at(ancestor) >= s.required;
    return s;
}

StepRecord materialize_step(const GeneratedGraph& g, const StepCore& s) {
    StepRecord rec;
    rec.ancestor = g.id_at(s.ancestor);
    rec.required_payment = s.required;
    rec.prev_required_payment = s.prev_required;
    for (size_t i = 0; i < s.block.size(); ++i) {
        const AgentId& id = g.id_at(s.block[i]);
        rec.block.push_back(id);
        rec.block_sizes[id] = static_cast<int>(s.sizes[i]);
        rec.counterfactual_surplus[id] = s.surplus[i];
        rec.rebates[id] = s.rebate[i];
    }
    rec.step_surplus = s.step_surplus;
    rec.allocated_here = s.allocated;
    return rec;
}

int require_bidders(const GeneratedGraph& g) {
    if (g.bidder_count() == 0) throw EmptyInstanceError("no bidders were generated");
    return g.rank_order().front();
}

}  // namespace

Money efficient_social_welfare(const GeneratedGraph& g) {
    return g.value_at(require_bidders(g));
}

Outcome run_cavallo(const GeneratedGraph& g) {
    const int winner = require_bidders(g);
    const auto& rank = g.rank_order();
    const int n = g.bidder_count();
    const Money best = g.value_at(winner);
    const Money second = n >= 2 ? g.value_at(rank[1]) : Money(0);
    const Money third = n >= 3 ? g.value_at(rank[2]) : Money(0);

    Ledger led(g);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (v == g.owner_index()) continue;
        // externality: best bid once v's whole dominated subtree is gone,
        // against the welfare the others enjoy when v is present
        Money without(0);
        for (int u : rank)
            if (!g.dominates(v, u)) {
                without = g.value_at(u);
                break;
            }
        Money vcg = without - (best - (v == winner ? best : Money(0)));
        Money share = (v == rank[0] || (n >= 2 && v == rank[1])) ? third : second;
        led.amounts[v] = vcg - share / n;
    }
    return materialize(g, winner, led);
}

Outcome run_cavallo_neighbours(const SocialNetwork& net, const StrategyProfile& profile) {
    // star sub-market: owner plus her direct true neighbours, nobody else
    std::map<AgentId, AgentInfo> agents;
    for (const AgentId& nb : net.owner_neighbours()) {
        const std::optional<StrategyEntry>* rec = profile.find(nb);
        Money bid = (rec && *rec) ? (*rec)->reported_valuation : net.agent(nb).valuation;
        agents[nb] = AgentInfo{bid, {net.owner()}};
    }
    SocialNetwork star = SocialNetwork::create(net.owner(), net.owner_neighbours(), std::move(agents));
    return run_cavallo(GeneratedGraph::build(star, StrategyProfile::truthful(star)));
}

Outcome run_cavallo_neighbours(const SocialNetwork& net) {
    return run_cavallo_neighbours(net, StrategyProfile::truthful(net));
}

Money counterfactual_block_surplus(const GeneratedGraph& g, const AgentId& member, int position,
                                   const AgentId& prev_ancestor, const Money& prev_required) {
    if (position < 1) throw StructuralError("walk positions start at 1");
    int k = g.index_of(member);
    int prev = g.index_of(prev_ancestor);
    if (k == g.owner_index()) throw StructuralError("the owner cannot be a block member");
    return counterfactual_core(g, k, position, prev, prev_required);
}

StepRecord nrm_step(const GeneratedGraph& g, const AgentId& ancestor, const AgentId& prev_ancestor,
                    int position, const Money& prev_required) {
    if (position < 1) throw StructuralError("walk positions start at 1");
    int a = g.index_of(ancestor);
    int prev = g.index_of(prev_ancestor);
    if (a == g.owner_index()) throw StructuralError("the owner cannot be a walk ancestor");
    const auto& kids = g.children_at(prev);
    if (!std::binary_search(kids.begin(), kids.end(), a) && g.idom_at(a) != prev)
        throw StructuralError("'" + to_string(ancestor) + "' does not follow '" +
                              to_string(prev_ancestor) + "' on any walk");
    return materialize_step(g, step_core(g, a, prev, position, prev_required));
}

Outcome run_nrm(const GeneratedGraph& g, bool with_trace) {
    const int top = require_bidders(g);
    const std::vector<int> chain = g.dominator_chain(top);  // (owner, ..., top)

    Ledger led(g);
    std::vector<StepRecord> trace;
    int winner = -1;
    Money prev_required(0);
    for (size_t j = 1; j < chain.size(); ++j) {
        StepCore s = step_core(g, chain[j], chain[j - 1], static_cast<int>(j), prev_required);
        for (size_t i = 0; i < s.block.size(); ++i) led.amounts[s.block[i]] -= s.rebate[i];
        if (with_trace) trace.push_back(materialize_step(g, s));
        if (s.allocated) {
            winner = s.ancestor;
            led.amounts[winner] += s.required;
            break;
        }
        prev_required = s.required;
    }
    // the chain always allocates: the highest bidder's own bid is the top bid
    // outside their dominated set or better, so the last position accepts
    Outcome out = materialize(g, winner, led);
    out.trace = std::move(trace);
    return out;
}

}  // namespace netredist
