#pragma once

#include "netredist/dominators.hpp"
#include "netredist/money.hpp"
#include "netredist/network.hpp"

#include <optional>
#include <vector>

namespace netredist {

// Result of an argmax over reported valuations: value 0 with no holder when
// the scanned set is empty.
struct TopBid {
    Money value;                    // 0 if nobody is left
    std::optional<AgentId> holder;  // smallest id among maximal bidders
};

// The market actually generated by a strategy profile: the owner plus every
// agent reached by the invitation closure, with directed invitation edges,
// depths, and the full domination structure. Vertices are indexed 0..V-1 in
// lexicographic id order (owner included), so index order == id order and all
// tie-breaks are plain integer comparisons.
class GeneratedGraph {
public:
    static GeneratedGraph build(const SocialNetwork& net, const StrategyProfile& profile);

    // --- id level -----------------------------------------------------------
    const AgentId& owner() const { return ids_[owner_]; }
    bool has_vertex(const AgentId& id) const { return find_index(id) >= 0; }
    int index_of(const AgentId& id) const;  // MissingAgentError if absent
    const std::vector<AgentId>& vertex_ids() const { return ids_; }

    Money reported_valuation(const AgentId& id) const { return value_[index_of(id)]; }
    int depth(const AgentId& id) const { return depth_[index_of(id)]; }
    std::vector<AgentId> child_neighbours(const AgentId& id) const;

    // --- index level (hot paths) --------------------------------------------
    int vertex_count() const { return static_cast<int>(ids_.size()); }
    int bidder_count() const { return vertex_count() - 1; }
    int owner_index() const { return owner_; }
    const AgentId& id_at(int v) const { return ids_[v]; }
    const Money& value_at(int v) const { return value_[v]; }
    int depth_at(int v) const { return depth_[v]; }
    const std::vector<int>& children_at(int v) const { return children_[v]; }
    const std::vector<std::vector<int>>& arcs() const { return out_; }

    // bidders ordered by (reported valuation desc, id asc); the first entry
    // not masked out is the market's (tie-broken) highest bidder
    const std::vector<int>& rank_order() const { return rank_; }

    const detail::DominatorInfo& dominators() const { return dom_; }
    int idom_at(int v) const { return dom_.idom[v]; }
    int dominated_size_at(int v) const { return dom_.subtree_size[v]; }  // n_v, includes v
    bool dominates(int a, int x) const { return dom_.in_subtree(a, x); }

    // (owner, ..., idom(v), v) — root first
    std::vector<int> dominator_chain(int v) const;

private:
    int find_index(const AgentId& id) const;  // -1 if absent

    std::vector<AgentId> ids_;  // sorted
    int owner_ = -1;
    std::vector<Money> value_;               // owner slot = 0
    std::vector<std::vector<int>> out_;      // invitation arcs, sorted targets
    std::vector<int> depth_;                 // BFS distance from owner
    std::vector<std::vector<int>> children_; // arcs out_[v] filtered to depth+1
    std::vector<int> rank_;
    detail::DominatorInfo dom_;
};

// --- named operations --------------------------------------------------------

// Invitation closure of the profile over the true network. Rejects unknown
// ids in profile entries, invitations outside an agent's true neighbour set,
// negative reported valuations, and reachable-but-absent agents.
GeneratedGraph build_generated_graph(const SocialNetwork& net, const StrategyProfile& profile);

// Vertices that only become reachable through `id` — every path from the
// owner to them passes through `id`. Includes `id` itself. Sorted by id.
std::vector<AgentId> dominated_set(const GeneratedGraph& g, const AgentId& id);

// Reference implementation of dominated_set by deletion + reachability scan;
// quadratic, kept as the behavioural oracle for tests.
std::vector<AgentId> oracle_dominated_set(const GeneratedGraph& g, const AgentId& id);

// Proper dominators of `id` in depth order, owner excluded: empty when `id`
// is directly connected to the owner or has multiple disjoint routes.
std::vector<AgentId> ancestor_sequence(const GeneratedGraph& g, const AgentId& id);

// child_neighbours(prev) minus {next}; precondition next in child_neighbours(prev).
std::vector<AgentId> sibling_block(const GeneratedGraph& g, const AgentId& prev, const AgentId& next);

// Highest reported valuation among bidders outside `excluded` (ids are looked
// up and must exist); value 0 / no holder when every bidder is excluded.
TopBid top_bid_excluding(const GeneratedGraph& g, const std::vector<AgentId>& excluded);

}  // namespace netredist
