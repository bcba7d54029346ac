#include "netredist/generated_graph.hpp"

#include "netredist/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace netredist {

int GeneratedGraph::find_index(const AgentId& id) const {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id) return -1;
    return static_cast<int>(it - ids_.begin());
}

int GeneratedGraph::index_of(const AgentId& id) const {
    int v = find_index(id);
    if (v < 0) throw MissingAgentError(to_string(id));
    return v;
}

std::vector<AgentId> GeneratedGraph::child_neighbours(const AgentId& id) const {
    std::vector<AgentId> out;
    for (int c : children_[index_of(id)]) out.push_back(ids_[c]);
    return out;
}

std::vector<int> GeneratedGraph::dominator_chain(int v) const {
    std::vector<int> chain{v};
    while (v != owner_) {
        v = dom_.idom[v];
        chain.push_back(v);
    }
    std::reverse(chain.begin(), chain.end());
    return chain;
}

GeneratedGraph GeneratedGraph::build(const SocialNetwork& net, const StrategyProfile& profile) {
    // profile sanity: every recorded id must exist, every present entry must
    // stay inside the agent's true neighbour set with a non-negative report
    for (const auto& [id, entry] : profile.entries()) {
        if (!net.has_agent(id))
            throw MalformedInputError(InputErrorCode::unknown_id,
                                      "profile entry for undeclared agent '" + to_string(id) + "'");
        if (!entry) continue;
        if (entry->reported_valuation < 0)
            throw MalformedInputError(InputErrorCode::negative_valuation,
                                      "agent '" + to_string(id) + "' reports a negative valuation");
        const auto& true_nb = net.agent(id).neighbours;
        for (size_t i = 0; i < entry->invited.size(); ++i) {
            const AgentId& t = entry->invited[i];
            if (i > 0 && !(entry->invited[i - 1] < t))
                throw MalformedInputError(InputErrorCode::duplicate_edge,
                                          "agent '" + to_string(id) + "' invites '" + to_string(t) +
                                              "' twice");
            if (!std::binary_search(true_nb.begin(), true_nb.end(), t))
                throw MalformedInputError(InputErrorCode::invite_not_neighbour,
                                          "agent '" + to_string(id) + "' invites non-neighbour '" +
                                              to_string(t) + "'");
        }
    }

    // invitation closure from the owner, who always informs all her neighbours
    std::set<AgentId> present;
    std::deque<AgentId> queue;
    for (const AgentId& nb : net.owner_neighbours()) {
        present.insert(nb);
        queue.push_back(nb);
    }
    while (!queue.empty()) {
        AgentId cur = queue.front();
        queue.pop_front();
        const std::optional<StrategyEntry>* rec = profile.find(cur);
        if (!rec || !*rec)
            throw MalformedInputError(InputErrorCode::absent_reachable,
                                      "agent '" + to_string(cur) +
                                          "' is reached by an invitation chain but has no report");
        for (const AgentId& t : (**rec).invited) {
            if (t == net.owner() || present.count(t)) continue;
            present.insert(t);
            queue.push_back(t);
        }
    }

    GeneratedGraph g;
    g.ids_.push_back(net.owner());
    for (const AgentId& id : present) g.ids_.push_back(id);
    std::sort(g.ids_.begin(), g.ids_.end());
    const int V = static_cast<int>(g.ids_.size());

    std::map<AgentId, int> index;
    for (int v = 0; v < V; ++v) index[g.ids_[v]] = v;
    g.owner_ = index.at(net.owner());

    g.value_.assign(V, Money(0));
    g.out_.assign(V, {});
    for (int v = 0; v < V; ++v) {
        if (v == g.owner_) {
            for (const AgentId& t : net.owner_neighbours()) g.out_[v].push_back(index.at(t));
        } else {
            const StrategyEntry& e = **profile.find(g.ids_[v]);
            g.value_[v] = e.reported_valuation;
            for (const AgentId& t : e.invited)
                if (t != net.owner()) g.out_[v].push_back(index.at(t));
        }
        std::sort(g.out_[v].begin(), g.out_[v].end());
    }

    // depths + child-neighbour lists
    g.depth_.assign(V, -1);
    g.depth_[g.owner_] = 0;
    std::deque<int> bfs{g.owner_};
    while (!bfs.empty()) {
        int v = bfs.front();
        bfs.pop_front();
        for (int w : g.out_[v])
            if (g.depth_[w] < 0) {
                g.depth_[w] = g.depth_[v] + 1;
                bfs.push_back(w);
            }
    }
    g.children_.assign(V, {});
    for (int v = 0; v < V; ++v)
        for (int w : g.out_[v])
            if (g.depth_[w] == g.depth_[v] + 1) g.children_[v].push_back(w);

    g.rank_.clear();
    for (int v = 0; v < V; ++v)
        if (v != g.owner_) g.rank_.push_back(v);
    std::stable_sort(g.rank_.begin(), g.rank_.end(), [&](int a, int b) {
        if (g.value_[a] != g.value_[b]) return g.value_[a] > g.value_[b];
        return a < b;  // index order == id order
    });

    g.dom_ = detail::compute_dominators(g.out_, g.owner_);
    return g;
}

GeneratedGraph build_generated_graph(const SocialNetwork& net, const StrategyProfile& profile) {
    return GeneratedGraph::build(net, profile);
}

std::vector<AgentId> dominated_set(const GeneratedGraph& g, const AgentId& id) {
    int v = g.index_of(id);
    if (v == g.owner_index()) throw StructuralError("the owner has no dominated set");
    std::vector<AgentId> out;
    for (int x = 0; x < g.vertex_count(); ++x)
        if (g.dominates(v, x)) out.push_back(g.id_at(x));
    return out;  // index order == id order, already sorted
}

std::vector<AgentId> oracle_dominated_set(const GeneratedGraph& g, const AgentId& id) {
    int v = g.index_of(id);
    if (v == g.owner_index()) throw StructuralError("the owner has no dominated set");
    // delete v, re-run reachability from the owner, collect who disappeared
    std::vector<char> seen(g.vertex_count(), 0);
    std::deque<int> queue{g.owner_index()};
    seen[g.owner_index()] = 1;
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        for (int w : g.arcs()[cur])
            if (w != v && !seen[w]) {
                seen[w] = 1;
                queue.push_back(w);
            }
    }
    std::vector<AgentId> out;
    for (int x = 0; x < g.vertex_count(); ++x)
        if (!seen[x] || x == v) out.push_back(g.id_at(x));
    return out;
}

std::vector<AgentId> ancestor_sequence(const GeneratedGraph& g, const AgentId& id) {
    int v = g.index_of(id);
    std::vector<AgentId> out;
    if (v == g.owner_index()) return out;
    for (int a = g.idom_at(v); a != g.owner_index(); a = g.idom_at(a)) out.push_back(g.id_at(a));
    std::reverse(out.begin(), out.end());  // depth-increasing
    return out;
}

std::vector<AgentId> sibling_block(const GeneratedGraph& g, const AgentId& prev, const AgentId& next) {
    int p = g.index_of(prev);
    int a = g.index_of(next);
    const auto& kids = g.children_at(p);
    if (!std::binary_search(kids.begin(), kids.end(), a))
        throw StructuralError("'" + to_string(next) + "' is not a child neighbour of '" +
                              to_string(prev) + "'");
    std::vector<AgentId> out;
    for (int c : kids)
        if (c != a) out.push_back(g.id_at(c));
    return out;
}

TopBid top_bid_excluding(const GeneratedGraph& g, const std::vector<AgentId>& excluded) {
    std::vector<char> mask(g.vertex_count(), 0);
    for (const AgentId& id : excluded) mask[g.index_of(id)] = 1;
    for (int v : g.rank_order())
        if (!mask[v]) return TopBid{g.value_at(v), g.id_at(v)};
    return TopBid{Money(0), std::nullopt};
}

}  // namespace netredist
