#pragma once

// Independent re-implementation of the walk mechanism for tree-shaped markets
// only. Deliberately avoids the library's dominator machinery: parents come
// from BFS depths, subtrees from parent links, counterfactuals from plain
// set filtering. Used to cross-check run_nrm on trees.

#include "netredist/generated_graph.hpp"
#include "netredist/mechanisms.hpp"

#include <algorithm>
#include <vector>

namespace netredist::testing {

struct TreeFacts {
    const GeneratedGraph& g;
    std::vector<int> parent;              // owner's parent = -1
    std::vector<std::vector<int>> kids;   // undirected-tree children
    std::vector<std::vector<char>> in_subtree;  // in_subtree[a][x]

    explicit TreeFacts(const GeneratedGraph& graph) : g(graph) {
        const int V = g.vertex_count();
        parent.assign(V, -1);
        kids.assign(V, {});
        for (int v = 0; v < V; ++v) {
            if (v == g.owner_index()) continue;
            int p = -1;
            for (int w : g.arcs()[v])
                if (g.depth_at(w) == g.depth_at(v) - 1) p = w;
            if (p < 0 && g.depth_at(v) == 1) p = g.owner_index();
            parent[v] = p;
            kids[p].push_back(v);
        }
        for (auto& k : kids) std::sort(k.begin(), k.end());
        in_subtree.assign(V, std::vector<char>(V, 0));
        for (int x = 0; x < V; ++x)
            for (int a = x; a != -1; a = parent[a]) in_subtree[a][x] = 1;
    }

    // highest (value, then smallest id) bidder with alive[v]; -1 if none
    int top(const std::vector<char>& alive) const {
        int best = -1;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (v == g.owner_index() || !alive[v]) continue;
            if (best == -1 || g.value_at(v) > g.value_at(best)) best = v;
        }
        return best;
    }

    Money top_value_outside(const std::vector<char>& alive, int a) const {
        Money best(0);
        bool any = false;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (v == g.owner_index() || !alive[v] || in_subtree[a][v]) continue;
            if (!any || g.value_at(v) > best) best = g.value_at(v);
            any = true;
        }
        return best;
    }

    std::vector<int> root_chain(int v) const {  // (owner, ..., v)
        std::vector<int> chain;
        for (int x = v; x != -1; x = parent[x]) chain.push_back(x);
        std::reverse(chain.begin(), chain.end());
        return chain;
    }
};

inline Outcome tree_nrm_oracle(const GeneratedGraph& g) {
    TreeFacts t(g);
    const int V = g.vertex_count();
    std::vector<char> all(V, 1);

    std::vector<Money> pay(V, Money(0));
    const int h = t.top(all);
    const std::vector<int> chain = t.root_chain(h);
    int winner = -1;
    Money prev(0);
    for (size_t j = 1; j < chain.size() && winner == -1; ++j) {
        const int a = chain[j];
        const Money required = t.top_value_outside(all, a);
        const std::vector<int>& block = t.kids[chain[j - 1]];  // a is always among them on trees
        long long total = 0;
        for (int k : block) {
            long long sz = 0;
            for (int x = 0; x < V; ++x) sz += t.in_subtree[k][x];
            total += sz;
        }
        for (int k : block) {
            std::vector<char> alive(V, 1);
            for (int x = 0; x < V; ++x)
                if (t.in_subtree[k][x]) alive[x] = 0;
            Money s(0);
            int h2 = t.top(alive);
            if (h2 >= 0) {
                std::vector<int> chain2 = t.root_chain(h2);
                if (chain2.size() > j && chain2[j - 1] == chain[j - 1]) {
                    Money topv = t.top_value_outside(alive, chain2[j]);
                    s = topv - prev;
                    if (s < 0) s = 0;
                }
            }
            long long sz = 0;
            for (int x = 0; x < V; ++x) sz += t.in_subtree[k][x];
            pay[k] -= Money(sz) * s / total;
        }
        if (g.value_at(a) >= required) {
            winner = a;
            pay[a] += required;
        }
        prev = required;
    }

    Outcome out;
    out.winner = g.id_at(winner);
    out.social_welfare = g.value_at(winner);
    for (int v = 0; v < V; ++v) {
        if (v == g.owner_index()) continue;
        out.payments.emplace_back(g.id_at(v), pay[v]);
        out.surplus += pay[v];
    }
    return out;
}

}  // namespace netredist::testing
