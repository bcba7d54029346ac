#pragma once

#include <vector>

namespace netredist::detail {

// Immediate-dominator data for a rooted digraph, computed with the iterative
// Cooper/Harvey/Kennedy scheme over a DFS reverse postorder. Vertices can be
// masked out (`excluded`), which is how counterfactual "remove this dominated
// set" graphs are evaluated without rebuilding adjacency.
struct DominatorInfo {
    int root = -1;
    std::vector<int> idom;          // idom[root] == root; -1 for excluded/unreachable
    std::vector<int> pre, post;     // preorder intervals of the dominator tree; -1 if absent
    std::vector<int> subtree_size;  // |dominator subtree of v| including v itself; 0 if absent

    bool reachable(int v) const { return idom[v] >= 0; }

    // is x inside a's dominator subtree (a itself counts)?
    bool in_subtree(int a, int x) const {
        return pre[x] >= 0 && pre[x] >= pre[a] && pre[x] < post[a];
    }
};

DominatorInfo compute_dominators(const std::vector<std::vector<int>>& out, int root,
                                 const std::vector<char>* excluded = nullptr);

}  // namespace netredist::detail
