#include "netredist/dominators.hpp"

#include <algorithm>

namespace netredist::detail {

DominatorInfo compute_dominators(const std::vector<std::vector<int>>& out, int root,
                                 const std::vector<char>* excluded) {
    const int n = static_cast<int>(out.size());
    DominatorInfo info;
    info.root = root;
    info.idom.assign(n, -1);
    info.pre.assign(n, -1);
    info.post.assign(n, -1);
    info.subtree_size.assign(n, 0);

    auto alive = [&](int v) { return !excluded || !(*excluded)[v]; };
    if (!alive(root)) return info;

    // iterative DFS from the root; po[] is the postorder number
    std::vector<int> po(n, -1), order;  // order = vertices in postorder
    order.reserve(n);
    {
        std::vector<int> stack{root}, next_child(n, 0);
        std::vector<char> on_stack(n, 0);
        on_stack[root] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            if (next_child[v] < static_cast<int>(out[v].size())) {
                int w = out[v][next_child[v]++];
                if (alive(w) && !on_stack[w] && po[w] == -1) {
                    on_stack[w] = 1;
                    stack.push_back(w);
                }
            } else {
                po[v] = static_cast<int>(order.size());
                order.push_back(v);
                stack.pop_back();
                on_stack[v] = 0;
            }
        }
    }

    // predecessors restricted to reachable vertices
    std::vector<std::vector<int>> preds(n);
    for (int v : order)
        for (int w : out[v])
            if (alive(w) && po[w] != -1) preds[w].push_back(v);

    info.idom[root] = root;
    auto intersect = [&](int a, int b) {
        while (a != b) {
            while (po[a] < po[b]) a = info.idom[a];
            while (po[b] < po[a]) b = info.idom[b];
        }
        return a;
    };

    bool changed = true;
    while (changed) {
        changed = false;
        // reverse postorder
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            int v = order[i];
            if (v == root) continue;
            int best = -1;
            for (int p : preds[v]) {
                if (info.idom[p] == -1) continue;
                best = (best == -1) ? p : intersect(best, p);
            }
            if (best != -1 && info.idom[v] != best) {
                info.idom[v] = best;
                changed = true;
            }
        }
    }

    // dominator-tree preorder intervals + subtree sizes
    std::vector<std::vector<int>> dom_children(n);
    for (int v : order)
        if (v != root && info.idom[v] != -1) dom_children[info.idom[v]].push_back(v);
    for (auto& c : dom_children) std::sort(c.begin(), c.end());

    int clock = 0;
    // entry = (vertex, entering?) — post-visit fills the interval end and size
    std::vector<std::pair<int, bool>> stack{{root, true}};
    while (!stack.empty()) {
        auto [v, entering] = stack.back();
        stack.pop_back();
        if (entering) {
            info.pre[v] = clock++;
            stack.push_back({v, false});
            for (auto it = dom_children[v].rbegin(); it != dom_children[v].rend(); ++it)
                stack.push_back({*it, true});
        } else {
            info.post[v] = clock;
            info.subtree_size[v] = info.post[v] - info.pre[v];
        }
    }
    return info;
}

}  // namespace netredist::detail
