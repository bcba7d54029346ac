#include "netredist/fixtures.hpp"

#include <algorithm>

namespace netredist::fixtures {

namespace {

// edge-list helper: ("a", "b") pairs, owner named "o", valuations given per id
SocialNetwork from_edges(const std::vector<std::pair<std::string, std::string>>& edges,
                         const std::map<std::string, int>& valuations) {
    const AgentId owner("o");
    std::map<AgentId, AgentInfo> agents;
    std::vector<AgentId> owner_nb;
    for (const auto& [v, val] : valuations) agents[AgentId(v)] = AgentInfo{Money(val), {}};
    auto attach = [&](const std::string& from, const std::string& to) {
        if (from == "o")
            owner_nb.push_back(AgentId(to));
        else
            agents.at(AgentId(from)).neighbours.push_back(AgentId(to));
    };
    for (const auto& [u, v] : edges) {
        attach(u, v);
        attach(v, u);
    }
    std::sort(owner_nb.begin(), owner_nb.end());
    for (auto& [id, info] : agents) std::sort(info.neighbours.begin(), info.neighbours.end());
    return SocialNetwork::create(owner, std::move(owner_nb), std::move(agents));
}

}  // namespace

SocialNetwork line_network() {
    return from_edges({{"o", "a"}, {"a", "b"}}, {{"a", 1}, {"b", 10}});
}

SocialNetwork deficit_network() {
    return from_edges({{"o", "a"}, {"o", "b"}, {"o", "d"}, {"a", "c"}},
                      {{"a", 0}, {"b", 0}, {"c", 1}, {"d", 0}});
}

SocialNetwork disincentive_network() {
    return from_edges({{"o", "a"}, {"o", "b"}, {"o", "c"}, {"a", "d"}, {"c", "e"}},
                      {{"a", 2}, {"b", 3}, {"c", 4}, {"d", 0}, {"e", 0}});
}

SocialNetwork tree_example() {
    return from_edges(
        {{"o", "a"}, {"o", "b"}, {"o", "c"},
         {"a", "d"}, {"a", "e"}, {"d", "j"},
         {"b", "f"}, {"b", "g"}, {"b", "h"},
         {"g", "k"}, {"g", "l"}, {"g", "m"}, {"l", "q"},
         {"c", "i"}, {"c", "n"}, {"i", "p"}},
        {{"a", 2}, {"b", 7}, {"c", 4}, {"d", 3}, {"e", 8}, {"f", 17}, {"g", 11}, {"h", 17},
         {"i", 10}, {"j", 5}, {"k", 1}, {"l", 18}, {"m", 2}, {"n", 6}, {"p", 9}, {"q", 18}});
}

SocialNetwork graph_example() {
    return from_edges(
        {{"o", "a"}, {"o", "b"}, {"o", "c"}, {"o", "g"},
         {"a", "d"}, {"a", "e"}, {"c", "i"},
         {"g", "j"}, {"g", "k"}, {"g", "l"}, {"g", "m"}, {"g", "p"},
         {"j", "f"}, {"k", "f"}, {"l", "h"}, {"m", "h"}, {"p", "r"}},
        {{"a", 3}, {"b", 7}, {"c", 5}, {"d", 9}, {"e", 2}, {"f", 15}, {"g", 6}, {"h", 15},
         {"i", 12}, {"j", 1}, {"k", 4}, {"l", 2}, {"m", 3}, {"p", 16}, {"r", 17}});
}

SocialNetwork relay_chain(int n) {
    // u and v are the equal gatekeepers; w heads a chain carrying the top bid
    // at its far end. n >= 3.
    std::vector<std::pair<std::string, std::string>> edges{{"o", "u"}, {"o", "v"}, {"o", "w"}};
    std::map<std::string, int> vals{{"u", 3}, {"v", 3}, {"w", 0}};
    std::string prev = "w";
    for (int i = 0; i < n - 3; ++i) {
        std::string cur = "x" + std::to_string(i);  // chain below w
        edges.push_back({prev, cur});
        vals[cur] = (i == n - 4) ? 10 : 0;  // last link holds the prize
        prev = cur;
    }
    if (n == 3) vals["w"] = 10;  // degenerate: the chain is just w
    return from_edges(edges, vals);
}

std::vector<GoldenCase> golden_cases() {
    std::vector<GoldenCase> cases;

    cases.push_back(GoldenCase{
        "line",
        "low-value gatekeeper in front of the best bid",
        line_network(),
        Mechanism::nrm,
        AgentId("a"),
        {{AgentId("a"), Money(0)}, {AgentId("b"), Money(0)}},
        Money(0),
        Money(1)});

    cases.push_back(GoldenCase{
        "deficit",
        "baseline pays a bridge agent more than it collects",
        deficit_network(),
        Mechanism::cavallo,
        AgentId("c"),
        {{AgentId("a"), Money(-1)}, {AgentId("b"), Money(0)}, {AgentId("c"), Money(0)},
         {AgentId("d"), Money(0)}},
        Money(-1),
        Money(1)});

    cases.push_back(GoldenCase{
        "disincentive",
        "baseline rebates reward hiding your own subtree",
        disincentive_network(),
        Mechanism::cavallo,
        AgentId("c"),
        {{AgentId("a"), money_ratio(-3, 5)}, {AgentId("b"), money_ratio(-2, 5)},
         {AgentId("c"), money_ratio(13, 5)}, {AgentId("d"), money_ratio(-3, 5)},
         {AgentId("e"), money_ratio(-3, 5)}},
        money_ratio(2, 5),
        Money(4)});

    cases.push_back(GoldenCase{
        "tree",
        "three-step walk on a 16-bidder tree",
        tree_example(),
        Mechanism::nrm,
        AgentId("l"),
        {{AgentId("a"), money_ratio(-5, 2)}, {AgentId("b"), Money(-4)}, {AgentId("c"), Money(-2)},
         {AgentId("d"), Money(0)}, {AgentId("e"), Money(0)}, {AgentId("f"), Money(-1)},
         {AgentId("g"), Money(-5)}, {AgentId("h"), Money(-1)}, {AgentId("i"), Money(0)},
         {AgentId("j"), Money(0)}, {AgentId("k"), Money(0)}, {AgentId("l"), Money(17)},
         {AgentId("m"), Money(0)}, {AgentId("n"), Money(0)}, {AgentId("p"), Money(0)},
         {AgentId("q"), Money(0)}},
        money_ratio(3, 2),
        Money(18)});

    cases.push_back(GoldenCase{
        "graph",
        "two-step walk on a 15-bidder graph with diamonds",
        graph_example(),
        Mechanism::nrm,
        AgentId("p"),
        {{AgentId("a"), money_ratio(-12, 5)}, {AgentId("b"), money_ratio(-4, 5)},
         {AgentId("c"), money_ratio(-6, 5)}, {AgentId("d"), Money(0)}, {AgentId("e"), Money(0)},
         {AgentId("f"), Money(0)}, {AgentId("g"), money_ratio(-27, 5)}, {AgentId("h"), Money(0)},
         {AgentId("i"), Money(0)}, {AgentId("j"), money_ratio(-1, 2)},
         {AgentId("k"), money_ratio(-1, 2)}, {AgentId("l"), money_ratio(-1, 2)},
         {AgentId("m"), money_ratio(-1, 2)}, {AgentId("p"), Money(14)}, {AgentId("r"), Money(0)}},
        money_ratio(11, 5),
        Money(16)});

    return cases;
}

}  // namespace netredist::fixtures
