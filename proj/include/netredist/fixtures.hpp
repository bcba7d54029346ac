#pragma once

#include "netredist/mechanisms.hpp"
#include "netredist/network.hpp"

#include <map>
#include <string>
#include <vector>

namespace netredist::fixtures {

// Hand-checked reference instances. Expected values are frozen here and
// consumed both by the regression tests and by the CLI `golden` command.

// o - a(1) - b(10): the best bid is locked behind a low-value gatekeeper; the
// walk stops at a, welfare 1 against an unreachable optimum of 10.
SocialNetwork line_network();

// o - {a,b,d}, a - c, only c values the item: the baseline pays the bridge
// agent more than it collects, surplus -1.
SocialNetwork deficit_network();

// o - {a,b,c}, a - d, c - e, valuations 2/3/4/0/0: hiding your subtree shrinks
// the market and raises your own baseline rebate.
SocialNetwork disincentive_network();

// 16-bidder tree: three-step walk, rebates 2.5/4/2 then 1/5/1 then zeros,
// winner l pays 17, surplus 1.5.
SocialNetwork tree_example();

// 15-bidder graph with diamonds: two-step walk, rebates 2.4/0.8/1.2/5.4 then
// 0.5 x4 and 1, winner p pays 14, surplus 2.2.
SocialNetwork graph_example();

// Two equal-value gatekeepers beside a value-carrying chain of total size n:
// every step's rebates absorb the whole price increment, surplus is exactly 0
// at every size. Useful as a known-ratio budget-balance family.
SocialNetwork relay_chain(int n);

struct GoldenCase {
    std::string name;
    std::string blurb;
    SocialNetwork network;
    Mechanism mechanism;
    // frozen expectations for the truthful profile
    AgentId winner;
    std::map<AgentId, Money> payments;
    Money surplus;
    Money social_welfare;
};

std::vector<GoldenCase> golden_cases();

}  // namespace netredist::fixtures
