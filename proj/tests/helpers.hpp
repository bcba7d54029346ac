#pragma once

#include "netredist/genlab.hpp"
#include "netredist/network.hpp"
#include "netredist/rng.hpp"

#include <map>

namespace netredist::testing {

// random instance with integer valuations in [0, max_value] — keeps deviation
// grids small enough for exhaustive audits
inline SocialNetwork random_instance(int n, std::uint64_t seed, bool tree, int max_value,
                                     const Money& extra_factor = money_ratio(2, 5)) {
    SocialNetwork net = tree ? gen_tree(n, seed) : gen_graph(n, extra_factor, seed);
    Rng rng(mix_seed(seed, 0xABCDULL, static_cast<std::uint64_t>(n)));
    std::map<AgentId, AgentInfo> agents = net.agents();
    for (auto& [id, info] : agents)
        info.valuation = Money(static_cast<long long>(rng.below(max_value + 1)));
    return SocialNetwork::create(net.owner(), net.owner_neighbours(), std::move(agents));
}

}  // namespace netredist::testing
