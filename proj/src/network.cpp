#include "netredist/network.hpp"

#include "netredist/errors.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace netredist {

namespace {

// sorted + unique + no self reference; throws the matching code otherwise
void check_neighbour_list(const AgentId& who, const std::vector<AgentId>& list) {
    for (size_t i = 0; i < list.size(); ++i) {
        if (list[i] == who)
            throw MalformedInputError(InputErrorCode::self_edge,
                                      to_string(who) + " lists itself as a neighbour");
        if (i > 0 && !(list[i - 1] < list[i]))
            throw MalformedInputError(InputErrorCode::duplicate_edge,
                                      to_string(who) + " has a repeated or unsorted neighbour entry '" +
                                          to_string(list[i]) + "'");
    }
}

bool contains(const std::vector<AgentId>& sorted, const AgentId& id) {
    return std::binary_search(sorted.begin(), sorted.end(), id);
}

}  // namespace

SocialNetwork SocialNetwork::create(AgentId owner, std::vector<AgentId> owner_neighbours,
                                    std::map<AgentId, AgentInfo> agents) {
    SocialNetwork net;
    net.owner_ = std::move(owner);
    net.owner_neighbours_ = std::move(owner_neighbours);
    net.agents_ = std::move(agents);

    if (net.agents_.count(net.owner_))
        throw MalformedInputError(InputErrorCode::owner_conflict,
                                  "owner '" + to_string(net.owner_) + "' also declared as an agent");

    check_neighbour_list(net.owner_, net.owner_neighbours_);
    for (const AgentId& id : net.owner_neighbours_)
        if (!net.agents_.count(id))
            throw MalformedInputError(InputErrorCode::unknown_id,
                                      "owner neighbour '" + to_string(id) + "' is not a declared agent");

    for (const auto& [id, info] : net.agents_) {
        if (info.valuation < 0)
            throw MalformedInputError(InputErrorCode::negative_valuation,
                                      "agent '" + to_string(id) + "' has a negative valuation");
        check_neighbour_list(id, info.neighbours);
        for (const AgentId& nb : info.neighbours) {
            if (nb == net.owner_) {
                if (!contains(net.owner_neighbours_, id))
                    throw MalformedInputError(InputErrorCode::unknown_id,
                                              "asymmetric edge " + to_string(id) + "-" + to_string(nb));
                continue;
            }
            auto it = net.agents_.find(nb);
            if (it == net.agents_.end())
                throw MalformedInputError(InputErrorCode::unknown_id,
                                          "agent '" + to_string(id) + "' references undeclared '" +
                                              to_string(nb) + "'");
            if (!contains(it->second.neighbours, id))
                throw MalformedInputError(InputErrorCode::unknown_id,
                                          "asymmetric edge " + to_string(id) + "-" + to_string(nb));
        }
    }
    for (const AgentId& nb : net.owner_neighbours_)
        if (!contains(net.agents_.at(nb).neighbours, net.owner_))
            throw MalformedInputError(InputErrorCode::unknown_id,
                                      "asymmetric edge " + to_string(net.owner_) + "-" + to_string(nb));

    // every agent must be reachable from the owner through true edges
    std::set<AgentId> seen;
    std::deque<AgentId> queue(net.owner_neighbours_.begin(), net.owner_neighbours_.end());
    for (const AgentId& id : net.owner_neighbours_) seen.insert(id);
    while (!queue.empty()) {
        AgentId cur = queue.front();
        queue.pop_front();
        for (const AgentId& nb : net.agents_.at(cur).neighbours) {
            if (nb == net.owner_ || seen.count(nb)) continue;
            seen.insert(nb);
            queue.push_back(nb);
        }
    }
    if (static_cast<int>(seen.size()) != net.agent_count())
        for (const auto& [id, info] : net.agents_)
            if (!seen.count(id))
                throw MalformedInputError(InputErrorCode::disconnected,
                                          "agent '" + to_string(id) + "' is unreachable from the owner");

    return net;
}

const AgentInfo& SocialNetwork::agent(const AgentId& id) const {
    auto it = agents_.find(id);
    if (it == agents_.end()) throw MissingAgentError(to_string(id));
    return it->second;
}

StrategyProfile StrategyProfile::truthful(const SocialNetwork& net) {
    StrategyProfile p;
    for (const auto& [id, info] : net.agents()) {
        StrategyEntry e;
        e.reported_valuation = info.valuation;
        for (const AgentId& nb : info.neighbours)
            if (nb != net.owner()) e.invited.push_back(nb);
        p.set(id, std::move(e));
    }
    return p;
}

void StrategyProfile::set(const AgentId& id, StrategyEntry entry) {
    entries_[id] = std::move(entry);
}

void StrategyProfile::set_absent(const AgentId& id) { entries_[id] = std::nullopt; }

const std::optional<StrategyEntry>* StrategyProfile::find(const AgentId& id) const {
    auto it = entries_.find(id);
    return it == entries_.end() ? nullptr : &it->second;
}

}  // namespace netredist
