#pragma once

#include "netredist/money.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace netredist {

// Agents are identified by short opaque strings; all deterministic tie-breaks
// in the mechanisms reduce to lexicographic order on these.
struct AgentId {
    std::string value;

    AgentId() = default;
    explicit AgentId(std::string v) : value(std::move(v)) {}
    explicit AgentId(const char* v) : value(v) {}

    auto operator<=>(const AgentId&) const = default;
};

inline std::string to_string(const AgentId& id) { return id.value; }

// What an agent privately has: a valuation for the single item, and the set
// of agents (possibly including the owner) they could invite.
struct AgentInfo {
    Money valuation;                  // >= 0
    std::vector<AgentId> neighbours;  // sorted, unique, never contains the agent itself
};

// The true state of the world: the owner/seller plus every potential bidder
// with their private valuation and undirected neighbour relation. Instances
// are validated on construction (symmetry, connectivity, non-negativity) so
// everything downstream can assume a well-formed network.
class SocialNetwork {
public:
    // `agents` maps bidder id -> info with sorted unique neighbour lists that
    // must already be symmetric (j in r_i  <=>  i in r_j, owner included).
    // Throws MalformedInputError with a specific code otherwise.
    static SocialNetwork create(AgentId owner, std::vector<AgentId> owner_neighbours,
                                std::map<AgentId, AgentInfo> agents);

    const AgentId& owner() const { return owner_; }
    const std::vector<AgentId>& owner_neighbours() const { return owner_neighbours_; }
    const std::map<AgentId, AgentInfo>& agents() const { return agents_; }

    bool has_agent(const AgentId& id) const { return agents_.count(id) != 0; }
    const AgentInfo& agent(const AgentId& id) const;  // MissingAgentError if unknown
    int agent_count() const { return static_cast<int>(agents_.size()); }

private:
    AgentId owner_;
    std::vector<AgentId> owner_neighbours_;
    std::map<AgentId, AgentInfo> agents_;
};

// One agent's report: a claimed valuation plus the subset of true neighbours
// they actually pass the invitation on to. The owner is allowed in `invited`
// but inviting her is a no-op.
struct StrategyEntry {
    Money reported_valuation;      // >= 0
    std::vector<AgentId> invited;  // sorted unique subset of the agent's true neighbours
};

// Reported types for every bidder. An agent without an entry (or explicitly
// marked absent) reported nothing — which is only consistent if no invitation
// chain reaches them; the graph builder rejects the contradiction.
class StrategyProfile {
public:
    static StrategyProfile truthful(const SocialNetwork& net);

    void set(const AgentId& id, StrategyEntry entry);
    void set_absent(const AgentId& id);

    // nullptr: no record at all. Points to nullopt: explicit absent marker.
    const std::optional<StrategyEntry>* find(const AgentId& id) const;

    const std::map<AgentId, std::optional<StrategyEntry>>& entries() const { return entries_; }

private:
    std::map<AgentId, std::optional<StrategyEntry>> entries_;
};

}  // namespace netredist
