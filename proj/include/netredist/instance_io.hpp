#pragma once

#include "netredist/audit.hpp"
#include "netredist/genlab.hpp"
#include "netredist/mechanisms.hpp"
#include "netredist/network.hpp"

#include <string>
#include <vector>

namespace netredist {

// An instance file carries the true network and, optionally, explicit reports.
// Agents without a strategy entry report truthfully; `"absent": true` entries
// are only legal for agents no invitation chain reaches.
struct ParsedInstance {
    SocialNetwork network;
    StrategyProfile profile;
    bool explicit_strategy = false;  // file had a "strategy" key
};

// Throws MalformedInputError with a distinct code per rejection reason.
// Neighbour declarations are undirected: listing "b" under a implies the edge
// both ways; both endpoints may declare it.
ParsedInstance parse_instance(const std::string& text);
ParsedInstance parse_instance_file(const std::string& path);

// Canonical rendering: sorted keys, sorted arrays, exact money strings, every
// agent's strategy spelled out. parse(serialize(parse(x))) is the identity.
std::string serialize_instance(const SocialNetwork& net, const StrategyProfile& profile);

// Stable human-readable outcome; `with_trace` appends the walk, one step per
// block with per-member rebate lines.
std::string format_outcome(const Outcome& outcome, bool with_trace);
std::string outcome_json(const Outcome& outcome, bool with_trace);

std::string format_audit(const AuditReport& report);

// Exactly: n,trial,mechanism,surplus,social_welfare,optimal_welfare,winner_depth,runtime_ms
std::string sweep_csv(const std::vector<SweepRecord>& records);
std::string sweep_json(const std::vector<SweepRecord>& records);

}  // namespace netredist
