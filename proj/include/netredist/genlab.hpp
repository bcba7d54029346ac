#pragma once

#include "netredist/audit.hpp"
#include "netredist/mechanisms.hpp"
#include "netredist/network.hpp"
#include "netredist/rng.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace netredist {

enum class Family { tree, graph };

// How valuations are drawn. Samples are quantized to 1/1000 so instances stay
// exactly representable and serializable.
struct ValuationLaw {
    enum class Kind { uniform, exponential } kind = Kind::uniform;
    Money lo = Money(0), hi = Money(100);  // uniform bounds, multiples of 1/1000
    Money mean = Money(1);                 // exponential mean, > 0

    // "uniform:LO:HI" or "exponential:MEAN" (alias "exp:MEAN")
    static ValuationLaw parse(const std::string& spec);
    std::string describe() const;
};

// Random attachment tree: agents a1..an arrive in id order, each wiring to a
// uniformly chosen earlier vertex (owner included). All valuations start at 0;
// sample_valuations fills them in. Deterministic per (n, seed).
SocialNetwork gen_tree(int n, std::uint64_t seed);

// gen_tree plus floor(extra_edge_factor * n) uniformly drawn extra undirected
// edges; self-loops and already-present pairs are dropped, not redrawn, so the
// realised extra count can be lower than the target.
SocialNetwork gen_graph(int n, const Money& extra_edge_factor, std::uint64_t seed);

// Same network with fresh valuations drawn per agent in id order.
SocialNetwork sample_valuations(const SocialNetwork& net, const ValuationLaw& law,
                                std::uint64_t seed);

struct SweepConfig {
    Family family = Family::tree;
    std::vector<int> sizes;          // strictly increasing after validation
    int trials = 1;
    std::uint64_t seed = 42;
    Money extra_edge_factor = money_ratio(3, 10);  // graphs only
    ValuationLaw law;
    std::vector<Mechanism> mechanisms{Mechanism::nrm};
    bool record_runtime = false;     // keep false for byte-identical reruns
};

struct SweepRecord {
    int n = 0;
    int trial = 0;
    Mechanism mechanism = Mechanism::nrm;
    Money surplus;
    Money social_welfare;
    Money optimal_welfare;
    int winner_depth = 0;
    long long runtime_ms = 0;
};

// One record per (size, trial, mechanism), in exactly that order. Each trial
// draws its own network and valuations from streams derived from the seed, so
// any record is reproducible in isolation.
std::vector<SweepRecord> run_sweep(const SweepConfig& config);

// ready for measure_budget_balance
std::vector<std::tuple<long long, Money, Money>> budget_records(const std::vector<SweepRecord>& records,
                                                                Mechanism m);

}  // namespace netredist
