#include "netredist/genlab.hpp"

#include "netredist/errors.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <set>

namespace netredist {

namespace {

constexpr std::uint64_t kEdgeStream = 0x45444745;   // extra-edge draws
constexpr std::uint64_t kValueStream = 0x56414c55;  // valuation draws

std::string padded_agent_name(int index, int n) {
    std::string digits = std::to_string(index);
    const size_t width = std::to_string(n).size();
    while (digits.size() < width) digits.insert(digits.begin(), '0');
    return "a" + digits;
}

// shared by gen_tree/gen_graph: undirected edge list over vertices 0..n where
// 0 is the owner, built into a validated SocialNetwork with zero valuations
SocialNetwork assemble(int n, const std::set<std::pair<int, int>>& edges) {
    std::vector<AgentId> names(n + 1);
    names[0] = AgentId("o");
    for (int i = 1; i <= n; ++i) names[i] = AgentId(padded_agent_name(i, n));

    std::vector<std::vector<AgentId>> adj(n + 1);
    for (const auto& [u, v] : edges) {
        adj[u].push_back(names[v]);
        adj[v].push_back(names[u]);
    }
    std::map<AgentId, AgentInfo> agents;
    for (int i = 1; i <= n; ++i) {
        std::sort(adj[i].begin(), adj[i].end());
        agents[names[i]] = AgentInfo{Money(0), std::move(adj[i])};
    }
    std::sort(adj[0].begin(), adj[0].end());
    return SocialNetwork::create(names[0], std::move(adj[0]), std::move(agents));
}

// thousandths of the drawn value; the double path only exists for the
// exponential tail, the stored amount is exact either way
long long sample_law(const ValuationLaw& law, Rng& rng) {
    if (law.kind == ValuationLaw::Kind::uniform) {
        long long lo = money_floor(Money(law.lo * 1000));
        long long hi = money_floor(Money(law.hi * 1000));
        return lo + static_cast<long long>(rng.below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
    double mean = static_cast<double>(numerator(law.mean).convert_to<long long>()) /
                  static_cast<double>(denominator(law.mean).convert_to<long long>());
    double x = -mean * std::log1p(-rng.unit());
    long long milli = std::llround(x * 1000.0);
    return milli < 0 ? 0 : milli;
}

}  // namespace

ValuationLaw ValuationLaw::parse(const std::string& spec) {
    auto split = [](const std::string& s) {
        std::vector<std::string> parts;
        size_t start = 0;
        while (true) {
            size_t colon = s.find(':', start);
            parts.push_back(s.substr(start, colon - start));
            if (colon == std::string::npos) break;
            start = colon + 1;
        }
        return parts;
    };
    const std::vector<std::string> parts = split(spec);
    ValuationLaw law;
    if (parts.size() == 3 && parts[0] == "uniform") {
        law.kind = Kind::uniform;
        law.lo = parse_money(parts[1]);
        law.hi = parse_money(parts[2]);
        if (law.lo < 0 || law.hi < law.lo)
            throw ConfigError("uniform law needs 0 <= LO <= HI, got '" + spec + "'");
        if (denominator(Money(law.lo * 1000)) != 1 || denominator(Money(law.hi * 1000)) != 1)
            throw ConfigError("uniform bounds must be multiples of 1/1000");
        return law;
    }
    if (parts.size() == 2 && (parts[0] == "exponential" || parts[0] == "exp")) {
        law.kind = Kind::exponential;
        law.mean = parse_money(parts[1]);
        if (law.mean <= 0) throw ConfigError("exponential law needs MEAN > 0, got '" + spec + "'");
        return law;
    }
    throw ConfigError("cannot parse valuation law '" + spec + "' (want uniform:LO:HI or exponential:MEAN)");
}

std::string ValuationLaw::describe() const {
    if (kind == Kind::uniform) return "uniform:" + format_money(lo) + ":" + format_money(hi);
    return "exponential:" + format_money(mean);
}

SocialNetwork gen_tree(int n, std::uint64_t seed) {
    if (n < 1) throw ConfigError("gen_tree needs at least one agent");
    Rng rng(seed);
    std::set<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i) {
        int parent = static_cast<int>(rng.below(static_cast<std::uint64_t>(i)));  // 0 = owner
        edges.insert({parent, i});
    }
    return assemble(n, edges);
}

SocialNetwork gen_graph(int n, const Money& extra_edge_factor, std::uint64_t seed) {
    if (n < 1) throw ConfigError("gen_graph needs at least one agent");
    if (extra_edge_factor < 0) throw ConfigError("extra edge factor must be >= 0");
    Rng rng(seed);
    std::set<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i)
        edges.insert({static_cast<int>(rng.below(static_cast<std::uint64_t>(i))), i});

    const long long target = money_floor(Money(extra_edge_factor * n));
    Rng extra(mix_seed(seed, kEdgeStream, static_cast<std::uint64_t>(n)));
    for (long long e = 0; e < target; ++e) {
        int u = static_cast<int>(extra.below(static_cast<std::uint64_t>(n + 1)));
        int v = static_cast<int>(extra.below(static_cast<std::uint64_t>(n + 1)));
        if (u == v) continue;  // dropped, not redrawn: keeps the draw count fixed
        if (u > v) std::swap(u, v);
        edges.insert({u, v});  // set semantics: duplicates vanish
    }
    return assemble(n, edges);
}

SocialNetwork sample_valuations(const SocialNetwork& net, const ValuationLaw& law,
                                std::uint64_t seed) {
    // laws built by hand skip parse(), so re-check what the sampler relies on
    if (law.kind == ValuationLaw::Kind::uniform) {
        if (law.lo < 0 || law.hi < law.lo) throw ConfigError("uniform law needs 0 <= LO <= HI");
        if (denominator(Money(law.lo * 1000)) != 1 || denominator(Money(law.hi * 1000)) != 1)
            throw ConfigError("uniform bounds must be multiples of 1/1000");
    } else if (law.mean <= 0) {
        throw ConfigError("exponential law needs MEAN > 0");
    }
    Rng rng(seed);
    std::map<AgentId, AgentInfo> agents = net.agents();
    for (auto& [id, info] : agents)  // map order == id order: draw sequence is stable
        info.valuation = money_ratio(sample_law(law, rng), 1000);
    return SocialNetwork::create(net.owner(), net.owner_neighbours(), std::move(agents));
}

std::vector<SweepRecord> run_sweep(const SweepConfig& config) {
    if (config.sizes.empty()) throw ConfigError("sweep needs at least one size");
    for (size_t i = 0; i < config.sizes.size(); ++i) {
        if (config.sizes[i] < 1) throw ConfigError("sweep sizes must be >= 1");
        if (i > 0 && config.sizes[i] <= config.sizes[i - 1])
            throw ConfigError("sweep sizes must be strictly increasing");
    }
    if (config.trials < 1) throw ConfigError("sweep needs at least one trial");
    if (config.mechanisms.empty()) throw ConfigError("sweep needs at least one mechanism");
    std::vector<Mechanism> mechs = config.mechanisms;
    std::sort(mechs.begin(), mechs.end());
    mechs.erase(std::unique(mechs.begin(), mechs.end()), mechs.end());

    std::vector<SweepRecord> records;
    for (int n : config.sizes) {
        for (int trial = 0; trial < config.trials; ++trial) {
            const std::uint64_t trial_seed =
                mix_seed(config.seed, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(trial));
            SocialNetwork net = config.family == Family::tree
                                    ? gen_tree(n, trial_seed)
                                    : gen_graph(n, config.extra_edge_factor, trial_seed);
            net = sample_valuations(net, config.law, mix_seed(trial_seed, kValueStream, 0));

            const StrategyProfile truthful = StrategyProfile::truthful(net);
            const GeneratedGraph g = GeneratedGraph::build(net, truthful);
            const Money optimal = efficient_social_welfare(g);

            for (Mechanism m : mechs) {
                const auto t0 = std::chrono::steady_clock::now();
                Outcome oc;
                switch (m) {
                    case Mechanism::nrm: oc = run_nrm(g, /*with_trace=*/false); break;
                    case Mechanism::cavallo: oc = run_cavallo(g); break;
                    case Mechanism::cavallo_neighbours: oc = run_cavallo_neighbours(net, truthful); break;
                }
                const auto t1 = std::chrono::steady_clock::now();

                SweepRecord rec;
                rec.n = n;
                rec.trial = trial;
                rec.mechanism = m;
                rec.surplus = oc.surplus;
                rec.social_welfare = oc.social_welfare;
                rec.optimal_welfare = optimal;
                if (oc.winner)
                    rec.winner_depth = m == Mechanism::cavallo_neighbours ? 1 : g.depth(*oc.winner);
                if (config.record_runtime)
                    rec.runtime_ms =
                        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
                records.push_back(std::move(rec));
            }
        }
    }
    return records;
}

std::vector<std::tuple<long long, Money, Money>> budget_records(const std::vector<SweepRecord>& records,
                                                                Mechanism m) {
    std::vector<std::tuple<long long, Money, Money>> out;
    for (const SweepRecord& r : records)
        if (r.mechanism == m) out.emplace_back(r.n, r.surplus, r.social_welfare);
    return out;
}

}  // namespace netredist
