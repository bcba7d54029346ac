#include "netredist/audit.hpp"
#include "netredist/errors.hpp"
#include "netredist/fixtures.hpp"
#include "netredist/genlab.hpp"
#include "netredist/instance_io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

namespace {

using namespace netredist;

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 2;  // unparseable/invalid instance or arguments
constexpr int kExitViolation = 3; // an audit found a property violation
constexpr int kExitInternal = 4;  // everything else, including golden drift

Mechanism mechanism_arg(const std::string& name) {
    std::optional<Mechanism> m = parse_mechanism(name);
    if (!m)
        throw MalformedInputError(InputErrorCode::bad_value,
                                  "unknown mechanism '" + name +
                                      "' (want nrm, cavallo or cavallo-neighbours)");
    return *m;
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("NETREDIST_SEED")) {
        try {
            return std::stoull(env);
        } catch (...) {
            throw ConfigError("NETREDIST_SEED must be an unsigned integer");
        }
    }
    return 42;
}

int cmd_run(const std::string& input, const std::string& mech_name, bool trace, bool as_json) {
    ParsedInstance inst = parse_instance_file(input);
    Mechanism mech = mechanism_arg(mech_name);
    Outcome oc;
    switch (mech) {
        case Mechanism::nrm:
            oc = run_nrm(GeneratedGraph::build(inst.network, inst.profile), trace);
            break;
        case Mechanism::cavallo:
            oc = run_cavallo(GeneratedGraph::build(inst.network, inst.profile));
            break;
        case Mechanism::cavallo_neighbours:
            oc = run_cavallo_neighbours(inst.network, inst.profile);
            break;
    }
    std::cout << (as_json ? outcome_json(oc, trace) : format_outcome(oc, trace));
    return kExitOk;
}

int cmd_audit(const std::string& input, const std::string& mech_name, int degree_cap, int samples) {
    ParsedInstance inst = parse_instance_file(input);
    DeviationSearchOptions opts;
    opts.degree_cap = degree_cap;
    opts.sample_count = samples;
    AuditReport report = run_audit(inst.network, mechanism_arg(mech_name), opts);
    std::cout << format_audit(report);
    return report.clean() ? kExitOk : kExitViolation;
}

int cmd_sweep(const std::string& family, std::vector<int> sizes, int trials, std::uint64_t seed,
              const std::string& law, const std::string& out_path, const std::string& format,
              const std::string& factor, const std::vector<std::string>& mech_names, bool timings) {
    SweepConfig cfg;
    if (family == "tree")
        cfg.family = Family::tree;
    else if (family == "graph")
        cfg.family = Family::graph;
    else
        throw ConfigError("unknown family '" + family + "' (want tree or graph)");
    cfg.sizes = std::move(sizes);
    cfg.trials = trials;
    cfg.seed = seed;
    cfg.law = ValuationLaw::parse(law);
    cfg.extra_edge_factor = parse_money(factor);
    cfg.record_runtime = timings;
    cfg.mechanisms.clear();
    for (const std::string& m : mech_names) cfg.mechanisms.push_back(mechanism_arg(m));

    std::vector<SweepRecord> records = run_sweep(cfg);

    std::string rendered;
    if (format == "csv")
        rendered = sweep_csv(records);
    else if (format == "json")
        rendered = sweep_json(records);
    else
        throw ConfigError("unknown format '" + format + "' (want csv or json)");
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ConfigError("cannot write '" + out_path + "'");
    out << rendered;
    out.close();

    // per-size mean surplus/welfare for the first mechanism, as a quick read
    std::cout << "wrote " << records.size() << " records to " << out_path << "\n";
    if (cfg.sizes.size() >= 2) {
        for (const BudgetPoint& p : measure_budget_balance(budget_records(records, cfg.mechanisms[0])))
            std::cout << "n=" << p.n << " mean surplus/welfare " << format_money(p.mean_ratio)
                      << " over " << p.samples << " trials\n";
    }
    return kExitOk;
}

int cmd_golden(bool list_only, const std::string& only_name) {
    bool matched = false, all_ok = true;
    for (const fixtures::GoldenCase& gc : fixtures::golden_cases()) {
        if (list_only) {
            std::cout << gc.name << ": " << gc.blurb << "\n";
            matched = true;
            continue;
        }
        if (!only_name.empty() && gc.name != only_name) continue;
        matched = true;

        StrategyProfile truthful = StrategyProfile::truthful(gc.network);
        Outcome oc;
        switch (gc.mechanism) {
            case Mechanism::nrm:
                oc = run_nrm(GeneratedGraph::build(gc.network, truthful), /*with_trace=*/false);
                break;
            case Mechanism::cavallo:
                oc = run_cavallo(GeneratedGraph::build(gc.network, truthful));
                break;
            case Mechanism::cavallo_neighbours:
                oc = run_cavallo_neighbours(gc.network, truthful);
                break;
        }
        std::string complaint;
        if (!oc.winner || *oc.winner != gc.winner)
            complaint = "winner " + (oc.winner ? oc.winner->value : "(none)") + " != " + gc.winner.value;
        else if (oc.surplus != gc.surplus)
            complaint = "surplus " + format_money(oc.surplus) + " != " + format_money(gc.surplus);
        else if (oc.social_welfare != gc.social_welfare)
            complaint = "welfare " + format_money(oc.social_welfare) + " != " +
                        format_money(gc.social_welfare);
        else
            for (const auto& [id, expected] : gc.payments)
                if (oc.payment_of(id) != expected) {
                    complaint = "payment of " + id.value + " is " + format_money(oc.payment_of(id)) +
                                ", expected " + format_money(expected);
                    break;
                }
        bool ok = complaint.empty();
        all_ok = all_ok && ok;
        std::cout << "golden " << gc.name << " [" << to_string(gc.mechanism)
                  << "]: " << (ok ? "PASS" : "FAIL " + complaint) << "\n";
    }
    if (!matched && !only_name.empty()) {
        std::cerr << "no golden case named '" << only_name << "'\n";
        return kExitBadInput;
    }
    return all_ok ? kExitOk : kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"redistribution mechanisms on invitation networks"};
    app.require_subcommand(1);

    std::string input, mech_name = "nrm";
    bool trace = false, as_json = false;
    CLI::App* run = app.add_subcommand("run", "run one mechanism on an instance file");
    run->add_option("--input", input, "instance JSON file")->required();
    run->add_option("--mechanism", mech_name, "nrm | cavallo | cavallo-neighbours")->required();
    run->add_flag("--trace", trace, "include the walk trace");
    run->add_flag("--json", as_json, "JSON output instead of text");

    std::string a_input, a_mech = "nrm";
    int degree_cap = 8, samples = 512;
    CLI::App* audit = app.add_subcommand("audit", "check IR/IC/non-deficit/efficiency on an instance");
    audit->add_option("--input", a_input, "instance JSON file")->required();
    audit->add_option("--mechanism", a_mech, "nrm | cavallo | cavallo-neighbours")->required();
    audit->add_option("--degree-cap", degree_cap,
                      "max degree for exhaustive invitation subsets (default 8)");
    audit->add_option("--samples", samples, "sampled subsets above the cap (default 512)");

    std::string family = "tree", law = "uniform:0:100", out_path, format = "csv", factor = "0.3";
    std::vector<int> sizes;
    std::vector<std::string> mech_names{"nrm"};
    int trials = 1;
    std::uint64_t seed = 0;
    bool seed_given = false, timings = false;
    CLI::App* sweep = app.add_subcommand("sweep", "generate instances and tabulate mechanism results");
    sweep->add_option("--family", family, "tree | graph")->required();
    sweep->add_option("--sizes", sizes, "market sizes, e.g. 10,50,200")->required()->delimiter(',');
    sweep->add_option("--trials", trials, "trials per size")->required();
    sweep->add_option("--seed", seed, "root seed (default: NETREDIST_SEED or 42)")
        ->each([&](const std::string&) { seed_given = true; });
    sweep->add_option("--law", law, "uniform:LO:HI | exponential:MEAN (default uniform:0:100)");
    sweep->add_option("--out", out_path, "output file")->required();
    sweep->add_option("--format", format, "csv | json (default csv)");
    sweep->add_option("--extra-edge-factor", factor, "extra edges per agent for --family graph");
    sweep->add_option("--mechanisms", mech_names, "subset of nrm,cavallo,cavallo-neighbours")
        ->delimiter(',');
    sweep->add_flag("--timings", timings,
                    "record wall-clock runtime_ms (off by default so reruns are byte-identical)");

    bool list_only = false;
    std::string only_name;
    CLI::App* golden = app.add_subcommand("golden", "re-check the built-in reference instances");
    golden->add_flag("--list", list_only, "list case names only");
    golden->add_option("--name", only_name, "run a single named case");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadInput;
    }

    try {
        if (*run) return cmd_run(input, mech_name, trace, as_json);
        if (*audit) return cmd_audit(a_input, a_mech, degree_cap, samples);
        if (*sweep)
            return cmd_sweep(family, sizes, trials, seed_given ? seed : default_seed(), law,
                             out_path, format, factor, mech_names, timings);
        if (*golden) return cmd_golden(list_only, only_name);
    } catch (const MalformedInputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInternal;  // unreachable: a subcommand is required
}
