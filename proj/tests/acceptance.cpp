// Acceptance gate: one pass/fail line per criterion, all checked exactly.
// Run through ctest (it sets NETREDIST_CLI for the determinism criterion).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "netredist/audit.hpp"
#include "netredist/dominators.hpp"
#include "netredist/fixtures.hpp"
#include "netredist/genlab.hpp"
#include "netredist/instance_io.hpp"

#include "helpers.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace netredist;

namespace {

struct Criterion {
    int number;
    std::string name;
    bool ok = true;
    std::vector<std::string> notes;
    std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

    Criterion(int number, std::string name) : number(number), name(std::move(name)) {}

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            notes.push_back(what);
        }
    }

    double elapsed_s() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    }

    // the one line the gate promises, plus the reasons when it fails
    void report() {
        std::ostringstream line;
        line << "criterion " << number << " (" << name << "): " << (ok ? "PASS" : "FAIL");
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.2f", elapsed_s());
        line << "  [" << buf << " s]";
        std::cout << line.str() << "\n";
        for (const std::string& n : notes) std::cout << "    - " << n << "\n";
        std::cout.flush();
        CHECK_MESSAGE(ok, "criterion ", number, " (", name, ") failed");
    }
};

Outcome truthful_outcome(const SocialNetwork& net, Mechanism m) {
    return evaluate_mechanism(net, StrategyProfile::truthful(net), m);
}

Outcome truthful_walk_with_trace(const SocialNetwork& net) {
    return run_nrm(GeneratedGraph::build(net, StrategyProfile::truthful(net)), /*with_trace=*/true);
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct CmdResult {
    int status = -1;
    std::string output;
};

CmdResult run_cmd(const std::string& cmd) {
    CmdResult res;
    FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
    if (!pipe) return res;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.output.append(buf, got);
    int rc = pclose(pipe);
    res.status = (rc >= 0 && WIFEXITED(rc)) ? WEXITSTATUS(rc) : -1;
    return res;
}

}  // namespace

TEST_CASE("criterion 1") {
    Criterion c(1, "tree walk golden trace");
    Outcome oc = truthful_walk_with_trace(fixtures::tree_example());

    c.require(oc.winner == AgentId("l"), "winner should be l");
    c.require(oc.surplus == money_ratio(3, 2), "total surplus should be 1.5");
    c.require(oc.social_welfare == Money(18), "welfare should be 18");
    c.require(oc.trace.size() == 3, "walk should take three steps");
    if (oc.trace.size() == 3) {
        const auto& s1 = oc.trace[0];
        c.require(s1.rebates.at(AgentId("a")) == money_ratio(5, 2), "step 1: R_a = 2.5");
        c.require(s1.rebates.at(AgentId("b")) == Money(4), "step 1: R_b = 4");
        c.require(s1.rebates.at(AgentId("c")) == Money(2), "step 1: R_c = 2");
        c.require(s1.step_surplus == money_ratio(3, 2), "step 1 surplus = 1.5");
        const auto& s2 = oc.trace[1];
        c.require(s2.rebates.at(AgentId("f")) == Money(1), "step 2: R_f = 1");
        c.require(s2.rebates.at(AgentId("g")) == Money(5), "step 2: R_g = 5");
        c.require(s2.rebates.at(AgentId("h")) == Money(1), "step 2: R_h = 1");
        c.require(s2.step_surplus == Money(0), "step 2 surplus = 0");
        const auto& s3 = oc.trace[2];
        for (const auto& [id, r] : s3.rebates)
            c.require(r == Money(0), "step 3 rebates all 0 (R_" + id.value + ")");
        c.require(s3.allocated_here, "allocation happens at step 3");
    }
    c.require(c.elapsed_s() < 1.0, "must finish inside 1 s");
    c.report();
}

TEST_CASE("criterion 2") {
    Criterion c(2, "graph walk golden trace");
    Outcome oc = truthful_walk_with_trace(fixtures::graph_example());

    c.require(oc.winner == AgentId("p"), "winner should be p");
    c.require(oc.payment_of(AgentId("p")) == Money(14), "p pays 14");
    c.require(oc.surplus == money_ratio(11, 5), "total surplus should be 2.2");
    c.require(oc.social_welfare == Money(16), "welfare should be 16");
    c.require(oc.trace.size() == 2, "walk should take two steps");
    if (oc.trace.size() == 2) {
        const auto& s1 = oc.trace[0];
        c.require(s1.rebates.at(AgentId("a")) == money_ratio(12, 5), "step 1: R_a = 2.4");
        c.require(s1.rebates.at(AgentId("b")) == money_ratio(4, 5), "step 1: R_b = 0.8");
        c.require(s1.rebates.at(AgentId("c")) == money_ratio(6, 5), "step 1: R_c = 1.2");
        c.require(s1.rebates.at(AgentId("g")) == money_ratio(27, 5), "step 1: R_g = 5.4");
        c.require(s1.step_surplus == money_ratio(11, 5), "step 1 surplus = 2.2");
        const auto& s2 = oc.trace[1];
        for (const char* half : {"j", "k", "l", "m"})
            c.require(s2.rebates.at(AgentId(half)) == money_ratio(1, 2),
                      std::string("step 2: R_") + half + " = 0.5");
        c.require(s2.rebates.at(AgentId("p")) == Money(1), "step 2: R_p = 1");
    }
    c.report();
}

TEST_CASE("criterion 3") {
    Criterion c(3, "baseline runs a deficit");
    Outcome oc = truthful_outcome(fixtures::deficit_network(), Mechanism::cavallo);
    c.require(oc.surplus == Money(-1), "surplus should be exactly -1");
    c.require(!check_non_deficit(oc), "check_non_deficit should flag it");
    c.report();
}

TEST_CASE("criterion 4") {
    Criterion c(4, "baseline discourages invitations");
    SocialNetwork net = fixtures::disincentive_network();

    Outcome truthful = truthful_outcome(net, Mechanism::cavallo);
    c.require(truthful.payment_of(AgentId("b")) == money_ratio(-2, 5), "truthful rebate b = 2/5");
    c.require(Money(3) - truthful.payment_of(AgentId("c")) == money_ratio(2, 5),
              "truthful rebate c = 2/5");  // winner: rebate off the price of 3
    for (const char* id : {"a", "d", "e"})
        c.require(truthful.payment_of(AgentId(id)) == money_ratio(-3, 5),
                  std::string("truthful rebate ") + id + " = 3/5");

    // the audit must flag withholding for both a and c
    IcResult ic = audit_ic(net, Mechanism::cavallo);
    bool a_flagged = false, c_flagged = false;
    for (const IcViolation& v : ic.violations) {
        if (v.deviation.agent == AgentId("a") && v.deviation.invited.empty() &&
            v.deviation.reported_valuation == Money(2))
            a_flagged = true;
        if (v.deviation.agent == AgentId("c") && v.deviation.invited.empty() &&
            v.deviation.reported_valuation == Money(4))
            c_flagged = true;
    }
    c.require(a_flagged, "audit should flag a's empty invitation");
    c.require(c_flagged, "audit should flag c's withheld invitation");

    // quoted rebates 1 and 2/3 arise when both withhold at once
    StrategyProfile joint = StrategyProfile::truthful(net);
    joint.set(AgentId("a"), StrategyEntry{Money(2), {}});
    joint.set(AgentId("c"), StrategyEntry{Money(4), {}});
    Outcome held = evaluate_mechanism(net, joint, Mechanism::cavallo);
    Money rebate_a = -held.payment_of(AgentId("a"));
    Money rebate_c = Money(3) - held.payment_of(AgentId("c"));
    c.require(rebate_a == Money(1), "withholding lifts a's rebate to 1");
    c.require(rebate_a > money_ratio(3, 5), "1 beats the truthful 3/5");
    c.require(rebate_c == money_ratio(2, 3), "withholding lifts c's rebate to 2/3");
    c.require(rebate_c > money_ratio(2, 5), "2/3 beats the truthful 2/5");
    c.report();
}

TEST_CASE("criterion 5") {
    Criterion c(5, "walk properties on 510 seeded markets");
    int checked = 0;
    for (int i = 0; i < 510 && c.ok; ++i) {
        const bool tree = i % 2 == 0;
        const int n = 2 + i % 11;  // agent counts 2..12
        SocialNetwork net = testing::random_instance(n, 777000 + i, tree, 20);
        const std::string tag = (tree ? "tree" : "graph") + std::string(" #") + std::to_string(i);

        DeviationSearchOptions opts;
        opts.degree_cap = 11;  // every invitation subset enumerated at n <= 12

        IrResult ir = check_ir(net, Mechanism::nrm, opts);
        c.require(ir.holds, tag + ": participation went negative");

        Outcome oc = truthful_outcome(net, Mechanism::nrm);
        c.require(check_non_deficit(oc), tag + ": deficit");

        IcResult ic = audit_ic(net, Mechanism::nrm, opts);
        c.require(ic.violations.empty(), tag + ": profitable deviation found");
        c.require(ic.sampled_agents.empty(), tag + ": enumeration was not exhaustive");

        Money front_row(0);
        for (const AgentId& nb : net.owner_neighbours())
            front_row = std::max(front_row, net.agent(nb).valuation);
        c.require(oc.social_welfare >= front_row, tag + ": welfare below the front row");
        ++checked;
    }
    c.require(checked == 510, "stopped after " + std::to_string(checked) + " markets");
    c.require(c.elapsed_s() < 300.0, "must finish inside 5 min");
    c.report();
}

TEST_CASE("criterion 6") {
    Criterion c(6, "surplus fades as markets grow");
    SweepConfig cfg;
    cfg.family = Family::tree;
    cfg.sizes = {10, 50, 200, 1000};
    cfg.trials = 50;
    cfg.law = ValuationLaw::parse("uniform:0:100");

    std::vector<BudgetPoint> pts = measure_budget_balance(budget_records(run_sweep(cfg), Mechanism::nrm));
    c.require(pts.size() == 4, "expected four size buckets");
    for (size_t i = 0; i < pts.size(); ++i) {
        c.require(pts[i].samples == 50, "bucket should hold 50 trials");
        if (i > 0)
            c.require(pts[i].mean_ratio < pts[i - 1].mean_ratio,
                      "mean ratio should fall from n=" + std::to_string(pts[i - 1].n) + " to n=" +
                          std::to_string(pts[i].n));
    }
    if (!pts.empty()) {
        c.require(pts.back().n == 1000, "largest bucket should be n=1000");
        c.require(pts.back().mean_ratio < money_ratio(1, 20), "ratio at n=1000 should be below 0.05");
        std::cout << "    ratio trend:";
        for (const BudgetPoint& p : pts)
            std::cout << "  n=" << p.n << " -> " << format_money(p.mean_ratio);
        std::cout << "\n";
    }
    c.require(c.elapsed_s() < 120.0, "must finish inside 2 min");
    c.report();
}

TEST_CASE("criterion 7") {
    Criterion c(7, "reachability oracle agreement");
    int mismatches = 0;
    for (int i = 0; i < 100; ++i) {
        const int n = 2 + i % 49;  // up to 50 agents
        SocialNetwork net = testing::random_instance(n, 424200 + i, /*tree=*/i % 3 == 0, 30);
        GeneratedGraph g = GeneratedGraph::build(net, StrategyProfile::truthful(net));
        for (const AgentId& id : g.vertex_ids()) {
            if (id == g.owner()) continue;
            std::vector<AgentId> fast = dominated_set(g, id);
            if (fast != oracle_dominated_set(g, id)) ++mismatches;
            // duality: k dominates x exactly when k sits on x's ancestor path
            for (const AgentId& member : fast)
                if (member != id) {
                    std::vector<AgentId> chain = ancestor_sequence(g, member);
                    if (std::find(chain.begin(), chain.end(), id) == chain.end()) ++mismatches;
                }
        }
    }
    c.require(mismatches == 0, std::to_string(mismatches) + " disagreements");
    c.report();
}

TEST_CASE("criterion 8") {
    Criterion c(8, "gatekeeper line trades welfare for safety");
    SocialNetwork net = fixtures::line_network();
    Outcome oc = truthful_outcome(net, Mechanism::nrm);
    c.require(oc.winner == AgentId("a"), "winner should be a, not the rich leaf");
    c.require(oc.social_welfare == Money(1), "welfare should be 1");
    c.require(efficiency_report(net).optimal_welfare == Money(10), "optimum should be 10");

    AuditReport rep = run_audit(net, Mechanism::nrm);
    c.require(rep.ir_holds, "participation should stay safe");
    c.require(rep.non_deficit, "books should stay balanced");
    c.require(rep.ic_violations.empty(), "no profitable deviation should exist");
    c.report();
}

TEST_CASE("criterion 9") {
    Criterion c(9, "seeded commands are byte-stable");
    const char* cli = std::getenv("NETREDIST_CLI");
    c.require(cli != nullptr, "NETREDIST_CLI not set (run through ctest)");
    if (cli) {
        namespace fs = std::filesystem;
        const fs::path dir = fs::temp_directory_path() / "netredist-accept";
        fs::create_directories(dir);
        const fs::path inst = dir / "instance.json";
        {
            SocialNetwork net = fixtures::disincentive_network();
            std::ofstream out(inst, std::ios::binary);
            out << serialize_instance(net, StrategyProfile::truthful(net));
        }
        const std::string q = std::string("\"") + cli + "\"";
        const fs::path csv_a = dir / "a.csv", csv_b = dir / "b.csv";
        const fs::path js_a = dir / "a.json", js_b = dir / "b.json";

        struct Step {
            std::string cmd;
            fs::path out_a, out_b;  // empty when only stdout matters
        };
        const std::string sweep_base =
            q + " sweep --family graph --sizes 6,12 --trials 5 --seed 7 --law uniform:0:30";
        std::vector<Step> steps{
            {q + " golden", {}, {}},
            {q + " run --input " + inst.string() + " --mechanism nrm --trace", {}, {}},
            {q + " run --input " + inst.string() + " --mechanism cavallo --json", {}, {}},
            {q + " audit --input " + inst.string() + " --mechanism cavallo", {}, {}},
            {sweep_base + " --format csv --out ", csv_a, csv_b},
            {sweep_base + " --format json --out ", js_a, js_b},
        };
        for (const Step& s : steps) {
            const bool file_step = !s.out_a.empty();
            CmdResult one = run_cmd(file_step ? s.cmd + s.out_a.string() : s.cmd);
            CmdResult two = run_cmd(file_step ? s.cmd + s.out_b.string() : s.cmd);
            c.require(one.status == two.status, "exit codes differ for: " + s.cmd);
            c.require(one.status >= 0 && one.status != 127, "command failed to launch: " + s.cmd);
            if (file_step) {
                std::string blob_a = slurp(s.out_a), blob_b = slurp(s.out_b);
                c.require(!blob_a.empty() && blob_a == blob_b, "output files differ for: " + s.cmd);
            } else {
                c.require(!one.output.empty() && one.output == two.output,
                          "stdout differs for: " + s.cmd);
            }
        }
        fs::remove_all(dir);
    }
    c.report();
}
