#include "netredist/instance_io.hpp"

#include "netredist/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace netredist {

using nlohmann::json;

namespace {

[[noreturn]] void fail(InputErrorCode code, const std::string& detail) {
    throw MalformedInputError(code, detail);
}

std::string need_string(const json& j, const char* key, const std::string& where) {
    if (!j.contains(key)) fail(InputErrorCode::missing_field, where + " lacks '" + key + "'");
    if (!j[key].is_string()) fail(InputErrorCode::bad_value, where + " '" + key + "' must be a string");
    return j[key].get<std::string>();
}

Money need_money(const json& j, const char* key, const std::string& where) {
    if (!j.contains(key)) fail(InputErrorCode::missing_field, where + " lacks '" + key + "'");
    const json& v = j[key];
    if (v.is_number_integer()) return Money(static_cast<long long>(v.get<std::int64_t>()));
    if (v.is_string()) return parse_money(v.get<std::string>());
    fail(InputErrorCode::bad_money,
         where + " '" + key + "' must be an integer or an exact money string like \"2.5\" or \"2/5\"");
}

std::vector<AgentId> need_id_array(const json& j, const char* key, const std::string& where,
                                   bool required) {
    std::vector<AgentId> out;
    if (!j.contains(key)) {
        if (required) fail(InputErrorCode::missing_field, where + " lacks '" + key + "'");
        return out;
    }
    if (!j[key].is_array()) fail(InputErrorCode::bad_value, where + " '" + key + "' must be an array");
    for (const json& e : j[key]) {
        if (!e.is_string()) fail(InputErrorCode::bad_value, where + " '" + key + "' must hold strings");
        out.push_back(AgentId(e.get<std::string>()));
    }
    return out;
}

}  // namespace

ParsedInstance parse_instance(const std::string& text) {
    json root = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (root.is_discarded()) fail(InputErrorCode::syntax, "not valid JSON");
    if (!root.is_object()) fail(InputErrorCode::syntax, "top level must be an object");

    const AgentId owner(need_string(root, "owner", "instance"));
    if (!root.contains("agents")) fail(InputErrorCode::missing_field, "instance lacks 'agents'");
    if (!root["agents"].is_array()) fail(InputErrorCode::bad_value, "'agents' must be an array");

    struct RawAgent {
        Money valuation;
        std::vector<AgentId> declared;
    };
    std::map<AgentId, RawAgent> raw;
    for (const json& a : root["agents"]) {
        if (!a.is_object()) fail(InputErrorCode::bad_value, "agent entries must be objects");
        const AgentId id(need_string(a, "id", "agent"));
        const std::string where = "agent '" + id.value + "'";
        if (id == owner) fail(InputErrorCode::owner_conflict, where + " reuses the owner id");
        if (raw.count(id)) fail(InputErrorCode::duplicate_id, where + " declared twice");
        Money val = need_money(a, "valuation", where);
        if (val < 0) fail(InputErrorCode::negative_valuation, where + " has a negative valuation");
        std::vector<AgentId> nb = need_id_array(a, "neighbours", where, /*required=*/true);
        std::set<AgentId> seen;
        for (const AgentId& t : nb) {
            if (t == id) fail(InputErrorCode::self_edge, where + " lists itself");
            if (!seen.insert(t).second)
                fail(InputErrorCode::duplicate_edge, where + " lists '" + t.value + "' twice");
        }
        raw[id] = RawAgent{val, std::move(nb)};
    }

    std::vector<AgentId> owner_declared = need_id_array(root, "owner_neighbours", "instance",
                                                        /*required=*/false);
    {
        std::set<AgentId> seen;
        for (const AgentId& t : owner_declared) {
            if (t == owner) fail(InputErrorCode::self_edge, "owner lists itself");
            if (!seen.insert(t).second)
                fail(InputErrorCode::duplicate_edge, "owner lists '" + t.value + "' twice");
        }
    }

    // undirected declarations -> symmetric closure
    std::set<std::pair<AgentId, AgentId>> edges;  // normalized pairs, owner sorts like any id
    auto note_edge = [&](const AgentId& x, const AgentId& y) {
        edges.insert(x < y ? std::make_pair(x, y) : std::make_pair(y, x));
    };
    for (const AgentId& t : owner_declared) {
        if (!raw.count(t))
            fail(InputErrorCode::unknown_id, "owner neighbour '" + t.value + "' is not declared");
        note_edge(owner, t);
    }
    for (const auto& [id, ra] : raw)
        for (const AgentId& t : ra.declared) {
            if (t != owner && !raw.count(t))
                fail(InputErrorCode::unknown_id,
                     "agent '" + id.value + "' references undeclared '" + t.value + "'");
            note_edge(id, t);
        }

    std::vector<AgentId> owner_nb;
    std::map<AgentId, AgentInfo> agents;
    for (const auto& [id, ra] : raw) agents[id] = AgentInfo{ra.valuation, {}};
    for (const auto& [x, y] : edges) {
        if (x == owner)
            owner_nb.push_back(y);
        else if (y == owner)
            owner_nb.push_back(x);
        else {
            agents.at(x).neighbours.push_back(y);
            agents.at(y).neighbours.push_back(x);
        }
        if (x == owner || y == owner) {
            const AgentId& other = x == owner ? y : x;
            agents.at(other).neighbours.push_back(owner);
        }
    }
    std::sort(owner_nb.begin(), owner_nb.end());
    for (auto& [id, info] : agents) std::sort(info.neighbours.begin(), info.neighbours.end());

    ParsedInstance out{SocialNetwork::create(owner, std::move(owner_nb), std::move(agents)),
                       StrategyProfile{}, false};
    out.profile = StrategyProfile::truthful(out.network);

    if (root.contains("strategy")) {
        out.explicit_strategy = true;
        if (!root["strategy"].is_array()) fail(InputErrorCode::bad_value, "'strategy' must be an array");
        std::set<AgentId> listed;
        for (const json& s : root["strategy"]) {
            if (!s.is_object()) fail(InputErrorCode::bad_value, "strategy entries must be objects");
            const AgentId id(need_string(s, "id", "strategy entry"));
            const std::string where = "strategy for '" + id.value + "'";
            if (!out.network.has_agent(id)) fail(InputErrorCode::unknown_id, where + ": unknown agent");
            if (!listed.insert(id).second) fail(InputErrorCode::duplicate_id, where + " given twice");
            if (s.value("absent", false)) {
                out.profile.set_absent(id);
                continue;
            }
            Money bid = need_money(s, "reported_valuation", where);
            if (bid < 0) fail(InputErrorCode::negative_valuation, where + ": negative report");
            std::vector<AgentId> invited = need_id_array(s, "invited", where, /*required=*/true);
            std::sort(invited.begin(), invited.end());
            invited.erase(std::unique(invited.begin(), invited.end()), invited.end());
            const auto& true_nb = out.network.agent(id).neighbours;
            for (const AgentId& t : invited)
                if (!std::binary_search(true_nb.begin(), true_nb.end(), t))
                    fail(InputErrorCode::invite_not_neighbour,
                         where + " invites non-neighbour '" + t.value + "'");
            out.profile.set(id, StrategyEntry{bid, std::move(invited)});
        }
    }
    return out;
}

ParsedInstance parse_instance_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(InputErrorCode::syntax, "cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

std::string serialize_instance(const SocialNetwork& net, const StrategyProfile& profile) {
    json root;
    root["owner"] = net.owner().value;
    json agents = json::array();
    for (const auto& [id, info] : net.agents()) {
        json a;
        a["id"] = id.value;
        a["valuation"] = format_money(info.valuation);
        json nb = json::array();
        for (const AgentId& t : info.neighbours) nb.push_back(t.value);
        a["neighbours"] = nb;
        agents.push_back(a);
    }
    root["agents"] = agents;
    json onb = json::array();
    for (const AgentId& t : net.owner_neighbours()) onb.push_back(t.value);
    root["owner_neighbours"] = onb;

    json strat = json::array();
    for (const auto& [id, info] : net.agents()) {
        json s;
        s["id"] = id.value;
        const std::optional<StrategyEntry>* rec = profile.find(id);
        if (!rec || !*rec) {
            s["absent"] = true;
        } else {
            s["reported_valuation"] = format_money((*rec)->reported_valuation);
            json inv = json::array();
            for (const AgentId& t : (*rec)->invited) inv.push_back(t.value);
            s["invited"] = inv;
        }
        strat.push_back(s);
    }
    root["strategy"] = strat;
    return root.dump(2) + "\n";
}

std::string format_outcome(const Outcome& outcome, bool with_trace) {
    std::ostringstream out;
    out << "winner: " << (outcome.winner ? outcome.winner->value : "(none)") << "\n";
    out << "social_welfare: " << format_money(outcome.social_welfare) << "\n";
    out << "surplus: " << format_money(outcome.surplus) << "\n";
    out << "payments:\n";
    for (const auto& [id, amount] : outcome.payments)
        out << "  " << id.value << ": " << format_money(amount) << "\n";
    if (with_trace && !outcome.trace.empty()) {
        out << "trace:\n";
        int step = 0;
        for (const StepRecord& rec : outcome.trace) {
            ++step;
            out << "  step " << step << ": ancestor " << rec.ancestor.value << ", required_payment "
                << format_money(rec.required_payment) << ", prev "
                << format_money(rec.prev_required_payment) << "\n";
            for (const AgentId& k : rec.block)
                out << "    R_" << k.value << " = " << format_money(rec.rebates.at(k)) << "  (n_"
                    << k.value << " = " << rec.block_sizes.at(k) << ", S_" << k.value << " = "
                    << format_money(rec.counterfactual_surplus.at(k)) << ")\n";
            out << "    step_surplus = " << format_money(rec.step_surplus) << "\n";
            if (rec.allocated_here)
                out << "    allocated: " << rec.ancestor.value << " takes the item\n";
        }
    }
    return out.str();
}

namespace {

json money_map_json(const std::map<AgentId, Money>& m) {
    json out = json::object();
    for (const auto& [id, v] : m) out[id.value] = format_money(v);
    return out;
}

}  // namespace

std::string outcome_json(const Outcome& outcome, bool with_trace) {
    json root;
    root["winner"] = outcome.winner ? json(outcome.winner->value) : json(nullptr);
    root["social_welfare"] = format_money(outcome.social_welfare);
    root["surplus"] = format_money(outcome.surplus);
    json pay = json::object();
    for (const auto& [id, amount] : outcome.payments) pay[id.value] = format_money(amount);
    root["payments"] = pay;
    if (with_trace) {
        json steps = json::array();
        for (const StepRecord& rec : outcome.trace) {
            json s;
            s["ancestor"] = rec.ancestor.value;
            s["required_payment"] = format_money(rec.required_payment);
            s["prev_required_payment"] = format_money(rec.prev_required_payment);
            json block = json::array();
            for (const AgentId& k : rec.block) block.push_back(k.value);
            s["block"] = block;
            json sizes = json::object();
            for (const auto& [id, sz] : rec.block_sizes) sizes[id.value] = sz;
            s["block_sizes"] = sizes;
            s["counterfactual_surplus"] = money_map_json(rec.counterfactual_surplus);
            s["rebates"] = money_map_json(rec.rebates);
            s["step_surplus"] = format_money(rec.step_surplus);
            s["allocated_here"] = rec.allocated_here;
            steps.push_back(s);
        }
        root["trace"] = steps;
    }
    return root.dump(2) + "\n";
}

std::string format_audit(const AuditReport& report) {
    std::ostringstream out;
    out << "mechanism: " << to_string(report.mechanism) << "\n";
    out << "individual_rationality: " << (report.ir_holds ? "PASS" : "FAIL");
    if (report.ir_witness) {
        out << "  (agent " << report.ir_witness->agent.value << ", invited {";
        for (size_t i = 0; i < report.ir_witness->invited.size(); ++i)
            out << (i ? " " : "") << report.ir_witness->invited[i].value;
        out << "}, utility " << format_money(report.ir_witness->utility) << ")";
    }
    out << "\n";
    out << "non_deficit: " << (report.non_deficit ? "PASS" : "FAIL") << "  (surplus "
        << format_money(report.surplus) << ")\n";
    out << "incentive_compatibility: "
        << (report.ic_violations.empty() ? "PASS" : "FAIL") << "  ("
        << report.ic_violations.size() << " profitable deviation"
        << (report.ic_violations.size() == 1 ? "" : "s") << ")\n";
    for (const IcViolation& v : report.ic_violations) {
        out << "  agent " << v.deviation.agent.value << ": report "
            << format_money(v.deviation.reported_valuation) << ", invite {";
        for (size_t i = 0; i < v.deviation.invited.size(); ++i)
            out << (i ? " " : "") << v.deviation.invited[i].value;
        out << "} -> utility " << format_money(v.deviant_utility) << " (truthful "
            << format_money(v.truthful_utility) << ")\n";
    }
    out << "efficiency: welfare " << format_money(report.efficiency.mechanism_welfare)
        << ", neighbour_baseline " << format_money(report.efficiency.neighbour_baseline_welfare)
        << ", optimal " << format_money(report.efficiency.optimal_welfare) << ", dominates_baseline "
        << (report.efficiency.dominates_baseline ? "yes" : "no") << "\n";
    out << "budget_ratio: " << format_money(report.budget_ratio) << "\n";
    out << "sampled_agents:";
    if (report.sampled_agents.empty())
        out << " (none)";
    else
        for (const AgentId& id : report.sampled_agents) out << " " << id.value;
    out << "\n";
    out << "verdict: " << (report.clean() ? "CLEAN" : "VIOLATIONS FOUND") << "\n";
    return out.str();
}

std::string sweep_csv(const std::vector<SweepRecord>& records) {
    std::ostringstream out;
    out << "n,trial,mechanism,surplus,social_welfare,optimal_welfare,winner_depth,runtime_ms\n";
    for (const SweepRecord& r : records)
        out << r.n << ',' << r.trial << ',' << to_string(r.mechanism) << ','
            << format_money(r.surplus) << ',' << format_money(r.social_welfare) << ','
            << format_money(r.optimal_welfare) << ',' << r.winner_depth << ',' << r.runtime_ms
            << "\n";
    return out.str();
}

std::string sweep_json(const std::vector<SweepRecord>& records) {
    json arr = json::array();
    for (const SweepRecord& r : records) {
        json e;
        e["n"] = r.n;
        e["trial"] = r.trial;
        e["mechanism"] = to_string(r.mechanism);
        e["surplus"] = format_money(r.surplus);
        e["social_welfare"] = format_money(r.social_welfare);
        e["optimal_welfare"] = format_money(r.optimal_welfare);
        e["winner_depth"] = r.winner_depth;
        e["runtime_ms"] = r.runtime_ms;
        arr.push_back(e);
    }
    return arr.dump(2) + "\n";
}

}  // namespace netredist
