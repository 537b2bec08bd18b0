// Command-line front end: d-separation tests, minimum separators, the
// brute-force oracle and random network generation over dsep-net/1 files.
//
// Exit codes: 0 success, 1 parse/precondition error, 2 not separable,
// 3 internal invariant breach.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dsep/dsep.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNotSeparable = 2;
constexpr int kExitInternal = 3;

dsep::NodeSet parse_list(const std::string& list) {
    dsep::NodeSet out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.insert(item);
    return out;
}

dsep::Dag load_network(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw dsep::ParseError("cannot open network file: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return dsep::parse_network(buffer.str());
}

void emit(const json& doc, bool pretty) {
    std::cout << (pretty ? doc.dump(2) : doc.dump()) << "\n";
}

json node_set_json(const dsep::NodeSet& s) {
    json out = json::array();
    for (const auto& id : s) out.push_back(id);
    return out;
}

struct QueryFlags {
    std::string graph_file;
    std::string x_list, y_list, z_list;
    bool pretty = false;
};

void add_query_flags(CLI::App* cmd, QueryFlags& flags, bool z_name_fixed) {
    cmd->add_option("-g,--graph", flags.graph_file, "network file (dsep-net/1)")->required();
    cmd->add_option("-x", flags.x_list, "comma-separated X nodes")->required();
    cmd->add_option("-y", flags.y_list, "comma-separated Y nodes")->required();
    if (z_name_fixed)
        cmd->add_option("--fixed", flags.z_list, "comma-separated fixed separator nodes");
    else
        cmd->add_option("-z", flags.z_list, "comma-separated conditioning nodes");
    cmd->add_flag("--pretty", flags.pretty, "indent the output");
}

int run_test(const QueryFlags& flags, const std::string& method) {
    const dsep::Dag g = load_network(flags.graph_file);
    const dsep::SeparationQuery q{parse_list(flags.x_list), parse_list(flags.y_list),
                                  parse_list(flags.z_list)};
    bool result = false;
    if (method == "direct") {
        result = dsep::d_separated_direct(g, q);
    } else if (method == "moral") {
        result = dsep::d_separated_moral(g, q);
    } else {
        const bool direct = dsep::d_separated_direct(g, q);
        const bool moral = dsep::d_separated_moral(g, q);
        if (direct != moral) {
            std::cerr << "internal error: d-separation procedures disagree (direct="
                      << direct << ", moral=" << moral << ")\n";
            return kExitInternal;
        }
        result = direct;
    }
    emit(json{{"d_separated", result}}, flags.pretty);
    return kExitOk;
}

int run_minsep(const QueryFlags& flags, bool weighted) {
    const dsep::Dag g = load_network(flags.graph_file);
    dsep::SeparatorRequest req{parse_list(flags.x_list), parse_list(flags.y_list),
                               parse_list(flags.z_list), weighted};
    dsep::SeparatorResult result;
    try {
        if (!weighted && req.fixed_z.empty() && req.x_set.size() == 1 &&
            req.y_set.size() == 1)
            result = dsep::minimum_d_separator(g, *req.x_set.begin(), *req.y_set.begin());
        else if (weighted)
            result = dsep::minimum_weight_d_separator(g, req);
        else
            result = dsep::minimum_d_separator_constrained(g, req);
    } catch (const dsep::NotSeparable&) {
        emit(json{{"not_separable", true}}, flags.pretty);
        return kExitNotSeparable;
    }
    emit(json{{"separator", node_set_json(result.separator)},
              {"size", result.size},
              {"weight", result.weight},
              {"flow", result.certificate_flow}},
         flags.pretty);
    return kExitOk;
}

int run_oracle(const QueryFlags& flags, bool weighted, int budget) {
    const dsep::Dag g = load_network(flags.graph_file);
    const dsep::SeparatorRequest req{parse_list(flags.x_list), parse_list(flags.y_list),
                                     parse_list(flags.z_list), weighted};
    dsep::OracleReport report;
    try {
        report = dsep::brute_force_minimum(g, req, budget);
    } catch (const dsep::NotSeparable&) {
        emit(json{{"not_separable", true}}, flags.pretty);
        return kExitNotSeparable;
    }
    json sets = json::array();
    for (const auto& s : report.all_minimum_sets) sets.push_back(node_set_json(s));
    emit(json{{"minimum_size", report.minimum_size},
              {"minimum_weight", report.minimum_weight},
              {"all_minimum_sets", sets},
              {"candidates_examined", report.candidates_examined}},
         flags.pretty);
    return kExitOk;
}

int run_random(int n, double p, unsigned seed, const std::string& cards, bool pretty) {
    dsep::RandomDagSpec spec;
    spec.n = n;
    spec.edge_prob = p;
    spec.seed = seed;
    if (!cards.empty()) {
        const auto comma = cards.find(',');
        if (comma == std::string::npos)
            throw dsep::ParseError("--cards expects MIN,MAX");
        spec.random_cards = true;
        spec.card_min = std::stoi(cards.substr(0, comma));
        spec.card_max = std::stoi(cards.substr(comma + 1));
    }
    std::cout << dsep::serialize_network(dsep::random_dag(spec), pretty) << "\n";
    return kExitOk;
}

}  // namespace

int cli_main(int argc, char** argv) {
    CLI::App app{"minimum d-separating sets in belief networks"};
    app.require_subcommand(1);

    QueryFlags test_flags;
    std::string method = "both";
    auto* test = app.add_subcommand("test", "decide whether Z d-separates X from Y");
    add_query_flags(test, test_flags, false);
    test->add_option("--method", method, "direct, moral or both")
        ->check(CLI::IsMember({"direct", "moral", "both"}));

    QueryFlags minsep_flags;
    bool minsep_weighted = false;
    auto* minsep = app.add_subcommand("minsep", "find a minimum d-separating set");
    add_query_flags(minsep, minsep_flags, true);
    minsep->add_flag("--weighted", minsep_weighted, "minimize total log2 state space");

    QueryFlags oracle_flags;
    bool oracle_weighted = false;
    int budget = 16;
    auto* oracle = app.add_subcommand("oracle", "brute-force all minimum separators");
    add_query_flags(oracle, oracle_flags, true);
    oracle->add_flag("--weighted", oracle_weighted, "minimize total log2 state space");
    oracle->add_option("--budget", budget, "max ancestral-set size to enumerate");

    int n = 0;
    double p = 0.0;
    unsigned seed = 0;
    std::string cards;
    bool random_pretty = false;
    auto* random = app.add_subcommand("random", "generate a random network document");
    random->add_option("-n", n, "node count")->required();
    random->add_option("-p", p, "forward-arc probability")->required();
    random->add_option("--seed", seed, "rng seed");
    random->add_option("--cards", cards, "random cardinality range MIN,MAX");
    random->add_flag("--pretty", random_pretty, "indent the output");

    try {
        app.parse(argc, argv);
        if (test->parsed()) return run_test(test_flags, method);
        if (minsep->parsed()) return run_minsep(minsep_flags, minsep_weighted);
        if (oracle->parsed()) return run_oracle(oracle_flags, oracle_weighted, budget);
        if (random->parsed()) return run_random(n, p, seed, cards, random_pretty);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}

int main(int argc, char** argv) { return cli_main(argc, argv); }
