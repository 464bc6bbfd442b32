// Command-line front end: decide self-similarity of a union of translated
// Cantor sets, construct/enumerate admissible translation vectors, extract
// generating IFSs, and verify them numerically.
//
// Exit codes: 0 SelfSimilar / success, 1 NotSelfSimilar / verification
// failure, 2 SufficientOnly, 3 parse or validation error, 4 budget or
// memory-guard error, 5 internal error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cantor/admissibility.hpp"
#include "cantor/constructors.hpp"
#include "cantor/ifs.hpp"
#include "cantor/json_io.hpp"

namespace {

using nlohmann::json;

struct VectorArgs {
    int cap = 1;
    std::vector<std::string> entries;  // comma-separated digits, lowest index first
    std::string json_path;
};

void add_vector_options(CLI::App* cmd, VectorArgs& args) {
    cmd->add_option("-N,--alphabet", args.cap, "Alphabet parameter N (digits 0..N)");
    cmd->add_option("-t,--translate", args.entries,
                    "One translation entry as comma-separated digits, lowest index first "
                    "(t_0 = 0 is implicit); repeatable");
    cmd->add_option("--json", args.json_path, "Read the vector from a JSON file instead");
}

cantor::TranslationVector parse_vector(const VectorArgs& args) {
    if (!args.json_path.empty()) {
        std::ifstream in(args.json_path);
        if (!in) throw std::invalid_argument("cannot open " + args.json_path);
        json j;
        in >> j;
        return cantor::vector_from_json(j);
    }
    std::vector<cantor::DigitString> entries{cantor::DigitString({}, args.cap)};
    for (const auto& text : args.entries)
        entries.push_back(cantor::DigitString::parse(text, args.cap));
    return cantor::TranslationVector(args.cap, std::move(entries));
}

int run(int argc, char** argv) {
    CLI::App app{"Self-similarity of unions of a homogeneous symmetric Cantor set "
                 "with its translations"};
    app.require_subcommand(1);

    // check
    auto* check = app.add_subcommand("check", "Decide self-similarity of Gamma_t");
    VectorArgs check_args;
    add_vector_options(check, check_args);
    std::string regime = "below";
    bool cross_check = false;
    bool with_ifs = false;
    std::string dot_path;
    check->add_option("--regime", regime,
                      "'below' (beta < 1/(2N+1), exact) or 'between' (criterion sufficient only)")
        ->check(CLI::IsMember({"below", "between"}));
    check->add_flag("--cross-check", cross_check,
                    "Also run matrix nilpotency and the covering oracle and require agreement");
    check->add_flag("--ifs", with_ifs, "Append an extracted generating IFS on positive verdicts");
    check->add_option("--dot", dot_path, "Write the word graph G_t in DOT form to this path");

    // construct
    auto* construct = app.add_subcommand("construct", "Build an admissible vector for given m");
    int con_m = 1, con_cap = 1;
    construct->add_option("-m", con_m, "Number of nonzero translates")->required();
    construct->add_option("-N,--alphabet", con_cap, "Alphabet parameter N");

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "List all admissible vectors up to a depth");
    int enu_m = 1, enu_cap = 1, enu_tau = 2, enu_jobs = 1;
    std::uint64_t enu_budget = 20'000'000;
    bool enu_csv = false;
    enumerate->add_option("-m", enu_m, "Number of nonzero translates")->required();
    enumerate->add_option("-N,--alphabet", enu_cap, "Alphabet parameter N");
    enumerate->add_option("--tau-max", enu_tau, "Maximum digit depth")->required();
    enumerate->add_option("--budget", enu_budget, "Maximum candidate tuple count");
    enumerate->add_option("--jobs", enu_jobs, "Worker threads");
    enumerate->add_flag("--csv", enu_csv, "CSV output instead of JSON");

    // ifs
    auto* ifs_cmd = app.add_subcommand("ifs", "Extract a generating IFS for an admissible vector");
    VectorArgs ifs_args;
    add_vector_options(ifs_cmd, ifs_args);

    // verify
    auto* verify = app.add_subcommand("verify", "Numerically verify the extracted IFS");
    VectorArgs verify_args;
    add_vector_options(verify, verify_args);
    std::string beta_text = "1/4";
    int samples = 1000, depth = 12;
    std::uint64_t seed = 1;
    bool float_mode = false;
    double tolerance = 1e-9;
    verify->add_option("--beta", beta_text, "Rational beta as p/q, beta < 1/(2N+1)");
    verify->add_option("--samples", samples, "Sample point count");
    verify->add_option("--depth", depth, "Sample coding depth");
    verify->add_option("--seed", seed, "RNG seed");
    verify->add_flag("--float", float_mode, "Double-precision mode with tolerance");
    verify->add_option("--tolerance", tolerance, "Float-mode residual tolerance");

    // graph
    auto* graph = app.add_subcommand("graph", "Emit the word graph G_t in DOT form");
    VectorArgs graph_args;
    add_vector_options(graph, graph_args);
    std::string graph_out;
    graph->add_option("-o,--output", graph_out, "Output path (stdout when omitted)");

    CLI11_PARSE(app, argc, argv);

    if (check->parsed()) {
        auto t = parse_vector(check_args);
        auto r = regime == "below" ? cantor::BetaRegime::BelowCritical
                                   : cantor::BetaRegime::Between;
        cantor::Verdict v = cantor::decide_self_similar(t, r, cross_check);
        json out = cantor::to_json(v);
        if (!dot_path.empty() && !t.is_trivial()) {
            std::ofstream dot(dot_path);
            dot << cantor::graph_dot(cantor::build_graph(t));
        }
        if (with_ifs && v.decision == cantor::Decision::SelfSimilar) {
            auto side = v.admissible_side == "conjugate" ? *cantor::conjugate(t).vec : t;
            out["ifs"] = cantor::to_json(cantor::extract_ifs(side));
        }
        std::cout << out.dump(2) << '\n';
        switch (v.decision) {
            case cantor::Decision::SelfSimilar: return 0;
            case cantor::Decision::NotSelfSimilar: return 1;
            case cantor::Decision::SufficientOnly: return 2;
        }
    }

    if (construct->parsed()) {
        auto t = cantor::construct_admissible(con_m, con_cap);
        std::cout << cantor::to_json(t).dump(2) << '\n';
        return 0;
    }

    if (enumerate->parsed()) {
        auto list = cantor::enumerate_admissible(enu_m, enu_cap, enu_tau, enu_budget, enu_jobs);
        if (enu_csv) {
            std::cout << cantor::kCsvHeader << '\n';
            for (const auto& t : list) std::cout << cantor::to_csv_row(t, true) << '\n';
        } else {
            json out = json::array();
            for (const auto& t : list) out.push_back(cantor::to_json(t));
            std::cout << out.dump(2) << '\n';
        }
        return 0;
    }

    if (ifs_cmd->parsed()) {
        auto t = parse_vector(ifs_args);
        std::cout << cantor::to_json(cantor::extract_ifs(t)).dump(2) << '\n';
        return 0;
    }

    if (verify->parsed()) {
        auto t = parse_vector(verify_args);
        auto beta = cantor::parse_rational(beta_text);
        auto ifs = cantor::extract_ifs(t);
        auto report =
            cantor::verify_numeric(t, ifs, beta, samples, depth, seed, float_mode, tolerance);
        std::cout << cantor::to_json(report).dump(2) << '\n';
        return report.ok ? 0 : 1;
    }

    if (graph->parsed()) {
        auto t = parse_vector(graph_args);
        std::string dot = cantor::graph_dot(cantor::build_graph(t));
        if (graph_out.empty()) {
            std::cout << dot;
        } else {
            std::ofstream out(graph_out);
            out << dot;
        }
        return 0;
    }

    return 5;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const cantor::BudgetError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 5;
    }
}
