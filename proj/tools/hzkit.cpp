#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "hz/campaign.hpp"
#include "hz/classify.hpp"
#include "hz/enumerate.hpp"
#include "hz/graph6.hpp"
#include "hz/json_io.hpp"
#include "hz/odelta.hpp"
#include "hz/oracle.hpp"

using namespace hz;
using nlohmann::json;

namespace {

void write_or_print(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open " + out_path + " for writing");
    out << text;
}

int emit_report(const VerificationReport& rep, const std::string& out_path, double wall_ms,
                bool dot_witnesses = false) {
    json j = rep.to_json();
    write_or_print(out_path, j.dump(2) + "\n");
    if (dot_witnesses) {
        std::string dots;
        for (const auto& [name, stats] : rep.checks)
            for (const auto& wit : stats.witnesses) {
                if (!wit.contains("graph6") || !wit.contains("coloring")) continue;
                SimpleGraph g = from_graph6(wit.at("graph6").get<std::string>());
                dots += "// " + name + "\n" + coloring_to_dot(coloring_from_json(g, wit.at("coloring")));
            }
        if (!dots.empty()) write_or_print(out_path.empty() ? "" : out_path + ".dot", dots);
    }
    std::cerr << rep.suite << ": " << rep.total_failures() << " failure(s), wall time "
              << static_cast<long>(wall_ms) << " ms\n";
    for (const auto& [name, stats] : rep.checks)
        std::cerr << "  " << name << ": pass " << stats.pass << ", vacuous " << stats.vacuous
                  << ", fail " << stats.fail << "\n";
    return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"edge-coloring structure toolkit"};
    app.require_subcommand(1);

    std::string input, out_path;
    bool as_json = false, as_dot = false, allow_slow = false;
    CampaignConfig cfg;

    auto add_io = [&](CLI::App* cmd, bool with_json = true) {
        cmd->add_option("--input", input, "graph6 input file");
        cmd->add_option("--out", out_path, "output path (default: stdout)");
        if (with_json) cmd->add_flag("--json", as_json, "JSON output");
    };

    // classify
    auto* c_classify = app.add_subcommand("classify", "classify graphs from a graph6 file");
    add_io(c_classify);

    // color
    auto* c_color = app.add_subcommand("color", "edge-color graphs from a graph6 file");
    std::string mode = "exact";
    c_color->add_option("--mode", mode, "exact | vizing | delta")
        ->check(CLI::IsMember({"exact", "vizing", "delta"}));
    c_color->add_option("--budget", cfg.budget, "search node budget");
    c_color->add_flag("--dot", as_dot, "also emit DOT");
    add_io(c_color);

    // gen-odelta
    auto* c_gen = app.add_subcommand("gen-odelta", "build a family member");
    int gen_delta = 4, gen_n1 = 3;
    c_gen->add_option("--delta", gen_delta, "maximum degree")->required();
    c_gen->add_option("--n1", gen_n1, "order of the 2-regular part")->required();
    c_gen->add_option("--out", out_path, "output path (default: stdout)");

    // enumerate
    auto* c_enum = app.add_subcommand("enumerate", "enumerate candidate graphs as graph6");
    c_enum->add_option("--max-n", cfg.max_n, "largest vertex count");
    c_enum->add_flag("--allow-slow", allow_slow, "permit n = 10");
    c_enum->add_option("--out", out_path, "output path (default: stdout)");

    // census
    auto* c_census = app.add_subcommand("census", "exhaustive classifier-vs-oracle census");
    c_census->add_option("--max-n", cfg.max_n, "largest vertex count");
    c_census->add_option("--budget", cfg.budget, "oracle node budget");
    c_census->add_option("--seed", cfg.seed, "campaign seed");
    c_census->add_option("--workers", cfg.workers, "worker threads (0 = hardware)");
    c_census->add_flag("--allow-slow", allow_slow, "permit n = 10");
    add_io(c_census, false);

    // verify
    auto* c_verify = app.add_subcommand("verify", "run a verification suite");
    std::string replay_path;
    c_verify->add_option("--suite", cfg.suite, "theorems | lemmas | census | odelta")
        ->check(CLI::IsMember({"theorems", "lemmas", "census", "odelta"}));
    c_verify->add_option("--seed", cfg.seed, "campaign seed");
    c_verify->add_option("--trials", cfg.trials, "instance count");
    c_verify->add_option("--max-n", cfg.max_n, "largest vertex count");
    c_verify->add_option("--budget", cfg.budget, "oracle node budget");
    c_verify->add_option("--samples", cfg.sample_count, "stable-coloring samples");
    c_verify->add_option("--workers", cfg.workers, "worker threads (0 = hardware)");
    c_verify->add_option("--replay", replay_path, "re-evaluate one witness JSON file");
    c_verify->add_flag("--allow-slow", allow_slow, "permit n = 10");
    c_verify->add_flag("--dot", as_dot, "emit DOT for witness colorings");
    c_verify->add_option("--out", out_path, "report path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        cfg.allow_slow = allow_slow;

        if (*c_classify) {
            if (input.empty()) {
                std::cerr << "classify: --input is required\n";
                return 2;
            }
            std::string text;
            for (const SimpleGraph& g : read_graph6_file(input)) {
                ClassLabel label = classify(g);
                if (as_json) {
                    json j = class_label_to_json(label);
                    j["core"] = degree_class_view_to_json(core(g));
                    text += j.dump() + "\n";
                } else {
                    text += to_string(label.value) + " (" + to_string(label.reason) + ")\n";
                }
            }
            write_or_print(out_path, text);
            return 0;
        }

        if (*c_color) {
            if (input.empty()) {
                std::cerr << "color: --input is required\n";
                return 2;
            }
            std::string text;
            for (const SimpleGraph& g : read_graph6_file(input)) {
                PartialColoring witness(g, 0);
                if (mode == "exact") {
                    OracleOptions opts;
                    opts.node_budget = cfg.budget;
                    OracleResult res = chromatic_index_exact(g, opts);
                    witness = res.witness;
                } else if (mode == "vizing") {
                    witness = vizing_plus_one_coloring(g);
                } else {
                    witness = delta_edge_color(g, nullptr, cfg.budget);
                }
                text += coloring_to_json(witness).dump() + "\n";
                if (as_dot) text += coloring_to_dot(witness);
            }
            write_or_print(out_path, text);
            return 0;
        }

        if (*c_gen) {
            ODeltaSpec spec;
            spec.delta = gen_delta;
            spec.n1 = gen_n1;
            SimpleGraph h1 = canonical_regular_graph(2, gen_n1);
            SimpleGraph h2 = canonical_regular_graph(gen_delta - 1 - gen_n1, gen_delta - 2);
            for (const auto& e : h1.edges()) spec.h1_edges.emplace_back(e.u, e.v);
            for (const auto& e : h2.edges()) spec.h2_edges.emplace_back(e.u, e.v);
            write_or_print(out_path, to_graph6(build_o_delta(spec)) + "\n");
            return 0;
        }

        if (*c_enum) {
            std::string text;
            enumerate_hz_candidates(
                cfg.max_n, [&](const SimpleGraph& g) { text += to_graph6(g) + "\n"; },
                allow_slow);
            write_or_print(out_path, text);
            return 0;
        }

        if (*c_census) {
            auto start = std::chrono::steady_clock::now();
            VerificationReport rep;
            if (!input.empty()) {
                auto graphs = read_graph6_file(input);
                rep = run_census(cfg, &graphs);
            } else {
                rep = run_census(cfg);
            }
            double ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start)
                            .count();
            return emit_report(rep, out_path, ms);
        }

        if (*c_verify) {
            if (!replay_path.empty()) {
                std::ifstream in(replay_path);
                if (!in) throw std::runtime_error("cannot open " + replay_path);
                json wit = json::parse(in);
                json res = replay_witness(wit);
                write_or_print(out_path, res.dump(2) + "\n");
                return res.value("outcome", "") == "fail" ? 1 : 0;
            }
            auto start = std::chrono::steady_clock::now();
            VerificationReport rep;
            if (cfg.suite == "census")
                rep = run_census(cfg);
            else if (cfg.suite == "theorems")
                rep = run_theorem_suite(cfg);
            else if (cfg.suite == "lemmas")
                rep = run_lemma_suite(cfg);
            else
                rep = run_odelta_suite(cfg);
            double ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start)
                            .count();
            return emit_report(rep, out_path, ms, as_dot);
        }
    } catch (const NotACandidateError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
