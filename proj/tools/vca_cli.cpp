// Command-line front end for the vertex-cover algebra engine. Talks to the
// engine exclusively through the C API in vca.h.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include "vca.h"

namespace {

constexpr int EXIT_ANALYSIS = 1;
constexpr int EXIT_USAGE = 2;
constexpr int EXIT_VERIFY = 3;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct GraphInput {
    std::string path;
    std::string gen;

    vca_graph* load() const {
        vca_graph* g = nullptr;
        vca_status st;
        if (!gen.empty())
            st = vca_graph_generate(gen.c_str(), &g);
        else
            st = vca_graph_from_text(slurp(path).c_str(), &g);
        if (st != VCA_OK) throw std::runtime_error(vca_last_error());
        return g;
    }
};

void add_graph_input(CLI::App* cmd, GraphInput& in) {
    auto* file = cmd->add_option("file", in.path, "graph file (text format)");
    auto* gen = cmd->add_option("--gen", in.gen,
                                "generator spec, e.g. \"cycle 6\" or \"caterpillar 4 6 6\"");
    file->excludes(gen);
    gen->excludes(file);
    cmd->callback([&in, cmd]() {
        if (in.path.empty() && in.gen.empty())
            throw CLI::ValidationError(cmd->get_name(), "need a graph file or --gen");
    });
}

int print_result(vca_status st, char* out) {
    if (st != VCA_OK) {
        std::cerr << "error: " << vca_last_error() << "\n";
        return EXIT_ANALYSIS;
    }
    std::cout << out;
    if (out[0] == '\0' || out[std::string(out).size() - 1] != '\n') std::cout << "\n";
    vca_string_free(out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"vertex-cover algebra toolkit"};
    app.require_subcommand(1);

    int kmax = 12, m_max = 4, k = 1;
    int workers = static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
    std::string format = "json";
    unsigned long long budget = 100000000ULL;
    std::string out_path;
    GraphInput gin;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "text"}));
    };

    auto* analyze = app.add_subcommand("analyze", "full combinatorial report");
    add_graph_input(analyze, gin);
    analyze->add_option("--kmax", kmax, "largest k for the Hilbert function");
    analyze->add_option("--m-max", m_max, "zero-divisor search depth");
    analyze->add_option("--workers", workers, "worker threads");
    add_format(analyze);

    auto* covers = app.add_subcommand("covers", "list basic k-covers");
    add_graph_input(covers, gin);
    covers->add_option("-k,--k", k, "cover degree")->check(CLI::PositiveNumber);
    add_format(covers);

    auto* gdim_cmd = app.add_subcommand("gdim", "graphical dimension with witness drawing");
    add_graph_input(gdim_cmd, gin);
    add_format(gdim_cmd);

    auto* hilbert = app.add_subcommand("hilbert", "basic-cover counts and dimension");
    add_graph_input(hilbert, gin);
    hilbert->add_option("--kmax", kmax, "largest k")->check(CLI::PositiveNumber);
    hilbert->add_option("--workers", workers, "worker threads");
    add_format(hilbert);

    auto* lattice = app.add_subcommand("lattice", "cover lattice of an unmixed graph");
    add_graph_input(lattice, gin);
    add_format(lattice);

    std::string hpath;
    auto* hyper = app.add_subcommand("hypergraph", "weighted hypergraph degree bounds");
    hyper->add_option("file", hpath, "hypergraph file")->required();
    hyper->add_option("--kmax", kmax, "largest k")->check(CLI::PositiveNumber);
    hyper->add_option("--budget", budget, "enumeration box budget");
    add_format(hyper);

    std::string gen_spec;
    unsigned long long gen_seed = 0;
    auto* gen = app.add_subcommand("gen", "write a generated graph");
    gen->add_option("spec", gen_spec, "generator spec, e.g. \"random 4 5 0.5 7\"")
        ->required();
    auto* seed_opt =
        gen->add_option("--seed", gen_seed, "seed for the random generators "
                                            "(appended to the spec)");
    gen->add_option("-o,--output", out_path, "output file (default stdout)");

    auto* verify = app.add_subcommand("verify", "run the acceptance suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : EXIT_USAGE;
    }

    try {
        if (verify->parsed()) {
            int failed = vca_verify(
                [](const char* line, void*) { std::cout << line << "\n"; }, nullptr);
            std::cout << (failed == 0 ? "verification passed"
                                      : "verification FAILED: " +
                                            std::to_string(failed) + " criteria")
                      << "\n";
            return failed == 0 ? 0 : EXIT_VERIFY;
        }

        if (gen->parsed()) {
            if (seed_opt->count() > 0) gen_spec += " " + std::to_string(gen_seed);
            vca_graph* g = nullptr;
            if (vca_graph_generate(gen_spec.c_str(), &g) != VCA_OK)
                throw std::runtime_error(vca_last_error());
            char* text = nullptr;
            vca_graph_to_text(g, &text);
            if (out_path.empty()) {
                std::cout << text;
            } else {
                std::ofstream out(out_path, std::ios::binary);
                out << text;
            }
            vca_string_free(text);
            vca_graph_free(g);
            return 0;
        }

        if (hyper->parsed()) {
            vca_hypergraph* h = nullptr;
            if (vca_hypergraph_from_text(slurp(hpath).c_str(), &h) != VCA_OK)
                throw std::runtime_error(vca_last_error());
            char* out = nullptr;
            vca_status st = vca_hypergraph_report_json(h, kmax, budget, &out);
            vca_hypergraph_free(h);
            return print_result(st, out);
        }

        vca_graph* g = gin.load();
        char* out = nullptr;
        vca_status st = VCA_ERR_INTERNAL;
        if (analyze->parsed())
            st = format == "text" ? vca_analyze_text(g, kmax, m_max, workers, &out)
                                  : vca_analyze_json(g, kmax, m_max, workers, &out);
        else if (covers->parsed()) {
            st = vca_covers_json(g, k, &out);
            if (st == VCA_OK && format == "text") {
                auto j = nlohmann::json::parse(out);
                vca_string_free(out);
                std::ostringstream text;
                text << j["count"].get<long long>() << " basic " << j["k"].get<int>()
                     << "-covers\n";
                for (const auto& c : j["covers"]) {
                    text << j["k"].get<int>();
                    for (const auto& v : c) text << " " << v.get<int>();
                    text << "\n";
                }
                std::string ts = text.str();
                out = static_cast<char*>(std::malloc(ts.size() + 1));
                std::memcpy(out, ts.c_str(), ts.size() + 1);
            }
        }
        else if (gdim_cmd->parsed())
            st = format == "text" ? vca_gdim_render(g, &out) : vca_gdim_json(g, &out);
        else if (hilbert->parsed())
            st = format == "text" ? vca_hilbert_text(g, kmax, workers, &out)
                                  : vca_hilbert_json(g, kmax, workers, &out);
        else if (lattice->parsed())
            st = vca_lattice_json(g, &out);
        vca_graph_free(g);
        return print_result(st, out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_ANALYSIS;
    }
}
