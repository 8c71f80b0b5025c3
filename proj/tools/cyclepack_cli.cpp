#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cyclepack/corpus.hpp"
#include "cyclepack/pipeline.hpp"

using namespace cyclepack;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::BadInput, "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) fail(ErrorKind::BadInput, "cannot write " + out_path);
    out << text << "\n";
}

Instance load(const std::string& path, const std::string& mode_override) {
    Instance inst = Instance::from_json(slurp(path));
    if (!mode_override.empty()) {
        if (mode_override != "vertex" && mode_override != "edge")
            fail(ErrorKind::BadInput, "mode must be vertex|edge");
        inst.mode = mode_override == "vertex" ? Mode::Vertex : Mode::Edge;
    }
    return inst;
}

Instance generate(const std::string& profile, uint64_t seed, int cycles) {
    if (profile == "theta") return Instance::from_built(make_theta(), Mode::Vertex, seed);
    if (profile == "k4") return Instance::from_built(make_k4(), Mode::Vertex, seed);
    if (profile == "six_nesting") return Instance::from_built(make_six_nesting(), Mode::Vertex, seed);
    if (profile == "equator")
        return Instance::from_built(make_equator().inst, Mode::Vertex, seed);
    if (profile.rfind("flower", 0) == 0)
        return Instance::from_built(make_flower(std::stoi(profile.substr(6))), Mode::Vertex,
                                    seed);
    if (profile.rfind("chain", 0) == 0)
        return Instance::from_built(make_chain(std::stoi(profile.substr(5))), Mode::Vertex,
                                    seed);
    if (profile.rfind("grid", 0) == 0) {
        // gridRxC, e.g. grid3x3
        auto body = profile.substr(4);
        auto x = body.find('x');
        if (x == std::string::npos) fail(ErrorKind::BadInput, "grid profile: gridRxC");
        return Instance::from_built(make_grid(std::stoi(body.substr(0, x)),
                                              std::stoi(body.substr(x + 1)), 2, seed),
                                    Mode::Vertex, seed);
    }
    if (profile == "nested") {
        NestedProfile p;
        if (cycles > 0) p.cycles = cycles;
        return Instance::from_built(gen_nested(p, seed), Mode::Vertex, seed);
    }
    fail(ErrorKind::BadInput, "unknown profile: " + profile);
}

int guarded(const std::function<void()>& body) {
    try {
        body();
        return 0;
    } catch (const Error& e) {
        std::cerr << "error [" << error_kind_name(e.kind()) << "]: " << e.what() << "\n";
        switch (e.kind()) {
            case ErrorKind::GuaranteeViolated:
            case ErrorKind::CheckerFailed:
            case ErrorKind::FeasibilityViolation:
            case ErrorKind::StructureInvariantViolated: return 2;
            default: return 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certified greedy LP rounding for cycle packing in sphere-embedded "
                 "planar graphs"};
    app.require_subcommand(1);

    std::string instance_path, out_path, mode, profile = "nested";
    uint64_t seed = 0;
    int budget = 5000, cycles = 0;
    bool with_oracle = false;

    auto add_io = [&](CLI::App* cmd, bool needs_instance = true) {
        if (needs_instance) cmd->add_option("--instance", instance_path)->required();
        cmd->add_option("--out", out_path);
        cmd->add_option("--mode", mode);
        cmd->add_option("--budget", budget);
        cmd->add_option("--seed", seed);
    };

    auto* gen = app.add_subcommand("gen", "generate an instance");
    gen->add_option("--profile", profile);
    gen->add_option("--cycles", cycles);
    add_io(gen, false);

    auto* solve = app.add_subcommand("solve", "solve the packing LP exactly");
    add_io(solve);

    auto* round = app.add_subcommand("round", "full rounding pipeline");
    round->add_flag("--oracle", with_oracle, "add brute-force nu/tau when small");
    add_io(round);

    auto* certify = app.add_subcommand("certify", "construct and check certificates");
    add_io(certify);

    auto* reduce = app.add_subcommand("reduce", "edge-to-vertex reduction");
    add_io(reduce);

    auto* oracle = app.add_subcommand("oracle", "brute-force nu and tau");
    add_io(oracle);

    auto* bench = app.add_subcommand("bench", "run the seeded corpus and summarize");
    bench->add_option("--out", out_path);

    CLI11_PARSE(app, argc, argv);

    return guarded([&] {
        PipelineOptions opts;
        opts.max_cycles = budget;
        if (gen->parsed()) {
            Instance inst = generate(profile, seed, cycles);
            if (!mode.empty() && mode == "edge") inst.mode = Mode::Edge;
            emit(out_path, inst.to_json());
        } else if (solve->parsed()) {
            opts.run_rounding = false;
            opts.run_certificates = false;
            Report rep = run_pipeline(load(instance_path, mode), opts);
            emit(out_path, rep.to_json());
        } else if (round->parsed()) {
            opts.run_oracle = with_oracle;
            Report rep = run_pipeline(load(instance_path, mode), opts);
            emit(out_path, rep.to_json());
        } else if (certify->parsed()) {
            Report rep = run_certify(load(instance_path, mode), opts);
            emit(out_path, rep.to_json());
        } else if (reduce->parsed()) {
            Instance red = run_reduce(load(instance_path, mode), opts);
            emit(out_path, red.to_json());
        } else if (oracle->parsed()) {
            opts.run_rounding = false;
            opts.run_certificates = false;
            opts.run_oracle = true;
            opts.oracle_required = true;
            Report rep = run_pipeline(load(instance_path, mode), opts);
            emit(out_path, rep.to_json());
        } else if (bench->parsed()) {
            auto corpus = build_corpus();
            std::ostringstream table;
            table << "name mode cycles lp packing ratio rule_mix ms\n";
            for (const CorpusEntry& entry : corpus) {
                auto t0 = std::chrono::steady_clock::now();
                PipelineOptions bopts;
                Report rep = run_pipeline(entry.instance, bopts);
                auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - t0)
                              .count();
                int singles = 0, thresholds = 0, fourcolors = 0;
                for (const auto& t : rep.trace) {
                    if (t.rule == "single") ++singles;
                    if (t.rule == "threshold") ++thresholds;
                    if (t.rule == "fourcolor") ++fourcolors;
                }
                Rational ratio = rep.packing.empty()
                                     ? Rational(0)
                                     : *rep.lp_value /
                                           Rational(static_cast<int>(rep.packing.size()));
                table << entry.instance.name << " " << rep.mode << " " << rep.num_cycles
                      << " " << to_pq(*rep.lp_value) << " " << rep.packing.size() << " "
                      << to_pq(ratio) << " s" << singles << "/t" << thresholds << "/f"
                      << fourcolors << " " << ms << "\n";
            }
            emit(out_path, table.str());
        }
    });
}
