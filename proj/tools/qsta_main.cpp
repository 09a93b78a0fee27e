#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qsta/decomposition.hpp"
#include "qsta/distribution.hpp"
#include "qsta/ebit_model.hpp"
#include "qsta/sweep.hpp"
#include "qsta/text_format.hpp"
#include "qsta/timing.hpp"

namespace {

using namespace qsta;

void print_basic_analysis(const Circuit& circuit, const DelayProfile& profile) {
    const Schedule schedule = asap_schedule(circuit, profile);
    std::cout << "circuit:      " << circuit.name() << "\n";
    std::cout << "qubits:       " << circuit.num_qubits() << "\n";
    std::cout << "clbits:       " << circuit.num_clbits() << "\n";
    std::cout << "instructions: " << circuit.size() << "\n";
    std::cout << "depth:        " << circuit_depth(circuit) << "\n";
    std::cout << "t_C:          " << schedule.makespan << " ns\n";

    const auto path = critical_path(circuit, profile);
    std::cout << "critical path (" << path.size() << " instructions):";
    for (std::size_t idx : path) {
        const Instruction& instr = circuit.instructions()[idx];
        std::cout << " " << (instr.opcode == Opcode::Macro ? instr.label
                                                           : opcode_name(instr.opcode));
    }
    std::cout << "\n";
}

void print_report(const TimingReport& report) {
    const DelayDecomposition& d = report.decomposition;
    std::cout << "t_C:          " << report.t_C << " ns\n";
    std::cout << "depth:        " << report.depth << "\n";
    std::cout << "t_H:          " << d.t_H << " ns\n";
    std::cout << "sum_CU:       " << d.sum_CU << " ns\n";
    std::cout << "delta_P:      " << d.delta_P << " ns (mitigatable " << d.delta_P_M
              << ", unavoidable " << d.delta_P_notM << ")\n";
    std::cout << "delta_P_M bound: " << report.bounds.delta_P_M_upper << " ns (relaxed "
              << report.bounds.delta_P_M_upper_relaxed << ")\n";
    if (report.distributed) {
        std::cout << "delta_D:      " << d.delta_D << " ns (mitigatable " << d.delta_D_M
                  << ", unavoidable " << d.delta_D_notM << ")\n";
        std::cout << "delta_D_M bound: " << report.bounds.delta_D_M_upper << " ns\n";
    }
    std::cout << "work idle:    " << report.idle_work << " ns\n";
}

struct BuildOptions {
    std::string design = "iterative";
    std::size_t n = 0;
    std::optional<std::size_t> m;
    std::string cu;
    std::string profile = "unit";
    bool no_final_reset = false;
};

void add_build_options(CLI::App* cmd, BuildOptions& opts, bool design_positional) {
    if (design_positional)
        cmd->add_option("design", opts.design,
                        "regular | regular_semiclassical | iterative | alternating")
            ->required();
    cmd->add_option("--n", opts.n, "work register width")->required();
    cmd->add_option("--m", opts.m, "data register width (default 2n)");
    cmd->add_option("--cu", opts.cu,
                    "CU content: fixed:<ns> | list:<ns,...> | poly:<c1>,<c2> | import:<dir>")
        ->required();
    cmd->add_option("--profile", opts.profile, "delay profile (preset name or file)");
    cmd->add_flag("--no-final-reset", opts.no_final_reset, "omit the last data-qubit reset");
}

CuModel parse_cu_option(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw CLI::ValidationError("--cu", "expected <kind>:<args>");
    const std::string kind = text.substr(0, colon);
    const std::string args = text.substr(colon + 1);
    CuModel model;
    if (kind == "fixed") {
        model.type = CuModel::Type::Fixed;
        model.t_cu_ns = std::stoll(args);
    } else if (kind == "list") {
        model.type = CuModel::Type::List;
        std::size_t pos = 0;
        while (pos < args.size()) {
            std::size_t used = 0;
            model.delays.push_back(std::stoll(args.substr(pos), &used));
            pos += used;
            if (pos < args.size() && args[pos] == ',') ++pos;
        }
    } else if (kind == "poly") {
        model.type = CuModel::Type::Poly;
        std::size_t used = 0;
        model.c1 = std::stod(args, &used);
        if (used >= args.size() || args[used] != ',')
            throw CLI::ValidationError("--cu", "poly needs c1,c2");
        model.c2 = std::stod(args.substr(used + 1));
    } else if (kind == "import") {
        model.type = CuModel::Type::Import;
        model.import_dir = args;
    } else {
        throw CLI::ValidationError("--cu", "unknown CU kind '" + kind + "'");
    }
    return model;
}

ShorDesignSpec spec_from_options(const BuildOptions& opts) {
    const DelayProfile profile = resolve_profile(opts.profile);
    const std::size_t m = opts.m.value_or(2 * opts.n);
    return make_design_spec(design_from_name(opts.design), opts.n,
                            make_cu_provider(parse_cu_option(opts.cu), opts.n, m, profile), m,
                            !opts.no_final_reset);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Static timing analysis for Shor order-finding circuit designs"};
    app.require_subcommand(1);

    // analyze
    std::string analyze_file, analyze_profile = "unit";
    bool analyze_report = false;
    auto* analyze = app.add_subcommand("analyze", "timing analysis of a circuit file");
    analyze->add_option("circuit", analyze_file, "circuit text file")->required();
    analyze->add_option("--profile", analyze_profile, "delay profile (preset name or file)");
    analyze->add_flag("--report", analyze_report, "include per-qubit idle times");

    // build
    BuildOptions build_opts;
    std::string build_output;
    bool build_report = false;
    auto* build = app.add_subcommand("build", "generate a monolithic design");
    add_build_options(build, build_opts, true);
    build->add_option("-o,--output", build_output, "write circuit text here (default stdout)");
    build->add_flag("--report", build_report, "print the timing report instead of the circuit");

    // distribute
    BuildOptions dist_opts;
    std::string dist_output;
    bool dist_report = false;
    std::size_t dist_k = 1;
    std::optional<ns_t> dist_t_ebit;
    std::string dist_model_file;
    double dist_d_km = 1.0;
    std::string dist_ebit_preset;
    auto* dist = app.add_subcommand("distribute", "generate a two-QPU distributed design");
    add_build_options(dist, dist_opts, true);
    dist->add_option("--k", dist_k, "ebit channel count")->required();
    auto* t_ebit_opt = dist->add_option("--t-ebit", dist_t_ebit, "ebit generation time in ns");
    auto* model_opt =
        dist->add_option("--ebit-model", dist_model_file, "ebit link model file (JSON)");
    dist->add_option("--d-km", dist_d_km, "link length for --ebit-model");
    auto* preset_opt = dist->add_option("--ebit-preset", dist_ebit_preset,
                                        "named fixed generation time");
    t_ebit_opt->excludes(model_opt)->excludes(preset_opt);
    model_opt->excludes(preset_opt);
    dist->add_option("-o,--output", dist_output, "write circuit text here (default stdout)");
    dist->add_flag("--report", dist_report, "print the timing report instead of the circuit");

    // sweep
    std::string sweep_config_file;
    bool sweep_serial = false;
    auto* sweep = app.add_subcommand("sweep", "run a design-space sweep from a config file");
    sweep->add_option("config", sweep_config_file, "sweep config (JSON)")->required();
    sweep->add_flag("--serial", sweep_serial, "use the serial reference evaluator");

    // ebit-time
    std::string ebit_model_file;
    double ebit_d_km = 1.0;
    auto* ebit = app.add_subcommand("ebit-time", "expected ebit generation time for a link");
    ebit->add_option("--model", ebit_model_file, "ebit link model file (JSON; default neutral atom)");
    ebit->add_option("--d-km", ebit_d_km, "link length in km")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) {
            const Circuit circuit = load_circuit_file(analyze_file);
            const DelayProfile profile = resolve_profile(analyze_profile);
            print_basic_analysis(circuit, profile);
            if (analyze_report) {
                const Schedule schedule = asap_schedule(circuit, profile);
                for (std::size_t q = 0; q < circuit.num_qubits(); ++q)
                    std::cout << "idle q" << q << ": "
                              << qubit_idle_time(circuit, schedule, q) << " ns\n";
            }
        } else if (*build) {
            const ShorCircuit sc = build_design(spec_from_options(build_opts));
            if (build_report) {
                print_report(shor_delay_decomposition(sc, resolve_profile(build_opts.profile)));
            } else if (build_output.empty()) {
                std::cout << serialize_circuit(sc.circuit);
            } else {
                save_circuit_file(sc.circuit, build_output);
            }
        } else if (*dist) {
            ns_t t_ebit = -1;
            if (dist_t_ebit) {
                t_ebit = *dist_t_ebit;
            } else if (!dist_model_file.empty()) {
                EbitLinkParams params = load_ebit_model_file(dist_model_file);
                params.d_km = dist_d_km;
                t_ebit = expected_ebit_time_ns(params);
            } else if (!dist_ebit_preset.empty()) {
                t_ebit = ebit_time_preset(dist_ebit_preset);
            } else {
                throw CLI::ValidationError("distribute",
                                           "need --t-ebit, --ebit-model or --ebit-preset");
            }
            const ShorCircuit sc =
                distribute(spec_from_options(dist_opts), DistributedLayout{dist_k, t_ebit});
            if (dist_report) {
                print_report(shor_delay_decomposition(sc, resolve_profile(dist_opts.profile)));
            } else if (dist_output.empty()) {
                std::cout << serialize_circuit(sc.circuit);
            } else {
                save_circuit_file(sc.circuit, dist_output);
            }
        } else if (*sweep) {
            SweepConfig config = load_sweep_config(sweep_config_file);
            if (sweep_serial) {
                const auto records = config.distributed ? run_distributed_sweep_serial(config)
                                                        : run_monolithic_sweep_serial(config);
                emit_csv(records, config.output_prefix + "_records.csv");
                std::cout << config.output_prefix + "_records.csv" << "\n";
            } else {
                for (const std::string& path : run_sweep_to_files(config))
                    std::cout << path << "\n";
            }
        } else if (*ebit) {
            EbitLinkParams params = ebit_model_file.empty()
                                        ? neutral_atom_link()
                                        : load_ebit_model_file(ebit_model_file);
            params.d_km = ebit_d_km;
            const double p = local_success_probability(params);
            const double p_e = end_to_end_success_probability(params);
            const AttemptTimes t = attempt_times(params);
            const double T_us = expected_ebit_time_us(params);
            std::printf("p      = %.6f\n", p);
            std::printf("p_e    = %.6f\n", p_e);
            std::printf("T_s    = %.3f us\n", t.success_us);
            std::printf("T_f    = %.3f us\n", t.failure_us);
            std::printf("T      = %.3f ms (%lld ns)\n", T_us / 1000.0,
                        static_cast<long long>(expected_ebit_time_ns(params)));
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
