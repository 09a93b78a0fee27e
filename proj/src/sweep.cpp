#include "qsta/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "qsta/decomposition.hpp"
#include "qsta/distribution.hpp"
#include "qsta/ebit_model.hpp"

namespace qsta {

CUProvider make_cu_provider(const CuModel& model, std::size_t n, std::size_t m,
                            const DelayProfile& profile) {
    switch (model.type) {
        case CuModel::Type::Fixed:
            return CUProvider::abstract_delays(std::vector<ns_t>(m, model.t_cu_ns));
        case CuModel::Type::List:
            if (model.delays.size() != m)
                throw std::invalid_argument("CU delay list covers " +
                                            std::to_string(model.delays.size()) +
                                            " blocks, sweep coordinate needs " +
                                            std::to_string(m));
            return CUProvider::abstract_delays(model.delays);
        case CuModel::Type::Poly: {
            const double nd = static_cast<double>(n);
            const ns_t t = static_cast<ns_t>(std::llround(
                model.c1 * nd * static_cast<double>(profile.t_q1) +
                model.c2 * nd * nd * static_cast<double>(profile.t_q2)));
            return CUProvider::abstract_delays(std::vector<ns_t>(m, t));
        }
        case CuModel::Type::Import: {
            std::vector<std::string> paths;
            for (std::size_t i = 0; i < m; ++i)
                paths.push_back(model.import_dir + "/cu_" + std::to_string(i) + ".qc");
            return CUProvider::imported(paths);
        }
    }
    throw std::invalid_argument("unknown CU model");
}

namespace {

CuModel parse_cu_model(const nlohmann::json& j) {
    CuModel model;
    const std::string type = j.at("type").get<std::string>();
    if (type == "fixed") {
        model.type = CuModel::Type::Fixed;
        model.t_cu_ns = j.at("t_cu_ns").get<ns_t>();
    } else if (type == "list") {
        model.type = CuModel::Type::List;
        model.delays = j.at("delays_ns").get<std::vector<ns_t>>();
    } else if (type == "poly") {
        model.type = CuModel::Type::Poly;
        model.c1 = j.at("c1").get<double>();
        model.c2 = j.at("c2").get<double>();
    } else if (type == "import") {
        model.type = CuModel::Type::Import;
        model.import_dir = j.at("dir").get<std::string>();
    } else {
        throw std::invalid_argument("unknown cu_model type '" + type + "'");
    }
    return model;
}

}  // namespace

SweepConfig load_sweep_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open sweep config '" + path + "'");
    nlohmann::json j;
    in >> j;

    SweepConfig config;
    config.profiles = j.at("profiles").get<std::vector<std::string>>();
    for (const auto& name : j.at("designs").get<std::vector<std::string>>())
        config.designs.push_back(design_from_name(name));
    config.n_values = j.at("n_values").get<std::vector<std::size_t>>();
    if (j.contains("m_rule") && j.at("m_rule").is_number())
        config.m_fixed = j.at("m_rule").get<std::size_t>();
    config.cu_model = parse_cu_model(j.at("cu_model"));
    config.include_final_reset = j.value("include_final_reset", true);
    if (j.contains("output")) config.output_prefix = j.at("output").get<std::string>();
    if (j.contains("baseline_design"))
        config.baseline_design = design_from_name(j.at("baseline_design").get<std::string>());
    config.baseline_k = j.value("baseline_k", std::size_t{1});

    if (j.contains("distributed")) {
        const auto& dj = j.at("distributed");
        DistributedSweep dist;
        dist.k_values = dj.at("k_values").get<std::vector<std::size_t>>();
        for (std::size_t k : dist.k_values)
            if (k < 1 || k > 16)
                throw std::invalid_argument("k_values must lie in [1, 16]");
        if (dj.contains("t_ebit_values_ns")) {
            dist.t_ebit_values = dj.at("t_ebit_values_ns").get<std::vector<ns_t>>();
        } else {
            EbitLinkParams params;
            if (dj.contains("ebit_model")) {
                const auto tmp = dj.at("ebit_model").dump();
                // Reuse the file loader's key handling.
                nlohmann::json ej = nlohmann::json::parse(tmp);
                params.p_ht = ej.value("p_ht", params.p_ht);
                params.nu_h = ej.value("nu_h", params.nu_h);
                params.nu_t = ej.value("nu_t", params.nu_t);
                params.nu_o = ej.value("nu_o", params.nu_o);
                params.L0_km = ej.value("L0_km", params.L0_km);
                params.c_f_m_per_s = ej.value("c_f_m_per_s", params.c_f_m_per_s);
                params.tau_p_us = ej.value("tau_p_us", params.tau_p_us);
                params.tau_h_us = ej.value("tau_h_us", params.tau_h_us);
                params.tau_t_us = ej.value("tau_t_us", params.tau_t_us);
                params.tau_o_us = ej.value("tau_o_us", params.tau_o_us);
                params.tau_c_us = ej.value("tau_c_us", params.tau_c_us);
            }
            for (double d : dj.at("d_km_values").get<std::vector<double>>()) {
                params.d_km = d;
                dist.t_ebit_values.push_back(expected_ebit_time_ns(params));
            }
        }
        if (dist.k_values.empty() || dist.t_ebit_values.empty())
            throw std::invalid_argument("distributed sweep needs k_values and t_ebit values");
        config.distributed = std::move(dist);
    }
    if (config.profiles.empty() || config.designs.empty() || config.n_values.empty())
        throw std::invalid_argument("sweep needs non-empty profiles, designs and n_values");
    return config;
}

namespace {

struct Coordinate {
    std::size_t profile_index;
    DesignKind design;
    std::size_t n;
    std::size_t k;       // 0 = monolithic
    ns_t t_ebit = 0;
};

std::vector<Coordinate> enumerate(const SweepConfig& config, bool distributed) {
    std::vector<Coordinate> coords;
    for (std::size_t p = 0; p < config.profiles.size(); ++p)
        for (DesignKind design : config.designs)
            for (std::size_t n : config.n_values) {
                if (!distributed) {
                    coords.push_back({p, design, n, 0, 0});
                    continue;
                }
                for (std::size_t k : config.distributed->k_values)
                    for (ns_t t_ebit : config.distributed->t_ebit_values)
                        coords.push_back({p, design, n, k, t_ebit});
            }
    return coords;
}

SweepRecord evaluate(const SweepConfig& config, const DelayProfile& profile,
                     const Coordinate& coord) {
    const std::size_t m = config.m_for(coord.n);
    ShorDesignSpec spec =
        make_design_spec(coord.design, coord.n,
                         make_cu_provider(config.cu_model, coord.n, m, profile), m,
                         config.include_final_reset);

    ShorCircuit sc = coord.k == 0
                         ? build_design(spec)
                         : distribute(spec, DistributedLayout{coord.k, coord.t_ebit});
    const TimingReport report = shor_delay_decomposition(sc, profile);

    SweepRecord rec;
    rec.design = design_name(coord.design);
    rec.profile = profile.name;
    rec.n = coord.n;
    rec.m = m;
    rec.k = coord.k;
    rec.t_ebit_ns = coord.k == 0 ? 0 : coord.t_ebit;
    rec.t_C_ns = report.t_C;
    rec.t_H_ns = report.decomposition.t_H;
    rec.sum_CU_ns = report.decomposition.sum_CU;
    rec.delta_P_ns = report.decomposition.delta_P;
    rec.delta_P_M_ns = report.decomposition.delta_P_M;
    rec.delta_D_ns = report.decomposition.delta_D;
    rec.delta_D_M_ns = report.decomposition.delta_D_M;
    rec.idle_work_ns = report.idle_work;
    rec.qubits_total = sc.circuit.num_qubits();
    rec.ebits_used = coord.k == 0 ? 0 : m;
    rec.depth = report.depth;

    // Identity and bound re-verification at record time.
    if (rec.t_C_ns != rec.t_H_ns + rec.sum_CU_ns + rec.delta_P_ns + rec.delta_D_ns)
        throw std::logic_error("delay decomposition identity violated");
    if (rec.delta_P_M_ns < 0 || rec.delta_P_M_ns > report.bounds.delta_P_M_upper)
        throw std::logic_error("phase-processing mitigatable delay out of bounds");
    if (coord.k != 0 &&
        (rec.delta_D_M_ns < 0 || rec.delta_D_M_ns > report.bounds.delta_D_M_upper))
        throw std::logic_error("distribution mitigatable delay out of bounds");
    return rec;
}

std::vector<SweepRecord> run_sweep(const SweepConfig& config, bool distributed, bool parallel) {
    if (distributed && !config.distributed)
        throw std::invalid_argument("config has no distributed section");
    std::vector<DelayProfile> profiles;
    for (const std::string& entry : config.profiles) profiles.push_back(resolve_profile(entry));

    const std::vector<Coordinate> coords = enumerate(config, distributed);
    std::vector<SweepRecord> records(coords.size());

    if (!parallel) {
        for (std::size_t i = 0; i < coords.size(); ++i)
            records[i] = evaluate(config, profiles[coords[i].profile_index], coords[i]);
        return records;
    }

    std::atomic<bool> failed{false};
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(coords.size()); ++i) {
        if (failed.load(std::memory_order_relaxed)) continue;
        try {
            const auto idx = static_cast<std::size_t>(i);
            records[idx] = evaluate(config, profiles[coords[idx].profile_index], coords[idx]);
        } catch (...) {
#pragma omp critical
            {
                if (!failed.exchange(true)) error = std::current_exception();
            }
        }
    }
    if (error) std::rethrow_exception(error);
    return records;
}

}  // namespace

std::vector<SweepRecord> run_monolithic_sweep(const SweepConfig& config) {
    return run_sweep(config, false, true);
}
std::vector<SweepRecord> run_monolithic_sweep_serial(const SweepConfig& config) {
    return run_sweep(config, false, false);
}
std::vector<SweepRecord> run_distributed_sweep(const SweepConfig& config) {
    return run_sweep(config, true, true);
}
std::vector<SweepRecord> run_distributed_sweep_serial(const SweepConfig& config) {
    return run_sweep(config, true, false);
}

std::size_t optimal_channel_count(const std::vector<ns_t>& delays_by_k) {
    if (delays_by_k.empty()) throw std::invalid_argument("no delays given");
    std::size_t best = 0;
    for (std::size_t i = 1; i < delays_by_k.size(); ++i)
        if (delays_by_k[i] < delays_by_k[best]) best = i;
    return best + 1;
}

namespace {

// Key identifying a coordinate with one axis (the compared one) removed.
std::string coordinate_key(const SweepRecord& rec, bool drop_design, bool drop_k) {
    std::string key;
    if (!drop_design) key += rec.design;
    key += '|';
    key += rec.profile;
    key += '|';
    key += std::to_string(rec.n);
    key += '|';
    if (!drop_k) key += std::to_string(rec.k);
    key += '|';
    key += std::to_string(rec.t_ebit_ns);
    return key;
}

MetricPoint point_of(const SweepRecord& rec, double value, bool applicable = true) {
    MetricPoint p;
    p.design = rec.design;
    p.profile = rec.profile;
    p.n = rec.n;
    p.m = rec.m;
    p.k = rec.k;
    p.t_ebit_ns = rec.t_ebit_ns;
    p.value = value;
    p.applicable = applicable;
    return p;
}

}  // namespace

std::vector<MetricPoint> relative_reduction(const std::vector<SweepRecord>& records,
                                            DesignKind baseline_design) {
    const std::string baseline = design_name(baseline_design);
    std::map<std::string, ns_t> baseline_delay;
    for (const SweepRecord& rec : records)
        if (rec.design == baseline) baseline_delay[coordinate_key(rec, true, false)] = rec.t_C_ns;

    std::vector<MetricPoint> points;
    for (const SweepRecord& rec : records) {
        auto it = baseline_delay.find(coordinate_key(rec, true, false));
        if (it == baseline_delay.end())
            throw std::invalid_argument("baseline design missing for a sweep coordinate");
        const double base = static_cast<double>(it->second);
        points.push_back(point_of(rec, base == 0.0 ? 0.0 : (base - rec.t_C_ns) / base));
    }
    return points;
}

std::vector<MetricPoint> relative_reduction(const std::vector<SweepRecord>& records,
                                            std::size_t baseline_k) {
    std::map<std::string, ns_t> baseline_delay;
    for (const SweepRecord& rec : records)
        if (rec.k == baseline_k) baseline_delay[coordinate_key(rec, false, true)] = rec.t_C_ns;

    std::vector<MetricPoint> points;
    for (const SweepRecord& rec : records) {
        auto it = baseline_delay.find(coordinate_key(rec, false, true));
        if (it == baseline_delay.end())
            throw std::invalid_argument("baseline channel count missing for a sweep coordinate");
        const double base = static_cast<double>(it->second);
        points.push_back(point_of(rec, base == 0.0 ? 0.0 : (base - rec.t_C_ns) / base));
    }
    return points;
}

std::vector<MetricPoint> mitigation_fraction(const std::vector<SweepRecord>& records) {
    std::map<std::string, DelayProfile> profiles;
    std::vector<MetricPoint> points;
    for (const SweepRecord& rec : records) {
        auto [it, inserted] = profiles.try_emplace(rec.profile);
        if (inserted) it->second = resolve_profile(rec.profile);
        const DelayProfile& profile = it->second;

        ns_t bound = 0;
        ns_t realized = 0;
        if (rec.k == 0) {
            const PhaseMode mode = design_from_name(rec.design) == DesignKind::Regular
                                       ? PhaseMode::Quantum
                                       : PhaseMode::Classical;
            for (std::size_t i = 0; i + 1 < rec.m; ++i)
                bound += phase_block_delay(profile, mode, i);
            realized = rec.delta_P_M_ns;
        } else {
            bound = static_cast<ns_t>(rec.m - 1) *
                    distribution_block_delays(profile, rec.t_ebit_ns).gse_steady();
            realized = rec.delta_D_M_ns;
        }
        if (bound == 0) {
            points.push_back(point_of(rec, 0.0, false));
        } else {
            points.push_back(point_of(
                rec, static_cast<double>(bound - realized) / static_cast<double>(bound)));
        }
    }
    return points;
}

std::vector<Heatmap> compute_heatmaps(const std::vector<SweepRecord>& records) {
    // (profile, design) -> (n, t_ebit) -> k -> delay
    std::map<std::pair<std::string, std::string>,
             std::map<std::pair<std::size_t, ns_t>, std::map<std::size_t, ns_t>>>
        cells;
    for (const SweepRecord& rec : records) {
        if (rec.k == 0) continue;
        cells[{rec.profile, rec.design}][{rec.n, rec.t_ebit_ns}][rec.k] = rec.t_C_ns;
    }

    std::vector<Heatmap> maps;
    for (const auto& [group, grid] : cells) {
        Heatmap map;
        map.profile = group.first;
        map.design = group.second;
        std::set<std::size_t> ns;
        std::set<ns_t> ebits;
        for (const auto& [cell, _] : grid) {
            ns.insert(cell.first);
            ebits.insert(cell.second);
        }
        map.n_values.assign(ns.begin(), ns.end());
        map.t_ebit_values.assign(ebits.begin(), ebits.end());
        for (std::size_t n : map.n_values) {
            std::vector<std::size_t> row;
            for (ns_t t_ebit : map.t_ebit_values) {
                const auto& by_k = grid.at({n, t_ebit});
                std::vector<std::size_t> ks;
                std::vector<ns_t> delays;
                for (const auto& [k, delay] : by_k) {
                    ks.push_back(k);
                    delays.push_back(delay);
                }
                row.push_back(ks[optimal_channel_count(delays) - 1]);
            }
            map.optimal_k.push_back(std::move(row));
        }
        maps.push_back(std::move(map));
    }
    return maps;
}

namespace {

std::string format_fraction(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", value);
    return buf;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    return out;
}

}  // namespace

void emit_csv(const std::vector<SweepRecord>& records, const std::string& path) {
    std::ofstream out = open_out(path);
    out << "design,profile,n,m,k,t_ebit_ns,t_C_ns,t_H_ns,sum_CU_ns,delta_P_ns,delta_P_M_ns,"
           "delta_D_ns,delta_D_M_ns,idle_work_ns,qubits_total,ebits_used,depth\n";
    for (const SweepRecord& r : records)
        out << r.design << ',' << r.profile << ',' << r.n << ',' << r.m << ',' << r.k << ','
            << r.t_ebit_ns << ',' << r.t_C_ns << ',' << r.t_H_ns << ',' << r.sum_CU_ns << ','
            << r.delta_P_ns << ',' << r.delta_P_M_ns << ',' << r.delta_D_ns << ','
            << r.delta_D_M_ns << ',' << r.idle_work_ns << ',' << r.qubits_total << ','
            << r.ebits_used << ',' << r.depth << "\n";
}

void emit_metric_csv(const std::vector<MetricPoint>& points, const std::string& value_name,
                     const std::string& path) {
    std::ofstream out = open_out(path);
    out << "design,profile,n,m,k,t_ebit_ns," << value_name << "\n";
    for (const MetricPoint& p : points)
        out << p.design << ',' << p.profile << ',' << p.n << ',' << p.m << ',' << p.k << ','
            << p.t_ebit_ns << ',' << (p.applicable ? format_fraction(p.value) : "na") << "\n";
}

void emit_heatmap(const Heatmap& heatmap, const std::string& path) {
    std::ofstream out = open_out(path);
    out << "n_vs_t_ebit_ns";
    for (ns_t t : heatmap.t_ebit_values) out << ',' << t;
    out << "\n";
    for (std::size_t row = 0; row < heatmap.n_values.size(); ++row) {
        out << heatmap.n_values[row];
        for (std::size_t col = 0; col < heatmap.t_ebit_values.size(); ++col)
            out << ',' << heatmap.optimal_k[row][col];
        out << "\n";
    }
}

std::vector<std::string> run_sweep_to_files(const SweepConfig& config) {
    const bool distributed = config.distributed.has_value();
    const std::vector<SweepRecord> records =
        distributed ? run_distributed_sweep(config) : run_monolithic_sweep(config);

    std::vector<std::string> written;
    auto emit = [&](const std::string& suffix, auto&& writer) {
        const std::string path = config.output_prefix + suffix;
        writer(path);
        written.push_back(path);
    };

    emit("_records.csv", [&](const std::string& p) { emit_csv(records, p); });
    if (distributed) {
        emit("_reduction.csv", [&](const std::string& p) {
            emit_metric_csv(relative_reduction(records, config.baseline_k),
                            "reduction_vs_k" + std::to_string(config.baseline_k), p);
        });
    } else {
        emit("_reduction.csv", [&](const std::string& p) {
            emit_metric_csv(relative_reduction(records, config.baseline_design),
                            std::string("reduction_vs_") + design_name(config.baseline_design),
                            p);
        });
    }
    emit("_mitigation.csv",
         [&](const std::string& p) { emit_metric_csv(mitigation_fraction(records), "mitigation", p); });
    if (distributed) {
        for (const Heatmap& map : compute_heatmaps(records)) {
            emit("_heatmap_" + map.profile + "_" + map.design + ".csv",
                 [&](const std::string& p) { emit_heatmap(map, p); });
        }
    }
    return written;
}

}  // namespace qsta
