#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qsta/profile.hpp"
#include "qsta/shor_designs.hpp"

namespace qsta {

/// Parametric CU block content for sweeps. `Poly` spans both regimes the
/// analysis cares about: t_CU(n) = c1 * n * t_q1 + c2 * n^2 * t_q2.
struct CuModel {
    enum class Type { Fixed, List, Poly, Import };
    Type type = Type::Fixed;
    ns_t t_cu_ns = 0;          // Fixed
    std::vector<ns_t> delays;  // List, one per CU index
    double c1 = 1.0;           // Poly
    double c2 = 1.0;
    std::string import_dir;    // Import: <dir>/cu_<i>.qc
};

CUProvider make_cu_provider(const CuModel& model, std::size_t n, std::size_t m,
                            const DelayProfile& profile);

struct DistributedSweep {
    std::vector<std::size_t> k_values;
    std::vector<ns_t> t_ebit_values;
};

struct SweepConfig {
    std::vector<std::string> profiles;  // preset names or file paths
    std::vector<DesignKind> designs;
    std::vector<std::size_t> n_values;
    std::optional<std::size_t> m_fixed;  // absent: m = 2n
    CuModel cu_model;
    bool include_final_reset = true;
    std::optional<DistributedSweep> distributed;
    std::string output_prefix = "sweep";
    DesignKind baseline_design = DesignKind::Iterative;  // for relative reduction
    std::size_t baseline_k = 1;

    std::size_t m_for(std::size_t n) const { return m_fixed ? *m_fixed : 2 * n; }
};

SweepConfig load_sweep_config(const std::string& path);

/// One sweep coordinate's results. Monolithic rows carry k = 0 and
/// t_ebit_ns = 0. The identity t_C = t_H + sum_CU + delta_P + delta_D
/// and the mitigatable-delay bounds are re-checked when each record is
/// produced.
struct SweepRecord {
    std::string design;
    std::string profile;
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t k = 0;
    ns_t t_ebit_ns = 0;
    ns_t t_C_ns = 0;
    ns_t t_H_ns = 0;
    ns_t sum_CU_ns = 0;
    ns_t delta_P_ns = 0;
    ns_t delta_P_M_ns = 0;
    ns_t delta_D_ns = 0;
    ns_t delta_D_M_ns = 0;
    ns_t idle_work_ns = 0;
    std::size_t qubits_total = 0;
    std::size_t ebits_used = 0;
    std::size_t depth = 0;
};

/// Sweep drivers. The plain entry points evaluate coordinates in parallel
/// (OpenMP) and produce output identical to the *_serial references, which
/// the tests and the benchmark compare against.
std::vector<SweepRecord> run_monolithic_sweep(const SweepConfig& config);
std::vector<SweepRecord> run_monolithic_sweep_serial(const SweepConfig& config);
std::vector<SweepRecord> run_distributed_sweep(const SweepConfig& config);
std::vector<SweepRecord> run_distributed_sweep_serial(const SweepConfig& config);

/// Smallest k achieving the minimum delay; delays_by_k[i] is the delay
/// with k = i + 1 channels. A larger k wins only by strictly lowering the
/// delay.
std::size_t optimal_channel_count(const std::vector<ns_t>& delays_by_k);

struct MetricPoint {
    std::string design;
    std::string profile;
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t k = 0;
    ns_t t_ebit_ns = 0;
    double value = 0.0;
    bool applicable = true;
};

/// (t_baseline - t_C) / t_baseline against a baseline design (monolithic
/// comparisons) or a baseline channel count (distributed comparisons).
std::vector<MetricPoint> relative_reduction(const std::vector<SweepRecord>& records,
                                            DesignKind baseline_design);
std::vector<MetricPoint> relative_reduction(const std::vector<SweepRecord>& records,
                                            std::size_t baseline_k);

/// (bound - realized mitigatable delay) / bound per record; not applicable
/// when the bound is zero.
std::vector<MetricPoint> mitigation_fraction(const std::vector<SweepRecord>& records);

struct Heatmap {
    std::string profile;
    std::string design;
    std::vector<std::size_t> n_values;   // rows
    std::vector<ns_t> t_ebit_values;     // columns
    std::vector<std::vector<std::size_t>> optimal_k;  // [row][column]
};

/// Optimal-channel-count grids over (n, t_ebit), one per (profile, design).
std::vector<Heatmap> compute_heatmaps(const std::vector<SweepRecord>& records);

void emit_csv(const std::vector<SweepRecord>& records, const std::string& path);
void emit_metric_csv(const std::vector<MetricPoint>& points, const std::string& value_name,
                     const std::string& path);
void emit_heatmap(const Heatmap& heatmap, const std::string& path);

/// Runs the configured sweep and writes records, derived metrics and (for
/// distributed sweeps) heatmaps under config.output_prefix. Returns the
/// file paths written.
std::vector<std::string> run_sweep_to_files(const SweepConfig& config);

}  // namespace qsta
