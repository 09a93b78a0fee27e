// Acceptance suite: one line per criterion, non-zero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qsta/decomposition.hpp"
#include "qsta/distribution.hpp"
#include "qsta/ebit_model.hpp"
#include "qsta/graph.hpp"
#include "qsta/shor_designs.hpp"
#include "qsta/sweep.hpp"
#include "qsta/timing.hpp"
#include "support/oracles.hpp"

using namespace qsta;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;

    void fail(const std::string& why) {
        passed = false;
        if (!detail.empty()) detail += "; ";
        detail += why;
    }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

CUProvider fixed_cu(ns_t t, std::size_t m) {
    return CUProvider::abstract_delays(std::vector<ns_t>(m, t));
}

// 1. circuit_delay (per-bit list algorithm) vs. the explicit-graph oracle.
Outcome criterion_oracle_equivalence() {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(20250809);
    std::size_t checked = 0;
    for (int round = 0; round < 1000; ++round) {
        const Circuit c = qsta::testing::random_circuit(rng, 10, 4, 100);
        const DelayProfile p = qsta::testing::random_profile(rng);
        const ns_t fast = circuit_delay(c, p);
        const ns_t exact = longest_path_oracle(build_weighted_graph(c, p)).delay;
        if (fast != exact) {
            out.fail("mismatch at round " + std::to_string(round) + ": " +
                     std::to_string(fast) + " vs " + std::to_string(exact));
            break;
        }
        ++checked;
    }
    const double elapsed = seconds_since(start);
    if (elapsed >= 10.0) out.fail("runtime " + std::to_string(elapsed) + " s exceeds 10 s");
    out.detail = std::to_string(checked) + " circuits in " + std::to_string(elapsed) + " s";
    return out;
}

// 2. Register sizes, CU block count, phase-rotation count for all designs.
Outcome criterion_design_structure() {
    Outcome out;
    for (std::size_t n = 2; n <= 8; ++n) {
        const std::size_t m = 2 * n;
        const struct {
            DesignKind kind;
            std::size_t qubits;
        } expectations[] = {
            {DesignKind::Regular, n + m},
            {DesignKind::RegularSemiclassical, n + m},
            {DesignKind::Iterative, n + 1},
            {DesignKind::Alternating, n + 2},
        };
        for (const auto& e : expectations) {
            const ShorCircuit sc = build_design(make_design_spec(e.kind, n, fixed_cu(9, m), m));
            std::size_t cu_blocks = 0, rotations = 0, measures = 0;
            std::string last_cu_tag;
            for (const Instruction& instr : sc.circuit.instructions()) {
                if (instr.tag.rfind("cu:", 0) == 0 && instr.tag != last_cu_tag) {
                    ++cu_blocks;
                    last_cu_tag = instr.tag;
                }
                if (instr.opcode == Opcode::P) ++rotations;
                if (instr.opcode == Opcode::Measure) ++measures;
            }
            if (sc.circuit.num_qubits() != e.qubits)
                out.fail(std::string(design_name(e.kind)) + " n=" + std::to_string(n) +
                         " qubits " + std::to_string(sc.circuit.num_qubits()));
            if (cu_blocks != m)
                out.fail(std::string(design_name(e.kind)) + " CU blocks " +
                         std::to_string(cu_blocks));
            if (rotations != m * (m - 1) / 2)
                out.fail(std::string(design_name(e.kind)) + " rotations " +
                         std::to_string(rotations));
            if (measures != m)
                out.fail(std::string(design_name(e.kind)) + " measures " +
                         std::to_string(measures));
        }
    }
    if (out.passed) out.detail = "n in {2..8}, all four designs";
    return out;
}

// 3. Depth equality between alternating and semiclassical designs.
Outcome criterion_depth_equality() {
    Outcome out;
    std::mt19937_64 rng(33);
    std::uniform_int_distribution<ns_t> dur(1, 5000);
    std::size_t cells = 0;
    for (std::size_t n = 2; n <= 8; ++n) {
        const std::size_t m = 2 * n;
        std::vector<ns_t> varied(m);
        for (ns_t& d : varied) d = dur(rng);
        // Arithmetic-style explicit content: the work-register chain
        // dominates the control chain, as in compiled multiplier blocks.
        std::vector<Circuit> subs;
        for (std::size_t i = 0; i < m; ++i) {
            Circuit sub("cu", n + 1, 0);
            for (std::size_t w = 0; w < n; ++w) sub.append(make_cx(0, 1 + w));
            for (std::size_t r = 0; r < 3 * n; ++r)
                sub.append(make_cx(1 + (r % n), 1 + ((r + 1) % n)));
            for (std::size_t w = 0; w < n; ++w) sub.append(make_p(0.5, 1 + w));
            subs.push_back(std::move(sub));
        }
        const CUProvider providers[] = {fixed_cu(13, m), CUProvider::abstract_delays(varied),
                                        CUProvider::explicit_circuits(std::move(subs))};
        for (const CUProvider& provider : providers) {
            const ShorCircuit alt = build_alternating(
                make_design_spec(DesignKind::Alternating, n, provider, m));
            const ShorCircuit semi = build_regular_semiclassical(
                make_design_spec(DesignKind::RegularSemiclassical, n, provider, m));
            const std::size_t da = circuit_depth(alt.circuit);
            const std::size_t ds = circuit_depth(semi.circuit);
            if (da != ds)
                out.fail("n=" + std::to_string(n) + ": " + std::to_string(da) +
                         " != " + std::to_string(ds));
            ++cells;
        }
    }
    if (out.passed) out.detail = std::to_string(cells) + " (n, provider) cells";
    return out;
}

// 4. Exact closed form under the zero-idle condition, m up to 128.
Outcome criterion_closed_form() {
    Outcome out;
    const DelayProfile profiles[] = {preset_profile("heron_r1_torino"),
                                     preset_profile("neutral_atom")};
    std::size_t checked = 0;
    for (const DelayProfile& profile : profiles) {
        for (std::size_t m = 1; m <= 128; m += (m < 16 ? 1 : 7)) {
            const std::size_t n = 3;
            const ns_t t_cu = phase_block_delay(profile, PhaseMode::Classical, m) + 1;
            const auto spec_a =
                make_design_spec(DesignKind::Alternating, n, fixed_cu(t_cu, m), m);
            if (!check_alternating_zero_idle(spec_a, profile).ok) {
                out.fail("zero-idle precondition failed at m=" + std::to_string(m));
                continue;
            }
            const ns_t expected = profile.t_q1 + static_cast<ns_t>(m) * t_cu +
                                  phase_block_delay(profile, PhaseMode::Classical, m - 1);
            const ns_t alt = circuit_delay(build_alternating(spec_a).circuit, profile);
            const auto spec_s =
                make_design_spec(DesignKind::RegularSemiclassical, n, fixed_cu(t_cu, m), m);
            const ns_t semi =
                circuit_delay(build_regular_semiclassical(spec_s).circuit, profile);
            if (alt != expected)
                out.fail("alternating m=" + std::to_string(m) + ": " + std::to_string(alt) +
                         " != " + std::to_string(expected));
            if (semi != expected)
                out.fail("semiclassical m=" + std::to_string(m) + ": " + std::to_string(semi) +
                         " != " + std::to_string(expected));
            ++checked;
        }
    }
    if (out.passed) out.detail = std::to_string(checked) + " (profile, m) points, exact";
    return out;
}

// 5. Alternating vs iterative reduction plateau near 50% with short CUs.
Outcome criterion_fifty_percent_plateau() {
    Outcome out;
    const DelayProfile profile = preset_profile("neutral_atom");
    double lo = 1.0, hi = 0.0;
    for (std::size_t m = 16; m <= 128; ++m) {
        const std::size_t n = 4;
        const ns_t t_cu = 1'000;  // 1 us, far below the 20 ms phase blocks
        const ns_t iter = circuit_delay(
            build_iterative(make_design_spec(DesignKind::Iterative, n, fixed_cu(t_cu, m), m))
                .circuit,
            profile);
        const ns_t alt = circuit_delay(
            build_alternating(make_design_spec(DesignKind::Alternating, n, fixed_cu(t_cu, m), m))
                .circuit,
            profile);
        const double reduction =
            (static_cast<double>(iter) - static_cast<double>(alt)) / static_cast<double>(iter);
        lo = std::min(lo, reduction);
        hi = std::max(hi, reduction);
        if (reduction < 0.45 || reduction > 0.55)
            out.fail("m=" + std::to_string(m) + " reduction " + std::to_string(reduction));
    }
    std::ostringstream detail;
    detail << "reduction in [" << lo << ", " << hi << "] over m in {16..128}";
    if (out.passed) out.detail = detail.str();
    return out;
}

// 6. Design delay ordering and k-monotonicity over a full sweep grid.
Outcome criterion_delay_ordering() {
    Outcome out;

    SweepConfig mono;
    mono.profiles = {"heron_r1_torino", "neutral_atom", "forte"};
    mono.designs = {DesignKind::RegularSemiclassical, DesignKind::Alternating,
                    DesignKind::Iterative};
    mono.n_values = {2, 3, 4, 5, 6, 7, 8};
    mono.cu_model.type = CuModel::Type::Poly;
    mono.cu_model.c1 = 1.0;
    mono.cu_model.c2 = 1.0;
    const auto mono_records = run_monolithic_sweep(mono);

    auto delay_at = [](const std::vector<SweepRecord>& records, const std::string& design,
                       const std::string& profile, std::size_t n, std::size_t k,
                       ns_t t_ebit) -> ns_t {
        for (const SweepRecord& r : records)
            if (r.design == design && r.profile == profile && r.n == n && r.k == k &&
                r.t_ebit_ns == t_ebit)
                return r.t_C_ns;
        return -1;
    };

    std::size_t coordinates = 0;
    for (const std::string& profile : mono.profiles)
        for (std::size_t n : mono.n_values) {
            const ns_t semi = delay_at(mono_records, "regular_semiclassical", profile, n, 0, 0);
            const ns_t alt = delay_at(mono_records, "alternating", profile, n, 0, 0);
            const ns_t iter = delay_at(mono_records, "iterative", profile, n, 0, 0);
            if (!(semi <= alt && alt <= iter))
                out.fail("ordering violated at " + profile + " n=" + std::to_string(n));
            ++coordinates;
        }

    SweepConfig dist = mono;
    dist.profiles = {"heron_r1_torino", "neutral_atom"};
    dist.n_values = {2, 4, 6};
    DistributedSweep ds;
    ds.k_values = {1, 2, 3, 4};
    ds.t_ebit_values = {1'000, 100'000, 10'000'000};
    dist.distributed = ds;
    const auto dist_records = run_distributed_sweep(dist);
    for (const std::string& profile : dist.profiles)
        for (std::size_t n : dist.n_values)
            for (ns_t t_ebit : ds.t_ebit_values) {
                for (const std::string& design :
                     {std::string("regular_semiclassical"), std::string("alternating"),
                      std::string("iterative")}) {
                    ns_t previous = -1;
                    for (std::size_t k : ds.k_values) {
                        const ns_t t_c = delay_at(dist_records, design, profile, n, k, t_ebit);
                        if (previous >= 0 && t_c > previous)
                            out.fail("k-monotonicity violated for " + design + " at " + profile +
                                     " n=" + std::to_string(n) + " k=" + std::to_string(k));
                        previous = t_c;
                        ++coordinates;
                    }
                }
            }
    if (out.passed)
        out.detail = std::to_string(coordinates) + " coordinates, zero violations";
    return out;
}

// 7. delta_D == t(GSE) exactly under both zero-idle conditions; the
// mitigatable-delay bound everywhere.
Outcome criterion_distributed_decomposition() {
    Outcome out;
    const DelayProfile profile = preset_profile("heron_r1_torino");
    std::size_t exact_cells = 0, bound_cells = 0;
    for (std::size_t m : {4ul, 8ul, 16ul})
        for (std::size_t k : {2ul, 3ul, 4ul})
            for (ns_t t_ebit : {20'000ll, 100'000ll})
                for (bool generous : {true, false}) {
                    const std::size_t n = 3;
                    const auto blocks = distribution_block_delays(profile, t_ebit);
                    const ns_t t_cu =
                        generous ? phase_block_delay(profile, PhaseMode::Classical, m) +
                                       blocks.e + 2 * blocks.gse_steady()
                                 : 500;
                    const auto spec =
                        make_design_spec(DesignKind::Alternating, n, fixed_cu(t_cu, m), m);
                    const DistributedLayout layout{k, t_ebit};

                    const bool mono_ok = check_alternating_zero_idle(spec, profile).ok;
                    const bool dist_ok =
                        check_distributed_zero_idle(spec, profile, layout).exact_ok;
                    const TimingReport report =
                        shor_delay_decomposition(distribute(spec, layout), profile);

                    const auto& d = report.decomposition;
                    if (d.delta_D_M < 0 || d.delta_D_M > report.bounds.delta_D_M_upper)
                        out.fail("mitigatable-delay bound violated at m=" + std::to_string(m) +
                                 " k=" + std::to_string(k));
                    ++bound_cells;
                    if (mono_ok && dist_ok) {
                        if (d.delta_D != blocks.gse_first())
                            out.fail("delta_D " + std::to_string(d.delta_D) +
                                     " != t(GSE) " + std::to_string(blocks.gse_first()) +
                                     " at m=" + std::to_string(m) + " k=" + std::to_string(k));
                        ++exact_cells;
                    } else if (generous) {
                        out.fail("zero-idle preconditions unexpectedly false at m=" +
                                 std::to_string(m) + " k=" + std::to_string(k));
                    }
                }
    if (out.passed)
        out.detail = std::to_string(exact_cells) + " exact cells, " +
                     std::to_string(bound_cells) + " bound cells";
    return out;
}

// 8. Ebit generation model against the published operating points and a
// Monte-Carlo oracle.
Outcome criterion_ebit_model() {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();

    const double t1_ms = expected_ebit_time_us(neutral_atom_link(1.0)) / 1000.0;
    if (t1_ms < 4.5 || t1_ms > 5.5) out.fail("d=1 km gives " + std::to_string(t1_ms) + " ms");
    const double t50_ms = expected_ebit_time_us(neutral_atom_link(50.0)) / 1000.0;
    if (t50_ms < 104.0 || t50_ms > 126.0)
        out.fail("d=50 km gives " + std::to_string(t50_ms) + " ms");

    double previous = 0.0;
    for (double d : {1.0, 5.0, 10.0, 20.0, 50.0}) {
        const double t = expected_ebit_time_us(neutral_atom_link(d));
        if (t <= previous) out.fail("not strictly increasing at d=" + std::to_string(d));
        previous = t;
    }

    const EbitLinkParams params = neutral_atom_link(1.0);
    const auto mc = qsta::testing::mc_expected_ebit_time(params, 1'000'000, 4242);
    const double analytic = expected_ebit_time_us(params);
    if (std::abs(mc.mean_us - analytic) >= 3.0 * mc.stderr_us)
        out.fail("Monte-Carlo " + std::to_string(mc.mean_us) + " vs analytic " +
                 std::to_string(analytic) + " (3 sigma = " +
                 std::to_string(3.0 * mc.stderr_us) + ")");

    const double elapsed = seconds_since(start);
    if (elapsed >= 30.0) out.fail("runtime " + std::to_string(elapsed) + " s exceeds 30 s");
    if (out.passed) {
        std::ostringstream detail;
        detail << "T(1km)=" << t1_ms << " ms, T(50km)=" << t50_ms << " ms, MC |diff|="
               << std::abs(mc.mean_us - analytic) << " us in " << elapsed << " s";
        out.detail = detail.str();
    }
    return out;
}

// 9. Ebit-dominated regime: k channels cut the delay to about 1/k.
Outcome criterion_one_over_k() {
    Outcome out;
    const DelayProfile profile = preset_profile("heron_r1_torino");
    const std::size_t n = 32, m = 64;
    const ns_t t_cu = 100;
    const ns_t t_ebit = 100 * static_cast<ns_t>(m) * t_cu;  // >= 100 x sum(t_CU)

    std::vector<ns_t> delays_by_k;
    for (std::size_t k = 1; k <= 4; ++k) {
        const auto spec =
            make_design_spec(DesignKind::RegularSemiclassical, n, fixed_cu(t_cu, m), m);
        delays_by_k.push_back(
            circuit_delay(distribute(spec, DistributedLayout{k, t_ebit}).circuit, profile));
    }
    std::ostringstream detail;
    for (std::size_t k = 2; k <= 4; ++k) {
        const double reduction = (static_cast<double>(delays_by_k[0]) -
                                  static_cast<double>(delays_by_k[k - 1])) /
                                 static_cast<double>(delays_by_k[0]);
        const double target = 1.0 - 1.0 / static_cast<double>(k);
        detail << "k=" << k << ": " << reduction << " (target " << target << ") ";
        if (std::abs(reduction - target) > 0.1 * target)
            out.fail("k=" + std::to_string(k) + " reduction " + std::to_string(reduction) +
                     " outside 10% of " + std::to_string(target));
    }
    if (out.passed) out.detail = detail.str();
    return out;
}

// 10. Optimal channel count moves monotonically over the (n, t_ebit) grid.
Outcome criterion_heatmap_monotonicity() {
    Outcome out;
    SweepConfig fast_gates;
    fast_gates.profiles = {"heron_r1_torino"};
    fast_gates.designs = {DesignKind::Alternating};
    fast_gates.n_values = {4, 6, 8, 10, 12, 14, 16, 18};
    fast_gates.cu_model.type = CuModel::Type::Poly;
    fast_gates.cu_model.c1 = 1.0;
    fast_gates.cu_model.c2 = 1.0;
    DistributedSweep fast_dist;
    fast_dist.k_values = {1, 2, 3, 4};
    fast_dist.t_ebit_values = {1'000,   3'000,   10'000,    30'000,
                               100'000, 300'000, 1'000'000, 3'000'000};
    fast_gates.distributed = fast_dist;

    // Slow measurements and resets: long phase processing hides the
    // generation, so the single-channel region appears.
    SweepConfig slow_phase = fast_gates;
    slow_phase.profiles = {"neutral_atom"};
    slow_phase.designs = {DesignKind::Iterative};
    slow_phase.n_values = {2, 3, 4, 5, 6, 7, 8, 9};
    DistributedSweep slow_dist;
    slow_dist.k_values = {1, 2, 3, 4};
    slow_dist.t_ebit_values = {100'000,    1'000'000,   3'000'000,   10'000'000,
                               30'000'000, 100'000'000, 300'000'000, 1'000'000'000};
    slow_phase.distributed = slow_dist;

    std::size_t span_min = 4, span_max = 1, grids = 0;
    for (const SweepConfig& config : {fast_gates, slow_phase}) {
        const auto maps = compute_heatmaps(run_distributed_sweep(config));
        if (maps.size() != 1) {
            out.fail("expected one heatmap per grid");
            return out;
        }
        const Heatmap& map = maps[0];
        for (std::size_t row = 0; row < map.n_values.size(); ++row)
            for (std::size_t col = 0; col < map.t_ebit_values.size(); ++col) {
                const std::size_t k = map.optimal_k[row][col];
                span_min = std::min(span_min, k);
                span_max = std::max(span_max, k);
                if (col > 0 && map.optimal_k[row][col] < map.optimal_k[row][col - 1])
                    out.fail(map.design + ": not non-decreasing in t_ebit at n=" +
                             std::to_string(map.n_values[row]));
                if (row > 0 && map.optimal_k[row][col] > map.optimal_k[row - 1][col])
                    out.fail(map.design + ": not non-increasing in n at t_ebit=" +
                             std::to_string(map.t_ebit_values[col]));
            }
        ++grids;
    }
    if (out.passed)
        out.detail = std::to_string(grids) + " 8x8 grids, optimal k spans [" +
                     std::to_string(span_min) + ", " + std::to_string(span_max) +
                     "], zero violations";
    return out;
}

}  // namespace

int main() {
    struct Entry {
        int id;
        const char* title;
        Outcome (*run)();
    };
    const Entry entries[] = {
        {1, "oracle equivalence of circuit_delay", criterion_oracle_equivalence},
        {2, "design structure counts", criterion_design_structure},
        {3, "depth equality alternating vs semiclassical", criterion_depth_equality},
        {4, "closed-form zero-idle delay", criterion_closed_form},
        {5, "50% reduction plateau", criterion_fifty_percent_plateau},
        {6, "delay ordering and k-monotonicity", criterion_delay_ordering},
        {7, "distributed decomposition", criterion_distributed_decomposition},
        {8, "ebit generation model", criterion_ebit_model},
        {9, "1/k reduction regime", criterion_one_over_k},
        {10, "heatmap monotonicity", criterion_heatmap_monotonicity},
    };

    int failures = 0;
    for (const Entry& entry : entries) {
        Outcome outcome;
        try {
            outcome = entry.run();
        } catch (const std::exception& e) {
            outcome.passed = false;
            outcome.detail = std::string("exception: ") + e.what();
        }
        std::printf("[%s] criterion %2d: %s%s%s\n", outcome.passed ? "PASS" : "FAIL", entry.id,
                    entry.title, outcome.detail.empty() ? "" : " -- ",
                    outcome.detail.c_str());
        if (!outcome.passed) ++failures;
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
