// Compares the OpenMP sweep evaluator against the serial reference on a
// realistic design-space grid and verifies both produce identical records.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qsta/sweep.hpp"

using namespace qsta;
using clock_type = std::chrono::steady_clock;

namespace {

double run_ms(std::vector<SweepRecord> (*fn)(const SweepConfig&), const SweepConfig& config,
              std::vector<SweepRecord>& out) {
    const auto start = clock_type::now();
    out = fn(config);
    return std::chrono::duration<double, std::milli>(clock_type::now() - start).count();
}

bool same_records(const std::vector<SweepRecord>& a, const std::vector<SweepRecord>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].t_C_ns != b[i].t_C_ns || a[i].delta_P_ns != b[i].delta_P_ns ||
            a[i].delta_D_ns != b[i].delta_D_ns || a[i].depth != b[i].depth ||
            a[i].design != b[i].design)
            return false;
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    std::size_t scale = 1;
    if (argc > 1 && std::strcmp(argv[1], "--large") == 0) scale = 2;

    SweepConfig mono;
    mono.profiles = {"heron_r1_torino", "neutral_atom", "forte"};
    mono.designs = {DesignKind::RegularSemiclassical, DesignKind::Alternating,
                    DesignKind::Iterative};
    for (std::size_t n = 2; n <= 16 * scale; ++n) mono.n_values.push_back(n);
    mono.cu_model.type = CuModel::Type::Poly;
    mono.cu_model.c1 = 1.0;
    mono.cu_model.c2 = 1.0;

    SweepConfig dist = mono;
    dist.n_values.clear();
    for (std::size_t n = 2; n <= 10 * scale; n += 2) dist.n_values.push_back(n);
    DistributedSweep ds;
    ds.k_values = {1, 2, 3, 4};
    ds.t_ebit_values = {1'000, 10'000, 100'000, 1'000'000, 10'000'000};
    dist.distributed = ds;

#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; parallel path runs serially\n");
#endif

    std::vector<SweepRecord> serial_records, parallel_records;

    const double mono_serial = run_ms(run_monolithic_sweep_serial, mono, serial_records);
    const double mono_parallel = run_ms(run_monolithic_sweep, mono, parallel_records);
    if (!same_records(serial_records, parallel_records)) {
        std::printf("FAIL: monolithic records differ between serial and parallel\n");
        return 1;
    }
    std::printf("monolithic  %5zu records: serial %8.1f ms, parallel %8.1f ms, speedup %.2fx\n",
                serial_records.size(), mono_serial, mono_parallel,
                mono_serial / mono_parallel);

    const double dist_serial = run_ms(run_distributed_sweep_serial, dist, serial_records);
    const double dist_parallel = run_ms(run_distributed_sweep, dist, parallel_records);
    if (!same_records(serial_records, parallel_records)) {
        std::printf("FAIL: distributed records differ between serial and parallel\n");
        return 1;
    }
    std::printf("distributed %5zu records: serial %8.1f ms, parallel %8.1f ms, speedup %.2fx\n",
                serial_records.size(), dist_serial, dist_parallel,
                dist_serial / dist_parallel);
    return 0;
}
