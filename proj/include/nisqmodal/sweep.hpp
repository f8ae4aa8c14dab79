#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "nisqmodal/estimator.hpp"
#include "nisqmodal/oscillator.hpp"

namespace nisqmodal {

struct SweepRow {
    std::string geometry;
    int n_osc = 0;
    int n_qubits = 0;
    long long gate_count = 0;
    double f = 1.0;
    int shots = 0;
    double lambda_exact = 0.0;
    double lambda_mixed = 0.0;
    double lambda_est_mean = 0.0;
    double rel_err_mean = 0.0;
    double rel_err_std = 0.0;
};

struct SweepOptions {
    NoiseModel noise;
    int shots = 4096;  // 0 = analytic
    int repetitions = 100;
    std::uint64_t seed = 0;
    int jobs = 0;  // <= 0: hardware concurrency
    double prune_tol = 1e-12;
};

// Estimates the maximum eigenpair of every geometry `repetitions` times,
// repetition r using seed + 10007 * r, and aggregates mean and sample
// standard deviation. Tasks fan out over (geometry x repetition); rows come
// back sorted by (geometry, gate_count) and are bit-reproducible for a fixed
// seed regardless of the job count.
std::vector<SweepRow> sweep(const std::vector<OscillatorSystem>& geometries,
                            const SweepOptions& options);

// The benchmark ladder: chains of 2, 4, 8, 16, 32, 64 oscillators
// (fixed ends) plus blades a, b and c at the given height.
std::vector<OscillatorSystem> standard_ladder(double blade_height_mm = 10.0);

extern const char* const kSweepCsvHeader;

std::string sweep_to_csv(const std::vector<SweepRow>& rows);
nlohmann::json sweep_to_json(const std::vector<SweepRow>& rows);
void write_sweep_csv(const std::vector<SweepRow>& rows, const std::string& path);
void write_sweep_json(const std::vector<SweepRow>& rows, const std::string& path);

}  // namespace nisqmodal
