#include "nisqmodal/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "nisqmodal/parallel.hpp"

namespace nisqmodal {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

constexpr std::uint64_t kRepetitionSeedStride = 10007;

}  // namespace

const char* const kSweepCsvHeader =
    "geometry,n_osc,n_qubits,gate_count,f,shots,lambda_exact,lambda_mixed,"
    "lambda_est_mean,rel_err_mean,rel_err_std";

std::vector<SweepRow> sweep(const std::vector<OscillatorSystem>& geometries,
                            const SweepOptions& options) {
    if (options.repetitions < 1)
        throw std::invalid_argument("sweep: repetitions must be >= 1");
    if (geometries.empty()) return {};

    struct GeometryData {
        const OscillatorSystem* sys;
        PaddedMatrix padded;
    };
    std::vector<GeometryData> data;
    data.reserve(geometries.size());
    for (const OscillatorSystem& g : geometries)
        data.push_back({&g, pad_to_qubit_dimension(assemble_dynamical_matrix(g))});

    const std::size_t reps = static_cast<std::size_t>(options.repetitions);
    std::vector<EigenEstimate> estimates(data.size() * reps);
    parallel_for(estimates.size(), options.jobs, [&](std::size_t task) {
        const std::size_t gi = task / reps;
        const std::size_t rep = task % reps;
        const GeometryData& gd = data[gi];
        const int k_max = static_cast<int>(gd.padded.h.rows()) - 1;
        const std::uint64_t rep_seed =
            options.seed + kRepetitionSeedStride * static_cast<std::uint64_t>(rep);
        estimates[task] = estimate_eigenvalue(gd.padded.h, k_max, options.noise,
                                              options.shots, rep_seed,
                                              options.prune_tol, 1);
    });

    std::vector<SweepRow> rows;
    rows.reserve(data.size());
    for (std::size_t gi = 0; gi < data.size(); ++gi) {
        const EigenEstimate& first = estimates[gi * reps];
        SweepRow row;
        row.geometry = data[gi].sys->label;
        row.n_osc = data[gi].sys->n_oscillators();
        row.n_qubits = data[gi].padded.n_qubits;
        row.gate_count = first.gate_count;
        row.f = options.noise.gate_fidelity;
        row.shots = options.shots;
        row.lambda_exact = first.lambda_exact;
        row.lambda_mixed = first.lambda_mixed;

        double est_sum = 0.0, rel_sum = 0.0;
        for (std::size_t r = 0; r < reps; ++r) {
            est_sum += estimates[gi * reps + r].lambda_est;
            rel_sum += estimates[gi * reps + r].rel_error;
        }
        row.lambda_est_mean = est_sum / static_cast<double>(reps);
        row.rel_err_mean = rel_sum / static_cast<double>(reps);

        double sq = 0.0;
        for (std::size_t r = 0; r < reps; ++r) {
            const double d = estimates[gi * reps + r].rel_error - row.rel_err_mean;
            sq += d * d;
        }
        row.rel_err_std = reps > 1 ? std::sqrt(sq / static_cast<double>(reps - 1)) : 0.0;
        rows.push_back(std::move(row));
    }

    std::stable_sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
        if (a.geometry != b.geometry) return a.geometry < b.geometry;
        return a.gate_count < b.gate_count;
    });
    return rows;
}

std::vector<OscillatorSystem> standard_ladder(double blade_height_mm) {
    std::vector<OscillatorSystem> out;
    for (int n : {2, 4, 8, 16, 32, 64})
        out.push_back(build_chain(n, 1.0, 1.0, ChainBoundary::fixed_fixed));
    for (BladePreset p : {BladePreset::a, BladePreset::b, BladePreset::c})
        out.push_back(build_blade(p, blade_height_mm));
    return out;
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
    std::string out = kSweepCsvHeader;
    out += '\n';
    for (const SweepRow& r : rows) {
        out += r.geometry;
        out += ',' + std::to_string(r.n_osc);
        out += ',' + std::to_string(r.n_qubits);
        out += ',' + std::to_string(r.gate_count);
        out += ',' + fmt(r.f);
        out += ',' + std::to_string(r.shots);
        out += ',' + fmt(r.lambda_exact);
        out += ',' + fmt(r.lambda_mixed);
        out += ',' + fmt(r.lambda_est_mean);
        out += ',' + fmt(r.rel_err_mean);
        out += ',' + fmt(r.rel_err_std);
        out += '\n';
    }
    return out;
}

nlohmann::json sweep_to_json(const std::vector<SweepRow>& rows) {
    nlohmann::json j = nlohmann::json::array();
    for (const SweepRow& r : rows)
        j.push_back({{"geometry", r.geometry},
                     {"n_osc", r.n_osc},
                     {"n_qubits", r.n_qubits},
                     {"gate_count", r.gate_count},
                     {"f", r.f},
                     {"shots", r.shots},
                     {"lambda_exact", r.lambda_exact},
                     {"lambda_mixed", r.lambda_mixed},
                     {"lambda_est_mean", r.lambda_est_mean},
                     {"rel_err_mean", r.rel_err_mean},
                     {"rel_err_std", r.rel_err_std}});
    return j;
}

void write_sweep_csv(const std::vector<SweepRow>& rows, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("write_sweep_csv: cannot open " + path);
    f << sweep_to_csv(rows);
}

void write_sweep_json(const std::vector<SweepRow>& rows, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("write_sweep_json: cannot open " + path);
    f << sweep_to_json(rows).dump(2) << "\n";
}

}  // namespace nisqmodal
