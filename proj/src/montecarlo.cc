// Copyright 2026 The qhdrg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "qhdrg/montecarlo.h"

#include <omp.h>

#include <bit>
#include <chrono>
#include <cmath>
#include <exception>
#include <stdexcept>

#include "qhdrg/initstep.h"
#include "qhdrg/noise.h"

namespace qhdrg {

void validate(const CellSpec &cell) {
    if (cell.L < 2) {
        throw std::invalid_argument("code distance must be >= 2");
    }
    if (cell.d < 2) {
        throw std::invalid_argument("qudit dimension must be >= 2");
    }
    if (cell.T < 1) {
        throw std::invalid_argument("time steps must be >= 1");
    }
    if (!(cell.p >= 0.0 && cell.p < 1.0)) {
        throw std::invalid_argument("error rate must lie in [0, 1)");
    }
    if (cell.init_depth < 0 || cell.init_depth > kMaxInitLevel) {
        throw std::invalid_argument("initialization depth must be in [0, 4]");
    }
}

std::uint64_t cell_seed(std::uint64_t master_seed, const CellSpec &cell) {
    return hash_words({
        master_seed,
        cell.d,
        static_cast<std::uint64_t>(cell.L),
        static_cast<std::uint64_t>(cell.T),
        std::bit_cast<std::uint64_t>(cell.p),
        static_cast<std::uint64_t>(cell.init_depth),
    });
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

ChangesHistory sample_changes(const CellSpec &cell, const CodeGeometry &g, std::uint64_t seed, std::uint64_t index, ErrorLayer *final_error) {
    const QuditDim d(cell.d);
    const NoiseParams noise(cell.p, d);
    RngStream qudit_rng(seed, index, StreamLabel::QuditNoise);
    RngStream measurement_rng(seed, index, StreamLabel::MeasurementNoise);
    Histories h = generate_histories(noise, g, cell.T, qudit_rng, measurement_rng);
    if (final_error) {
        *final_error = std::move(h.errors.back());
    }
    return syndrome_changes(h.syndromes, g, d);
}

}  // namespace

TrialOutcome run_trial(const TrialConfig &cfg, TrialTrace *trace) {
    const auto start = Clock::now();
    validate(cfg.cell);
    const QuditDim d(cfg.cell.d);
    const CodeGeometry g(cfg.cell.L);

    TrialOutcome out;
    ErrorLayer final_error;
    ChangesHistory changes = sample_changes(cfg.cell, g, cfg.seed, cfg.trial, &final_error);
    out.defects_initial = changes.defect_count();

    const auto decode_start = Clock::now();
    InitResult init = initialize(changes, cfg.cell.init_depth, g);
    out.defects_after_init = init.reduced.defect_count();
    DecodeResult decoded = decode(init.reduced, g);
    out.decode_seconds = seconds_since(decode_start);
    out.levels_used = static_cast<int>(decoded.levels.size());

    init.corrections.compose(decoded.corrections, d);
    ErrorLayer residual = final_error;
    residual.compose(project_correction(init.corrections, d), d);

    // Noise-free verification round: one perfect measurement, no time boundary.
    const SyndromeLayer leftover = compute_syndrome(residual, g, d);
    DecodeResult verify = decode(syndrome_changes(std::span(&leftover, 1), g, d), g, DecoderConfig{.time_boundary = false});
    residual.compose(project_correction(verify.corrections, d), d);
    if (!compute_syndrome(residual, g, d).is_zero()) {
        throw std::logic_error("run_trial: verification round left a non-trivial syndrome");
    }
    out.success = logical_class(residual, g, d) == 0;
    out.wall_seconds = seconds_since(start);

    if (trace) {
        trace->changes = std::move(changes);
        trace->annihilated_paths = init.annihilated_paths;
        trace->levels = std::move(decoded.levels);
        trace->verification_levels = std::move(verify.levels);
    }
    return out;
}

SuccessEstimate make_estimate(const CellSpec &cell, std::size_t trials, std::size_t successes, std::uint64_t seed) {
    const double p = trials ? static_cast<double>(successes) / static_cast<double>(trials) : 0.0;
    const double se = trials ? std::sqrt(p * (1 - p) / static_cast<double>(trials)) : 0.0;
    return {cell, trials, successes, p, se, seed};
}

namespace {

void check_batch(std::span<const CellSpec> cells, std::size_t trials) {
    if (trials < 1) {
        throw std::invalid_argument("need at least one trial per cell");
    }
    for (const auto &c : cells) {
        validate(c);
    }
}

int resolve_threads(int threads) {
    return threads > 0 ? threads : omp_get_max_threads();
}

// Runs body(i) for i in [0, n) across threads, recording 0/1 results. The first exception
// raised by any worker is rethrown after the loop.
template <typename Body>
std::vector<std::uint8_t> parallel_flags(std::size_t n, int threads, Body body) {
    std::vector<std::uint8_t> flags(n, 0);
    std::exception_ptr failure;
    const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 4) num_threads(resolve_threads(threads))
    for (std::int64_t i = 0; i < count; i++) {
        try {
            flags[i] = body(static_cast<std::size_t>(i)) ? 1 : 0;
        } catch (...) {
#pragma omp critical(qhdrg_batch_failure)
            if (!failure) {
                failure = std::current_exception();
            }
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return flags;
}

}  // namespace

std::vector<SuccessEstimate> run_batch(std::span<const CellSpec> cells, std::size_t trials, std::uint64_t seed, int threads) {
    check_batch(cells, trials);
    std::vector<std::uint64_t> seeds;
    for (const auto &c : cells) {
        seeds.push_back(cell_seed(seed, c));
    }
    auto flags = parallel_flags(cells.size() * trials, threads, [&](std::size_t i) {
        const std::size_t c = i / trials;
        return run_trial({cells[c], seeds[c], i % trials}).success;
    });
    std::vector<SuccessEstimate> out;
    for (std::size_t c = 0; c < cells.size(); c++) {
        std::size_t ok = 0;
        for (std::size_t k = 0; k < trials; k++) {
            ok += flags[c * trials + k];
        }
        out.push_back(make_estimate(cells[c], trials, ok, seed));
    }
    return out;
}

std::vector<SuccessEstimate> run_batch_serial(std::span<const CellSpec> cells, std::size_t trials, std::uint64_t seed) {
    check_batch(cells, trials);
    std::vector<SuccessEstimate> out;
    for (const auto &cell : cells) {
        const std::uint64_t s = cell_seed(seed, cell);
        std::size_t ok = 0;
        for (std::size_t k = 0; k < trials; k++) {
            ok += run_trial({cell, s, k}).success;
        }
        out.push_back(make_estimate(cell, trials, ok, seed));
    }
    return out;
}

PercolationResult percolation_sample(const CellSpec &cell, std::uint64_t seed, std::uint64_t index) {
    validate(cell);
    const CodeGeometry g(cell.L);
    ChangesHistory changes = sample_changes(cell, g, seed, index, nullptr);
    if (cell.init_depth > 0) {
        return percolates(initialize(changes, cell.init_depth, g).reduced);
    }
    return percolates(changes);
}

namespace {

PercolationEstimate make_percolation(const CellSpec &cell, std::size_t samples, std::size_t spanning, std::uint64_t seed) {
    return {cell, samples, spanning, static_cast<double>(spanning) / static_cast<double>(samples), seed};
}

}  // namespace

std::vector<PercolationEstimate> run_percolation_batch(
    std::span<const CellSpec> cells, std::size_t samples, std::uint64_t seed, int threads) {
    check_batch(cells, samples);
    std::vector<std::uint64_t> seeds;
    for (const auto &c : cells) {
        seeds.push_back(cell_seed(seed, c));
    }
    auto flags = parallel_flags(cells.size() * samples, threads, [&](std::size_t i) {
        const std::size_t c = i / samples;
        return percolation_sample(cells[c], seeds[c], i % samples).spans();
    });
    std::vector<PercolationEstimate> out;
    for (std::size_t c = 0; c < cells.size(); c++) {
        std::size_t n = 0;
        for (std::size_t k = 0; k < samples; k++) {
            n += flags[c * samples + k];
        }
        out.push_back(make_percolation(cells[c], samples, n, seed));
    }
    return out;
}

std::vector<PercolationEstimate> run_percolation_batch_serial(
    std::span<const CellSpec> cells, std::size_t samples, std::uint64_t seed) {
    check_batch(cells, samples);
    std::vector<PercolationEstimate> out;
    for (const auto &cell : cells) {
        const std::uint64_t s = cell_seed(seed, cell);
        std::size_t n = 0;
        for (std::size_t k = 0; k < samples; k++) {
            n += percolation_sample(cell, s, k).spans();
        }
        out.push_back(make_percolation(cell, samples, n, seed));
    }
    return out;
}

}  // namespace qhdrg
