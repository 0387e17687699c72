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


#ifndef QHDRG_MONTECARLO_H
#define QHDRG_MONTECARLO_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qhdrg/hdrg.h"
#include "qhdrg/percolation.h"

namespace qhdrg {

/// One point of a parameter sweep.
struct CellSpec {
    std::uint32_t d;
    int L;
    /// Rounds of noisy measurement; the usual choice is T = L.
    int T;
    double p;
    int init_depth = 0;

    bool operator==(const CellSpec &) const = default;
};

/// Throws std::invalid_argument on L < 2, d < 2, T < 1, p outside [0,1) or depth outside [0,4].
void validate(const CellSpec &cell);

/// Seed of a cell's trial streams. Depends only on the master seed and the cell's own
/// parameters, so a cell gives the same answer whatever sweep it appears in.
std::uint64_t cell_seed(std::uint64_t master_seed, const CellSpec &cell);

struct TrialConfig {
    CellSpec cell;
    std::uint64_t seed;
    std::uint64_t trial;
};

struct TrialOutcome {
    bool success = false;
    /// Levels run by the 3D decoder.
    int levels_used = 0;
    std::size_t defects_initial = 0;
    std::size_t defects_after_init = 0;
    /// Initialization plus 3D decoding.
    double decode_seconds = 0;
    double wall_seconds = 0;
};

/// Optional detail captured by run_trial.
struct TrialTrace {
    std::optional<ChangesHistory> changes;
    std::size_t annihilated_paths = 0;
    std::vector<LevelTrace> levels;
    std::vector<LevelTrace> verification_levels;
};

/// noise -> histories -> changes -> initialization -> 3D decode -> projection -> residual ->
/// noise-free 2D decode -> stabilizer check. Throws std::logic_error if the verification round
/// ever leaves a non-trivial syndrome.
TrialOutcome run_trial(const TrialConfig &cfg, TrialTrace *trace = nullptr);

struct SuccessEstimate {
    CellSpec cell;
    std::size_t trials;
    std::size_t successes;
    double p_succ;
    /// sqrt(p_succ (1 - p_succ) / trials)
    double std_error;
    std::uint64_t seed;
};

SuccessEstimate make_estimate(const CellSpec &cell, std::size_t trials, std::size_t successes, std::uint64_t seed);

/// OpenMP kernel over all (cell, trial) pairs. threads <= 0 uses the OpenMP default.
/// Output is identical to run_batch_serial for any thread count.
std::vector<SuccessEstimate> run_batch(std::span<const CellSpec> cells, std::size_t trials, std::uint64_t seed, int threads = 0);

/// Serial reference for run_batch.
std::vector<SuccessEstimate> run_batch_serial(std::span<const CellSpec> cells, std::size_t trials, std::uint64_t seed);

/// Percolation test on one sampled changes history, after `cell.init_depth` initialization
/// levels. Uses the same noise streams as the trial with the same index.
PercolationResult percolation_sample(const CellSpec &cell, std::uint64_t seed, std::uint64_t index);

struct PercolationEstimate {
    CellSpec cell;
    std::size_t samples;
    std::size_t spanning;
    double span_fraction;
    std::uint64_t seed;
};

std::vector<PercolationEstimate> run_percolation_batch(
    std::span<const CellSpec> cells, std::size_t samples, std::uint64_t seed, int threads = 0);

std::vector<PercolationEstimate> run_percolation_batch_serial(
    std::span<const CellSpec> cells, std::size_t samples, std::uint64_t seed);

}  // namespace qhdrg

#endif
