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


// Command-line front end: trial, sweep, percolation, fit, bench.
//
// Exit codes: 0 success, 1 runtime or I/O failure, 2 usage error.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qhdrg/fitting.h"
#include "qhdrg/montecarlo.h"
#include "qhdrg/scaling.h"
#include "qhdrg/table_io.h"
#include "qhdrg/version.h"

using namespace qhdrg;
using nlohmann::json;

namespace {

constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "0.01,0.02" or "lo:hi:step".
std::vector<double> parse_rates(const std::string &text) {
    std::vector<double> out;
    auto snap = [](double v) { return std::round(v * 1e12) / 1e12; };
    try {
        if (text.find(':') != std::string::npos) {
            std::stringstream ss(text);
            std::string lo, hi, step;
            std::getline(ss, lo, ':');
            std::getline(ss, hi, ':');
            std::getline(ss, step, ':');
            const double a = std::stod(lo), b = std::stod(hi), s = std::stod(step);
            if (!(s > 0) || b < a) {
                throw UsageError("rate range needs lo <= hi and a positive step");
            }
            for (int i = 0; a + i * s <= b + s * 1e-9; i++) {
                out.push_back(snap(a + i * s));
            }
        } else {
            std::stringstream ss(text);
            std::string item;
            while (std::getline(ss, item, ',')) {
                out.push_back(snap(std::stod(item)));
            }
        }
    } catch (const std::logic_error &) {
        throw UsageError("cannot parse rates '" + text + "'");
    }
    if (out.empty()) {
        throw UsageError("no rates given");
    }
    return out;
}

struct SweepArgs {
    std::vector<int> distances;
    std::string rates;
    std::uint32_t dim = 2;
    std::size_t trials = 1000;
    int init_depth = 0;
    int time_steps = 0;
    std::uint64_t seed = 1;
    std::string out;
    int threads = 0;
    std::string format = "csv";
};

std::vector<CellSpec> sweep_cells(const SweepArgs &a) {
    std::vector<CellSpec> cells;
    const auto rates = parse_rates(a.rates);
    for (int L : a.distances) {
        for (double p : rates) {
            CellSpec c{a.dim, L, a.time_steps > 0 ? a.time_steps : L, p, a.init_depth};
            try {
                validate(c);
            } catch (const std::invalid_argument &e) {
                throw UsageError(e.what());
            }
            cells.push_back(c);
        }
    }
    return cells;
}

json sweep_manifest(const std::string &command, const SweepArgs &a, const char *count_name) {
    return {
        {"tool", "qhdrg"},
        {"version", kVersion},
        {"command", command},
        {"distances", a.distances},
        {"rates", a.rates},
        {"dim", a.dim},
        {count_name, a.trials},
        {"init_depth", a.init_depth},
        {"time_steps", a.time_steps > 0 ? json(a.time_steps) : json("L")},
        {"seed", a.seed},
        {"format", a.format},
    };
}

// Writes `body` to --out (plus a sibling .manifest.json) or to stdout (manifest on stderr).
void emit(const std::string &out, const std::string &body, const json &manifest) {
    if (out.empty()) {
        std::cout << body;
        std::cerr << manifest.dump() << '\n';
        return;
    }
    std::ofstream f(out, std::ios::binary);
    std::ofstream m(out + ".manifest.json", std::ios::binary);
    if (!f || !m) {
        throw std::runtime_error("cannot open '" + out + "' for writing");
    }
    f << body;
    m << manifest.dump(2) << '\n';
    if (!f || !m) {
        throw std::runtime_error("failed writing '" + out + "'");
    }
}

void add_sweep_options(CLI::App *cmd, SweepArgs &a, const char *count_flag, const char *count_help) {
    cmd->add_option("--distances", a.distances, "Code distances L")->required()->delimiter(',');
    cmd->add_option("--rates", a.rates, "Error rates: comma list or lo:hi:step")->required();
    cmd->add_option("--dim", a.dim, "Qudit dimension d")->check(CLI::Range(2u, 0x7fffffffu));
    cmd->add_option(count_flag, a.trials, count_help);
    cmd->add_option("--init-depth", a.init_depth, "Initialization depth (0-4)")->check(CLI::Range(0, 4));
    cmd->add_option("--time-steps", a.time_steps, "Rounds of noisy measurement (default: L)");
    cmd->add_option("--seed", a.seed, "Master seed");
    cmd->add_option("--out", a.out, "Output file (default: stdout)");
    cmd->add_option("--threads", a.threads, "Worker threads (default: all)");
}

int cmd_trial(int L, std::uint32_t d, double p, int T, int depth, std::uint64_t seed, std::uint64_t index, bool trace,
              const std::string &dump) {
    CellSpec cell{d, L, T > 0 ? T : L, p, depth};
    try {
        validate(cell);
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    TrialTrace tr;
    const TrialOutcome o = run_trial({cell, cell_seed(seed, cell), index}, &tr);
    json out = {
        {"d", cell.d},
        {"L", cell.L},
        {"T", cell.T},
        {"p", cell.p},
        {"init_depth", cell.init_depth},
        {"seed", seed},
        {"trial", index},
        {"success", o.success},
        {"levels_used", o.levels_used},
        {"defects_initial", o.defects_initial},
        {"defects_after_init", o.defects_after_init},
    };
    if (trace) {
        json levels = json::array(), verify = json::array();
        for (const auto &l : tr.levels) {
            levels.push_back(to_json(l));
        }
        for (const auto &l : tr.verification_levels) {
            verify.push_back(to_json(l));
        }
        out["trace"] = {{"annihilated_paths", tr.annihilated_paths}, {"levels", levels}, {"verification_levels", verify}};
    }
    if (!dump.empty()) {
        std::ofstream f(dump);
        if (!f) {
            throw std::runtime_error("cannot open '" + dump + "' for writing");
        }
        f << to_json(*tr.changes).dump() << '\n';
    }
    out["manifest"] = {
        {"tool", "qhdrg"},
        {"version", kVersion},
        {"command", "trial"},
        {"distance", cell.L},
        {"dim", cell.d},
        {"rate", cell.p},
        {"time_steps", cell.T},
        {"init_depth", cell.init_depth},
        {"seed", seed},
        {"trial_index", index},
        {"trace", trace},
    };
    std::cout << out.dump(2) << '\n';
    return 0;
}

int cmd_sweep(const SweepArgs &a) {
    if (a.trials < 1) {
        throw UsageError("--trials must be >= 1");
    }
    const auto cells = sweep_cells(a);
    const auto rows = run_batch(cells, a.trials, a.seed, a.threads);
    std::ostringstream body;
    if (a.format == "json") {
        body << batch_json(rows).dump(2) << '\n';
    } else {
        write_batch_csv(body, rows);
    }
    emit(a.out, body.str(), sweep_manifest("sweep", a, "trials"));
    return 0;
}

int cmd_percolation(const SweepArgs &a) {
    if (a.trials < 1) {
        throw UsageError("--samples must be >= 1");
    }
    const auto cells = sweep_cells(a);
    const auto rows = run_percolation_batch(cells, a.trials, a.seed, a.threads);
    std::ostringstream body;
    write_percolation_csv(body, rows);
    emit(a.out, body.str(), sweep_manifest("percolation", a, "samples"));
    return 0;
}

struct FitArgs {
    std::string in;
    std::optional<std::uint32_t> dim;
    std::optional<int> init_depth;
    double half_width = 0.005;
    std::size_t bootstrap = 200;
    std::uint64_t seed = 1;
    std::string out;
};

int cmd_fit(const FitArgs &a) {
    std::ifstream f(a.in);
    if (!f) {
        throw std::runtime_error("cannot open '" + a.in + "'");
    }
    std::vector<SuccessEstimate> rows;
    std::set<std::pair<std::uint32_t, int>> groups;
    for (const auto &r : read_batch_csv(f)) {
        if ((a.dim && r.cell.d != *a.dim) || (a.init_depth && r.cell.init_depth != *a.init_depth)) {
            continue;
        }
        rows.push_back(r);
        groups.insert({r.cell.d, r.cell.init_depth});
    }
    if (rows.empty()) {
        throw UsageError("no rows left after filtering");
    }
    if (groups.size() > 1) {
        throw UsageError("input mixes several (d, init_depth) groups; select one with --dim/--init-depth");
    }
    const auto fit_data = fit_rows(rows);
    const double crossing = estimate_crossing(fit_data);
    const DataWindow w = select_window(fit_data, {a.half_width});
    const ThresholdFit fit = fit_threshold(w, {.bootstrap = a.bootstrap, .seed = a.seed});

    json window_rows = json::array();
    for (const auto &r : w.rows) {
        window_rows.push_back({{"L", r.L}, {"p", r.p}, {"p_succ", r.p_succ}, {"stderr", r.std_error}});
    }
    json report = {
        {"d", groups.begin()->first},
        {"init_depth", groups.begin()->second},
        {"fit", to_json(fit)},
        {"window", {{"crossing", crossing}, {"p_lo", w.p_lo}, {"p_hi", w.p_hi}, {"rows", window_rows}}},
    };
    json manifest = {
        {"tool", "qhdrg"},
        {"version", kVersion},
        {"command", "fit"},
        {"in", a.in},
        {"dim", a.dim ? json(*a.dim) : json(nullptr)},
        {"init_depth", a.init_depth ? json(*a.init_depth) : json(nullptr)},
        {"half_width", a.half_width},
        {"bootstrap", a.bootstrap},
        {"seed", a.seed},
    };
    report["manifest"] = manifest;
    const std::string body = report.dump(2) + "\n";
    if (a.out.empty()) {
        std::cout << body;
    } else {
        std::ofstream o(a.out);
        if (!o || !(o << body)) {
            throw std::runtime_error("cannot write '" + a.out + "'");
        }
    }
    return 0;
}

int cmd_bench(const std::vector<int> &distances, const ScalingOptions &opts) {
    if (std::set<int>(distances.begin(), distances.end()).size() < 3) {
        throw UsageError("bench needs at least three distinct --distances");
    }
    ScalingReport r;
    try {
        r = measure_decode_scaling(distances, opts);
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    std::cout << "L,median_decode_seconds\n";
    for (const auto &pt : r.points) {
        std::cout << pt.L << ',' << pt.median_seconds << '\n';
    }
    std::cout << "# loglog_slope " << r.slope << '\n';
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Fault-tolerant HDRG decoding of qubit and qudit surface codes"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    int L = 0, T = 0, depth = 0;
    std::uint32_t dim = 2;
    double rate = 0;
    std::uint64_t seed = 1, index = 0;
    bool trace = false;
    std::string dump;
    auto *trial = app.add_subcommand("trial", "Run one fault-tolerant decoding trial");
    trial->add_option("--distance", L, "Code distance L")->required();
    trial->add_option("--dim", dim, "Qudit dimension d");
    trial->add_option("--rate", rate, "Error rate p");
    trial->add_option("--time-steps", T, "Rounds of noisy measurement (default: L)");
    trial->add_option("--init-depth", depth, "Initialization depth (0-4)");
    trial->add_option("--seed", seed, "Master seed");
    trial->add_option("--trial-index", index, "Trial index within the cell");
    trial->add_flag("--trace", trace, "Include per-level decoder statistics");
    trial->add_option("--dump-changes", dump, "Write the syndrome-changes history as JSON");

    SweepArgs sweep_args;
    auto *sweep = app.add_subcommand("sweep", "Estimate success probabilities over (L, p)");
    add_sweep_options(sweep, sweep_args, "--trials", "Trials per cell");
    sweep->add_option("--format", sweep_args.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    SweepArgs perc_args;
    perc_args.trials = 200;
    auto *perc = app.add_subcommand("percolation", "Estimate syndrome spanning fractions over (L, p)");
    add_sweep_options(perc, perc_args, "--samples", "Samples per cell");

    FitArgs fit_args;
    std::uint32_t fit_dim = 0;
    int fit_depth = -1;
    auto *fit = app.add_subcommand("fit", "Fit the threshold to a sweep CSV");
    fit->add_option("--in", fit_args.in, "Sweep CSV")->required();
    fit->add_option("--dim", fit_dim, "Only use rows with this d");
    fit->add_option("--init-depth", fit_depth, "Only use rows with this initialization depth");
    fit->add_option("--half-width", fit_args.half_width, "Half-width of the p window around the crossing");
    fit->add_option("--bootstrap", fit_args.bootstrap, "Bootstrap resamples")->check(CLI::Range(2, 1000000));
    fit->add_option("--seed", fit_args.seed, "Bootstrap seed");
    fit->add_option("--out", fit_args.out, "Report file (default: stdout)");

    std::vector<int> bench_distances;
    ScalingOptions bench_opts;
    auto *bench = app.add_subcommand("bench", "Median decode time against L");
    bench->add_option("--distances", bench_distances, "Code distances L (at least three)")->required()->delimiter(',');
    bench->add_option("--dim", bench_opts.d, "Qudit dimension d");
    bench->add_option("--rate", bench_opts.p, "Error rate p");
    bench->add_option("--samples", bench_opts.samples, "Trials per distance");
    bench->add_option("--init-depth", bench_opts.init_depth, "Initialization depth (0-4)");
    bench->add_option("--seed", bench_opts.seed, "Master seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*trial) {
            return cmd_trial(L, dim, rate, T, depth, seed, index, trace, dump);
        }
        if (*sweep) {
            return cmd_sweep(sweep_args);
        }
        if (*perc) {
            return cmd_percolation(perc_args);
        }
        if (*fit) {
            if (fit_dim) {
                fit_args.dim = fit_dim;
            }
            if (fit_depth >= 0) {
                fit_args.init_depth = fit_depth;
            }
            return cmd_fit(fit_args);
        }
        return cmd_bench(bench_distances, bench_opts);
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
}
