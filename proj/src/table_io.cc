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


#include "qhdrg/table_io.h"

#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qhdrg {

namespace {

std::string fmt(const char *spec, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

std::vector<std::string> split(const std::string &line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        out.push_back(cell);
    }
    return out;
}

}  // namespace

std::string batch_csv_header() {
    return "d,L,T,p,init_depth,trials,successes,p_succ,stderr,seed";
}

void write_batch_csv(std::ostream &out, std::span<const SuccessEstimate> rows) {
    out << batch_csv_header() << '\n';
    for (const auto &r : rows) {
        out << r.cell.d << ',' << r.cell.L << ',' << r.cell.T << ',' << fmt("%.6g", r.cell.p) << ',' << r.cell.init_depth
            << ',' << r.trials << ',' << r.successes << ',' << fmt("%.6f", r.p_succ) << ',' << fmt("%.6f", r.std_error)
            << ',' << r.seed << '\n';
    }
}

nlohmann::json batch_json(std::span<const SuccessEstimate> rows) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto &r : rows) {
        out.push_back({
            {"d", r.cell.d},
            {"L", r.cell.L},
            {"T", r.cell.T},
            {"p", r.cell.p},
            {"init_depth", r.cell.init_depth},
            {"trials", r.trials},
            {"successes", r.successes},
            {"p_succ", r.p_succ},
            {"stderr", r.std_error},
            {"seed", r.seed},
        });
    }
    return out;
}

std::vector<SuccessEstimate> read_batch_csv(std::istream &in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw std::runtime_error("batch CSV is empty");
    }
    std::map<std::string, std::size_t> col;
    auto header = split(line);
    for (std::size_t i = 0; i < header.size(); i++) {
        col[header[i]] = i;
    }
    for (const char *name : {"d", "L", "T", "p", "init_depth", "trials", "successes", "seed"}) {
        if (!col.count(name)) {
            throw std::runtime_error(std::string("batch CSV is missing column '") + name + "'");
        }
    }

    std::vector<SuccessEstimate> rows;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        line_no++;
        if (line.empty() || line[0] == '#') {
            continue;
        }
        auto cells = split(line);
        if (cells.size() < header.size()) {
            throw std::runtime_error("batch CSV line " + std::to_string(line_no) + " has too few fields");
        }
        try {
            CellSpec cell{
                static_cast<std::uint32_t>(std::stoul(cells[col["d"]])),
                std::stoi(cells[col["L"]]),
                std::stoi(cells[col["T"]]),
                std::stod(cells[col["p"]]),
                std::stoi(cells[col["init_depth"]]),
            };
            rows.push_back(make_estimate(
                cell, std::stoull(cells[col["trials"]]), std::stoull(cells[col["successes"]]), std::stoull(cells[col["seed"]])));
        } catch (const std::logic_error &) {
            throw std::runtime_error("batch CSV line " + std::to_string(line_no) + " is malformed");
        }
    }
    return rows;
}

std::string percolation_csv_header() {
    return "d,L,T,p,init_depth,samples,span_fraction";
}

void write_percolation_csv(std::ostream &out, std::span<const PercolationEstimate> rows) {
    out << percolation_csv_header() << '\n';
    for (const auto &r : rows) {
        out << r.cell.d << ',' << r.cell.L << ',' << r.cell.T << ',' << fmt("%.6g", r.cell.p) << ',' << r.cell.init_depth
            << ',' << r.samples << ',' << fmt("%.6f", r.span_fraction) << '\n';
    }
}

}  // namespace qhdrg
