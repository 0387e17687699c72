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


#ifndef QHDRG_TABLE_IO_H
#define QHDRG_TABLE_IO_H

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "qhdrg/montecarlo.h"

namespace qhdrg {

/// Header: d,L,T,p,init_depth,trials,successes,p_succ,stderr,seed
std::string batch_csv_header();
void write_batch_csv(std::ostream &out, std::span<const SuccessEstimate> rows);
nlohmann::json batch_json(std::span<const SuccessEstimate> rows);

/// Parses a batch CSV written by write_batch_csv (column order may differ; extra columns are
/// ignored). Throws std::runtime_error on malformed input.
std::vector<SuccessEstimate> read_batch_csv(std::istream &in);

/// Header: d,L,T,p,init_depth,samples,span_fraction
std::string percolation_csv_header();
void write_percolation_csv(std::ostream &out, std::span<const PercolationEstimate> rows);

}  // namespace qhdrg

#endif
