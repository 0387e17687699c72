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

#include <gtest/gtest.h>

#include <sstream>

using namespace qhdrg;

TEST(table_io, batch_csv_format) {
    std::vector<SuccessEstimate> rows{
        make_estimate({2, 6, 6, 0.016, 0}, 5000, 4700, 1),
        make_estimate({7919, 12, 12, 0.095, 4}, 2000, 1000, 18446744073709551615ull),
    };
    std::ostringstream out;
    write_batch_csv(out, rows);
    ASSERT_EQ(out.str(),
              "d,L,T,p,init_depth,trials,successes,p_succ,stderr,seed\n"
              "2,6,6,0.016,0,5000,4700,0.940000,0.003359,1\n"
              "7919,12,12,0.095,4,2000,1000,0.500000,0.011180,18446744073709551615\n");
}

TEST(table_io, batch_csv_round_trip) {
    std::vector<SuccessEstimate> rows{
        make_estimate({5, 10, 10, 0.022, 1}, 300, 250, 9),
        make_estimate({17, 8, 4, 0.05, 2}, 10, 0, 9),
    };
    std::stringstream buf;
    write_batch_csv(buf, rows);
    auto back = read_batch_csv(buf);
    ASSERT_EQ(back.size(), 2u);
    for (std::size_t i = 0; i < 2; i++) {
        ASSERT_EQ(back[i].cell, rows[i].cell);
        ASSERT_EQ(back[i].trials, rows[i].trials);
        ASSERT_EQ(back[i].successes, rows[i].successes);
        ASSERT_EQ(back[i].seed, rows[i].seed);
        ASSERT_DOUBLE_EQ(back[i].p_succ, rows[i].p_succ);
    }
}

TEST(table_io, read_reordered_columns) {
    std::istringstream in("seed,successes,trials,init_depth,p,T,L,d,extra\n3,8,10,0,0.02,4,4,2,x\n");
    auto rows = read_batch_csv(in);
    ASSERT_EQ(rows.size(), 1u);
    ASSERT_EQ(rows[0].cell, (CellSpec{2, 4, 4, 0.02, 0}));
    ASSERT_DOUBLE_EQ(rows[0].p_succ, 0.8);
}

TEST(table_io, read_errors) {
    std::istringstream empty("");
    ASSERT_THROW(read_batch_csv(empty), std::runtime_error);
    std::istringstream missing("d,L,T\n2,4,4\n");
    ASSERT_THROW(read_batch_csv(missing), std::runtime_error);
    std::istringstream junk(batch_csv_header() + "\n2,4,4,abc,0,10,5,0.5,0.1,1\n");
    ASSERT_THROW(read_batch_csv(junk), std::runtime_error);
    std::istringstream short_row(batch_csv_header() + "\n2,4,4\n");
    ASSERT_THROW(read_batch_csv(short_row), std::runtime_error);
}

TEST(table_io, batch_json) {
    std::vector<SuccessEstimate> rows{make_estimate({3, 4, 4, 0.5, 0}, 4, 2, 7)};
    auto j = batch_json(rows);
    ASSERT_EQ(j.size(), 1u);
    ASSERT_EQ(j[0]["d"], 3);
    ASSERT_EQ(j[0]["successes"], 2);
    ASSERT_EQ(j[0]["p_succ"], 0.5);
    ASSERT_EQ(j[0]["seed"], 7);
    ASSERT_EQ(j[0].size(), 10u);
}

TEST(table_io, percolation_csv_format) {
    std::vector<PercolationEstimate> rows{{{7919, 16, 16, 0.06, 0}, 200, 190, 0.95, 1}};
    std::ostringstream out;
    write_percolation_csv(out, rows);
    ASSERT_EQ(out.str(), "d,L,T,p,init_depth,samples,span_fraction\n7919,16,16,0.06,0,200,0.950000\n");
}
