// Copyright 2026 The Qudit Adder Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <random>

#include "qudit/compress.hpp"
#include "qudit/resources.hpp"
#include "support.hpp"

namespace qudit {
namespace {

TEST(Report, Compress241) {
  const auto r = report(build_compress_241());
  EXPECT_EQ(r.width, 2u);
  EXPECT_EQ(r.depth, 3u);
  EXPECT_EQ((r.gate_counts.at({2, 4})), 3u);
  EXPECT_EQ(r.gate_counts.size(), 1u);
  EXPECT_EQ(r.max_dim_touched, 4u);
}

TEST(Report, Empty) {
  const auto r = report(Circuit(make_wires(3, 2)));
  EXPECT_EQ(r.total_gates(), 0u);
  EXPECT_EQ(r.depth, 0u);
  EXPECT_EQ(r.max_dim_touched, 0u);
}

TEST(Report, TwoControlledGate) {
  Circuit c(make_wires(3, 3));
  c.append(Gate::flip(2, 0, 1, {{0, 1}, {1, 2}}));
  const auto r = report(c);
  EXPECT_EQ((r.gate_counts.at({3, 3})), 1u);
}

TEST(Report, DimClassIsLargestTouched) {
  Circuit c({{0, "a", 2}, {1, "b", 4}});
  c.append(Gate::cx(1, 0));
  EXPECT_EQ((report(c).gate_counts.at({2, 4})), 1u);
}

TEST(ExpandCostModel, Compress231IsTwentyTwo) {
  const auto r = expand_cost_model(report(build_compress_231()));
  EXPECT_EQ(r.total_gates(), 22u);
  EXPECT_EQ(r.gates_with_arity(2), 12u);
  EXPECT_EQ(r.gates_with_arity(1), 10u);
  EXPECT_FALSE(r.depth_available);
  EXPECT_TRUE(r.cost_model_expanded);
}

TEST(ExpandCostModel, Linearity) {
  Circuit c(make_wires(3, 3));
  c.append(Gate::flip(2, 0, 1, {{0, 1}, {1, 1}}));
  c.append(Gate::flip(0, 0, 2, {{1, 1}, {2, 1}}));
  const auto r = expand_cost_model(report(c));
  EXPECT_EQ(r.gates_with_arity(2), 12u);
  EXPECT_EQ(r.gates_with_arity(1), 20u);
  EXPECT_EQ(r.gates_with_arity(3), 0u);
}

TEST(ExpandCostModel, Properties) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const Circuit c = test_support::random_circuit(rng, 5, rng() % 30);
    const auto raw = report(c);
    std::size_t sum = 0;
    for (const auto& [cls, count] : raw.gate_counts) sum += count;
    EXPECT_EQ(sum, c.size());
    EXPECT_EQ(raw.depth, depth(c));
    const auto expanded = expand_cost_model(raw);
    EXPECT_EQ(expanded.total_gates(), raw.total_gates() + 15 * raw.gates_with_arity(3));
    if (raw.gates_with_arity(3) == 0) EXPECT_EQ(expanded, raw);
  }
}

TEST(Csv, HeaderAndRowAlign) {
  const auto r = report(build_compress_241());
  const auto count = [](const std::string& s) { return std::count(s.begin(), s.end(), ','); };
  EXPECT_EQ(count(csv_header()), count(csv_row(r)));
  EXPECT_EQ(csv_row(r), "2,3,true,3,0,3,0,4,,false");
}

}  // namespace
}  // namespace qudit
