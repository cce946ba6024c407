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

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "qudit/ir.hpp"

namespace qudit {

/// (arity, dim class). Arity counts targets plus controls; the dim class is
/// the largest capacity among the wires a gate touches.
using GateClass = std::pair<unsigned, unsigned>;

struct ResourceReport {
  std::size_t width = 0;
  std::size_t depth = 0;
  /// False once the cost model has been applied; `depth` is then the
  /// pre-expansion value.
  bool depth_available = true;
  bool cost_model_expanded = false;
  std::map<GateClass, std::size_t> gate_counts;
  unsigned max_dim_touched = 0;
  std::optional<std::size_t> ancilla_generated;

  std::size_t total_gates() const;
  std::size_t gates_with_arity(unsigned arity) const;

  bool operator==(const ResourceReport&) const = default;
};

ResourceReport report(const Circuit& c);

/// Two-qudit gates charged per 2-controlled gate.
inline constexpr std::size_t kExpandTwoQudit = 6;
/// Single-qudit gates charged per 2-controlled gate.
inline constexpr std::size_t kExpandSingleQudit = 10;

/// Replaces every arity-3 count by 6 arity-2 and 10 arity-1 gates of the same
/// dim class.
ResourceReport expand_cost_model(const ResourceReport& r);

std::string csv_header();
std::string csv_row(const ResourceReport& r);

}  // namespace qudit
