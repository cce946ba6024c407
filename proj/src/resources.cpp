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

#include "qudit/resources.hpp"

#include <algorithm>

namespace qudit {

std::size_t ResourceReport::total_gates() const {
  std::size_t total = 0;
  for (const auto& [cls, count] : gate_counts) total += count;
  return total;
}

std::size_t ResourceReport::gates_with_arity(unsigned arity) const {
  std::size_t total = 0;
  for (const auto& [cls, count] : gate_counts) {
    if (cls.first == arity) total += count;
  }
  return total;
}

ResourceReport report(const Circuit& c) {
  ResourceReport r;
  r.width = c.width();
  r.depth = depth(c);
  for (const Gate& g : c.gates()) {
    unsigned dim = 0;
    for (WireId w : g.touched_wires()) dim = std::max(dim, c.dim(w));
    ++r.gate_counts[{static_cast<unsigned>(g.arity()), dim}];
    r.max_dim_touched = std::max(r.max_dim_touched, dim);
  }
  return r;
}

ResourceReport expand_cost_model(const ResourceReport& r) {
  ResourceReport out = r;
  out.gate_counts.clear();
  bool expanded = false;
  for (const auto& [cls, count] : r.gate_counts) {
    if (cls.first == 3) {
      out.gate_counts[{2, cls.second}] += kExpandTwoQudit * count;
      out.gate_counts[{1, cls.second}] += kExpandSingleQudit * count;
      expanded = true;
    } else {
      out.gate_counts[cls] += count;
    }
  }
  if (expanded) {
    out.depth_available = false;
    out.cost_model_expanded = true;
  }
  return out;
}

std::string csv_header() {
  return "width,depth,depth_available,total_gates,arity1,arity2,arity3,"
         "max_dim_touched,ancilla_generated,cost_model_expanded";
}

std::string csv_row(const ResourceReport& r) {
  std::string row;
  auto field = [&row](const std::string& v) {
    if (!row.empty()) row += ',';
    row += v;
  };
  field(std::to_string(r.width));
  field(std::to_string(r.depth));
  field(r.depth_available ? "true" : "false");
  field(std::to_string(r.total_gates()));
  for (unsigned arity = 1; arity <= 3; ++arity) {
    field(std::to_string(r.gates_with_arity(arity)));
  }
  field(std::to_string(r.max_dim_touched));
  field(r.ancilla_generated ? std::to_string(*r.ancilla_generated) : "");
  field(r.cost_model_expanded ? "true" : "false");
  return row;
}

}  // namespace qudit
