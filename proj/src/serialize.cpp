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

#include "qudit/serialize.hpp"

#include <fstream>
#include <limits>

namespace qudit {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw FormatError("expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw FormatError(std::string("missing field '") + key + "'");
  return *it;
}

const Json& array_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_array()) throw FormatError(std::string("field '") + key + "' must be an array");
  return v;
}

std::uint64_t as_uint(const Json& v, const char* what,
                      std::uint64_t max = std::numeric_limits<std::uint32_t>::max()) {
  if (!v.is_number_integer() ||
      (!v.is_number_unsigned() && v.get<std::int64_t>() < 0)) {
    throw FormatError(std::string(what) + " must be a non-negative integer");
  }
  const auto x = v.get<std::uint64_t>();
  if (x > max) throw FormatError(std::string(what) + " out of range");
  return x;
}

std::vector<WireId> wire_list(const Json& j, const char* key) {
  std::vector<WireId> out;
  for (const Json& v : array_field(j, key)) {
    out.push_back(static_cast<WireId>(as_uint(v, key)));
  }
  return out;
}

Json wire_array(const std::vector<WireId>& wires) {
  Json out = Json::array();
  for (WireId w : wires) out.push_back(w);
  return out;
}

}  // namespace

Json circuit_to_json(const Circuit& c) {
  Json wires = Json::array();
  for (const Wire& w : c.wires()) {
    wires.push_back(Json{{"name", w.name}, {"dim", w.dim}});
  }
  Json gates = Json::array();
  for (const Gate& g : c.gates()) {
    Json gate;
    Json params = Json::array();
    if (const auto* f = std::get_if<Flip>(&g.kind)) {
      gate["kind"] = "flip";
      params = Json::array({f->i, f->j});
    } else if (const auto* inc = std::get_if<Increment>(&g.kind)) {
      gate["kind"] = "incr";
      params = Json::array({inc->k});
    } else {
      gate["kind"] = "swap";
    }
    gate["targets"] = wire_array(g.targets);
    gate["params"] = std::move(params);
    Json controls = Json::array();
    for (const Control& ctl : g.controls) {
      controls.push_back(Json{{"wire", ctl.wire}, {"value", ctl.value}});
    }
    gate["controls"] = std::move(controls);
    gates.push_back(std::move(gate));
  }
  return Json{{"wires", std::move(wires)}, {"gates", std::move(gates)}};
}

Circuit circuit_from_json(const Json& j) {
  std::vector<Wire> wires;
  for (const Json& w : array_field(j, "wires")) {
    const Json& name = field(w, "name");
    if (!name.is_string()) throw FormatError("wire name must be a string");
    const auto dim = as_uint(field(w, "dim"), "wire dim", kMaxDim);
    wires.push_back(Wire{static_cast<WireId>(wires.size()),
                         name.get<std::string>(), static_cast<unsigned>(dim)});
  }
  try {
    Circuit c(std::move(wires));
    std::size_t index = 0;
    for (const Json& g : array_field(j, "gates")) {
      const Json& kind = field(g, "kind");
      if (!kind.is_string()) throw FormatError("gate kind must be a string");
      const std::string k = kind.get<std::string>();
      std::vector<Digit> params;
      for (const Json& p : array_field(g, "params")) {
        params.push_back(static_cast<Digit>(as_uint(p, "gate param", kMaxDim)));
      }
      Gate gate;
      gate.targets = wire_list(g, "targets");
      for (const Json& ctl : array_field(g, "controls")) {
        gate.controls.push_back(
            {static_cast<WireId>(as_uint(field(ctl, "wire"), "control wire")),
             static_cast<Digit>(as_uint(field(ctl, "value"), "control value", kMaxDim))});
      }
      auto expect_params = [&](std::size_t count) {
        if (params.size() != count) {
          throw FormatError("gate " + std::to_string(index) + ": '" + k +
                            "' takes " + std::to_string(count) + " params");
        }
      };
      if (k == "flip") {
        expect_params(2);
        gate.kind = Flip{params[0], params[1]};
      } else if (k == "incr") {
        expect_params(1);
        gate.kind = Increment{params[0]};
      } else if (k == "swap") {
        expect_params(0);
        gate.kind = Swap{};
      } else {
        throw FormatError("gate " + std::to_string(index) + ": unknown kind '" + k + "'");
      }
      try {
        c.append(std::move(gate));
      } catch (const CircuitError& e) {
        throw FormatError("gate " + std::to_string(index) + ": " + e.what());
      }
      ++index;
    }
    return c;
  } catch (const FormatError&) {
    throw;
  } catch (const CircuitError& e) {
    throw FormatError(e.what());
  }
}

Json layout_to_json(const CompressedLayout& layout) {
  Json groups = Json::array();
  for (const auto& g : layout.groups) {
    groups.push_back(Json{{"orig", wire_array(g.orig)},
                          {"storage", wire_array(g.storage)},
                          {"ancilla", wire_array(g.ancilla)}});
  }
  return Json{{"groups", std::move(groups)},
              {"leftover", wire_array(layout.leftover)}};
}

CompressedLayout layout_from_json(const Json& j) {
  CompressedLayout layout;
  for (const Json& g : array_field(j, "groups")) {
    layout.groups.push_back(CompressedGroup{wire_list(g, "orig"),
                                            wire_list(g, "storage"),
                                            wire_list(g, "ancilla")});
  }
  layout.leftover = wire_list(j, "leftover");
  return layout;
}

Json plan_to_json(const BlockPlan& plan) {
  Json blocks = Json::array();
  for (const auto& b : plan.blocks) blocks.push_back(wire_array(b));
  return Json{{"mode", to_string(plan.mode)},
              {"scheme", plan.scheme.name()},
              {"n", plan.n},
              {"c", plan.c},
              {"blocks", std::move(blocks)},
              {"carry_slots", wire_array(plan.carry_slots)}};
}

BlockPlan plan_from_json(const Json& j) {
  const Json& mode = field(j, "mode");
  const Json& scheme = field(j, "scheme");
  if (!mode.is_string() || !scheme.is_string()) {
    throw FormatError("plan mode and scheme must be strings");
  }
  BlockPlan plan;
  try {
    plan = make_plan(parse_adder_mode(mode.get<std::string>()),
                     CompressionScheme::parse(scheme.get<std::string>()),
                     as_uint(field(j, "n"), "n"), as_uint(field(j, "c"), "c"));
  } catch (const FormatError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("plan: ") + e.what());
  }
  std::vector<std::vector<WireId>> blocks;
  for (const Json& b : array_field(j, "blocks")) {
    if (!b.is_array()) throw FormatError("plan blocks must be arrays");
    std::vector<WireId> ids;
    for (const Json& v : b) ids.push_back(static_cast<WireId>(as_uint(v, "block wire")));
    blocks.push_back(std::move(ids));
  }
  if (blocks != plan.blocks || wire_list(j, "carry_slots") != plan.carry_slots) {
    throw FormatError("plan blocks or carry slots do not match the layout for "
                      "these parameters");
  }
  return plan;
}

std::size_t plan_ancilla_generated(const BlockPlan& plan) {
  std::size_t total = 0;
  for (const auto& layout : plan.layouts) total += layout.ancilla_wires().size();
  return total;
}

Json report_to_json(const ResourceReport& r) {
  Json counts = Json::array();
  for (const auto& [cls, count] : r.gate_counts) {
    counts.push_back(Json{{"arity", cls.first}, {"dim", cls.second}, {"count", count}});
  }
  Json out{{"width", r.width},
           {"depth", r.depth},
           {"depth_available", r.depth_available},
           {"total_gates", r.total_gates()},
           {"gate_counts", std::move(counts)},
           {"max_dim_touched", r.max_dim_touched}};
  out["ancilla_generated"] =
      r.ancilla_generated ? Json(*r.ancilla_generated) : Json(nullptr);
  out["cost_model_expanded"] = r.cost_model_expanded;
  return out;
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace qudit
