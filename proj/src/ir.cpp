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

#include "qudit/ir.hpp"

#include <algorithm>

namespace qudit {

Gate Gate::flip(WireId target, Digit i, Digit j, std::vector<Control> controls) {
  return Gate{Flip{i, j}, {target}, std::move(controls)};
}

Gate Gate::increment(WireId target, Digit k, std::vector<Control> controls) {
  return Gate{Increment{k}, {target}, std::move(controls)};
}

Gate Gate::swap(WireId a, WireId b) { return Gate{Swap{}, {a, b}, {}}; }

std::vector<WireId> Gate::touched_wires() const {
  std::vector<WireId> out = targets;
  for (const auto& ctrl : controls) out.push_back(ctrl.wire);
  return out;
}

Circuit::Circuit(std::vector<Wire> wires) : wires_(std::move(wires)) {
  for (std::size_t i = 0; i < wires_.size(); ++i) {
    const Wire& w = wires_[i];
    if (w.id != i) {
      throw CircuitError("wire ids must be contiguous from 0; position " +
                         std::to_string(i) + " has id " + std::to_string(w.id));
    }
    if (w.dim < 2 || w.dim > kMaxDim) {
      throw CircuitError("wire " + std::to_string(i) + " has dim " +
                         std::to_string(w.dim) + "; need 2 <= dim <= " +
                         std::to_string(kMaxDim));
    }
  }
  interface_.reserve(wires_.size());
  for (const auto& w : wires_) interface_.push_back(w.dim);
}

const Wire& Circuit::wire(WireId id) const {
  if (id >= wires_.size()) {
    throw CircuitError("wire " + std::to_string(id) + " out of range (width " +
                       std::to_string(wires_.size()) + ")");
  }
  return wires_[id];
}

unsigned Circuit::interface_bound(WireId id) const {
  wire(id);
  return interface_[id];
}

void Circuit::set_interface_bound(WireId id, unsigned bound) {
  const unsigned d = dim(id);
  if (bound < 1 || bound > d) {
    throw CircuitError("interface bound " + std::to_string(bound) +
                       " invalid for wire " + std::to_string(id) + " of dim " +
                       std::to_string(d));
  }
  interface_[id] = bound;
}

void Circuit::validate(const Gate& gate) const {
  if (gate.targets.empty() || gate.targets.size() > 2) {
    throw CircuitError("gate needs one or two targets");
  }
  if (gate.controls.size() > kMaxControls) {
    throw CircuitError("at most two controls are supported");
  }
  std::vector<WireId> seen;
  for (WireId w : gate.touched_wires()) {
    wire(w);
    if (std::find(seen.begin(), seen.end(), w) != seen.end()) {
      throw CircuitError("wire " + std::to_string(w) +
                         " used twice by one gate");
    }
    seen.push_back(w);
  }
  for (const auto& ctrl : gate.controls) {
    if (ctrl.value >= dim(ctrl.wire)) {
      throw CircuitError("control value " + std::to_string(ctrl.value) +
                         " not below dim " + std::to_string(dim(ctrl.wire)) +
                         " of wire " + std::to_string(ctrl.wire));
    }
  }
  const bool is_swap = std::holds_alternative<Swap>(gate.kind);
  if (is_swap != (gate.targets.size() == 2)) {
    throw CircuitError("swap takes exactly two targets, other gates one");
  }
  const unsigned d = dim(gate.targets[0]);
  if (const auto* f = std::get_if<Flip>(&gate.kind)) {
    if (f->i == f->j || f->i >= d || f->j >= d) {
      throw CircuitError("flip levels (" + std::to_string(f->i) + "," +
                         std::to_string(f->j) + ") invalid for dim " +
                         std::to_string(d));
    }
  } else if (const auto* inc = std::get_if<Increment>(&gate.kind)) {
    if (inc->k == 0 || inc->k >= d) {
      throw CircuitError("increment " + std::to_string(inc->k) +
                         " invalid for dim " + std::to_string(d));
    }
  } else {
    if (!gate.controls.empty()) {
      throw CircuitError("controlled swap is not supported");
    }
    if (dim(gate.targets[1]) != d) {
      throw CircuitError("swap targets must have equal dim");
    }
  }
}

void Circuit::append(Gate gate) {
  validate(gate);
  gates_.push_back(std::move(gate));
}

void Circuit::append(const Circuit& other) {
  if (!same_wires(other)) {
    throw CircuitError("cannot append a circuit over different wires");
  }
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
}

void Circuit::append_mapped(const Circuit& sub,
                            std::span<const WireId> wire_map) {
  if (wire_map.size() != sub.width()) {
    throw CircuitError("wire map has " + std::to_string(wire_map.size()) +
                       " entries for a width-" + std::to_string(sub.width()) +
                       " subcircuit");
  }
  for (const Gate& g : sub.gates()) {
    Gate mapped = g;
    for (auto& t : mapped.targets) t = wire_map[t];
    for (auto& ctrl : mapped.controls) ctrl.wire = wire_map[ctrl.wire];
    append(std::move(mapped));
  }
}

Circuit Circuit::empty_copy() const {
  Circuit out;
  out.wires_ = wires_;
  out.interface_ = interface_;
  return out;
}

std::vector<Wire> make_wires(std::size_t count, unsigned dim,
                             const std::string& prefix) {
  std::vector<Wire> wires;
  wires.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    wires.push_back(
        Wire{static_cast<WireId>(i), prefix + std::to_string(i), dim});
  }
  return wires;
}

Circuit new_circuit(std::vector<Wire> wires) { return Circuit(std::move(wires)); }

Circuit append_gate(const Circuit& c, Gate g) {
  Circuit out = c;
  out.append(std::move(g));
  return out;
}

Gate inverse_gate(const Gate& g, unsigned target_dim) {
  Gate out = g;
  if (const auto* inc = std::get_if<Increment>(&g.kind)) {
    out.kind = Increment{static_cast<Digit>(target_dim - inc->k)};
  }
  return out;
}

Circuit inverse(const Circuit& c) {
  Circuit out = c.empty_copy();
  const auto& gates = c.gates();
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
    out.append(inverse_gate(*it, c.dim(it->targets[0])));
  }
  return out;
}

Circuit concat(const Circuit& a, const Circuit& b) {
  if (!a.same_wires(b)) {
    throw CircuitError("concat requires identical wire lists");
  }
  Circuit out = a;
  out.append(b);
  return out;
}

std::vector<std::size_t> asap_layers(const Circuit& c) {
  std::vector<std::size_t> frontier(c.width(), 0);
  std::vector<std::size_t> layers;
  layers.reserve(c.size());
  for (const Gate& g : c.gates()) {
    std::size_t layer = 0;
    for (WireId w : g.targets) layer = std::max(layer, frontier[w]);
    for (const auto& ctrl : g.controls) {
      layer = std::max(layer, frontier[ctrl.wire]);
    }
    ++layer;
    for (WireId w : g.targets) frontier[w] = layer;
    for (const auto& ctrl : g.controls) frontier[ctrl.wire] = layer;
    layers.push_back(layer);
  }
  return layers;
}

std::size_t depth(const Circuit& c) {
  const auto layers = asap_layers(c);
  return layers.empty() ? 0 : *std::max_element(layers.begin(), layers.end());
}

}  // namespace qudit
