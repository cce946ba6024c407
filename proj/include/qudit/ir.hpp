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
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace qudit {

using WireId = std::uint32_t;
using Digit = std::uint8_t;

// Largest wire capacity the toolkit accepts. Digits are stored as bytes.
inline constexpr unsigned kMaxDim = 255;

class CircuitError : public std::invalid_argument {
 public:
  explicit CircuitError(const std::string& message)
      : std::invalid_argument(message) {}
};

/**
 * A physical qudit line. `dim` is the device capacity: a wire with dim 3 may
 * carry qubit data at its interface and use level 2 only in the interior of a
 * computation.
 */
struct Wire {
  WireId id = 0;
  std::string name;
  unsigned dim = 2;

  bool operator==(const Wire&) const = default;
};

/// X_ij: exchanges levels i and j, all other levels fixed.
struct Flip {
  Digit i = 0;
  Digit j = 1;
  bool operator==(const Flip&) const = default;
};

/// X_{+k}: adds k modulo the target dimension.
struct Increment {
  Digit k = 1;
  bool operator==(const Increment&) const = default;
};

/// Exchanges the digits of two equal-dimension wires.
struct Swap {
  bool operator==(const Swap&) const = default;
};

using GateKind = std::variant<Flip, Increment, Swap>;

struct Control {
  WireId wire = 0;
  Digit value = 1;
  bool operator==(const Control&) const = default;
};

inline constexpr std::size_t kMaxControls = 2;

struct Gate {
  GateKind kind;
  std::vector<WireId> targets;
  std::vector<Control> controls;

  static Gate flip(WireId target, Digit i, Digit j,
                   std::vector<Control> controls = {});
  static Gate increment(WireId target, Digit k,
                        std::vector<Control> controls = {});
  static Gate swap(WireId a, WireId b);

  // Qubit shorthands: X_01 with value-1 controls.
  static Gate x(WireId target) { return flip(target, 0, 1); }
  static Gate cx(WireId control, WireId target) {
    return flip(target, 0, 1, {{control, 1}});
  }
  static Gate ccx(WireId c0, WireId c1, WireId target) {
    return flip(target, 0, 1, {{c0, 1}, {c1, 1}});
  }

  /// Targets followed by control wires.
  std::vector<WireId> touched_wires() const;
  std::size_t arity() const { return targets.size() + controls.size(); }

  bool operator==(const Gate&) const = default;
};

/**
 * Ordered gate list over dimensioned wires. Every appended gate is validated
 * against the wire list, so a Circuit value is always well formed.
 *
 * Each wire also carries an interface bound: the size of the input alphabet
 * promised by callers (2 for qubit data stored on a qutrit line). The bound
 * never exceeds the wire's dim and defaults to it.
 */
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(std::vector<Wire> wires);

  const std::vector<Wire>& wires() const { return wires_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t width() const { return wires_.size(); }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  const Wire& wire(WireId id) const;
  unsigned dim(WireId id) const { return wire(id).dim; }

  unsigned interface_bound(WireId id) const;
  void set_interface_bound(WireId id, unsigned bound);
  const std::vector<unsigned>& interface_bounds() const { return interface_; }

  /// Throws CircuitError if the gate does not validate against the wires.
  void validate(const Gate& gate) const;

  void append(Gate gate);
  void append(const Circuit& other);
  /// Appends `sub` with its wire i relabelled to `wire_map[i]`.
  void append_mapped(const Circuit& sub, std::span<const WireId> wire_map);

  /// Same wires and interface, no gates.
  Circuit empty_copy() const;

  bool same_wires(const Circuit& other) const { return wires_ == other.wires_; }

  bool operator==(const Circuit&) const = default;

 private:
  std::vector<Wire> wires_;
  std::vector<unsigned> interface_;
  std::vector<Gate> gates_;
};

/// Builds wires 0..n-1 named by `prefix` + index.
std::vector<Wire> make_wires(std::size_t count, unsigned dim,
                             const std::string& prefix = "q");

Circuit new_circuit(std::vector<Wire> wires);

/// Pure append: returns a copy of `c` with `g` at the end.
Circuit append_gate(const Circuit& c, Gate g);

/// Reverses the gate order and replaces each Increment(k) with
/// Increment(d - k); flips and swaps are their own inverses.
Circuit inverse(const Circuit& c);

Gate inverse_gate(const Gate& g, unsigned target_dim);

Circuit concat(const Circuit& a, const Circuit& b);

/// ASAP layering: a gate lands one layer above the latest gate sharing any
/// wire with it, controls included. Empty circuit has depth 0.
std::size_t depth(const Circuit& c);

/// Layer index (1-based) of every gate under the same ASAP schedule.
std::vector<std::size_t> asap_layers(const Circuit& c);

}  // namespace qudit
