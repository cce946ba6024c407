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
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qudit/ir.hpp"

namespace qudit {

using BigInt = boost::multiprecision::cpp_int;

struct AdderSpec {
  std::size_t n = 1;
  bool carry_in = false;
  bool carry_out = false;
};

/**
 * Wire roles for a binary sub-adder. Registers are least significant bit
 * first. `a` is empty for the constant adder. The carry-out wire must hold 0
 * on entry and receives the carry; it is not restored. Ancilla are returned
 * to 0.
 */
struct AdderWiring {
  std::vector<WireId> a;
  std::vector<WireId> b;
  std::optional<WireId> carry_in;
  std::optional<WireId> carry_out;
  std::vector<WireId> ancilla;
};

std::size_t popcount(std::size_t m);
std::size_t floor_log2(std::size_t m);

/// 2m - w(m) - floor(log2 m).
std::size_t ancilla_required(std::size_t m);
/// Worst case for the constant adder: ancilla_required(m) - 1.
std::size_t ancilla_required_plus_k(std::size_t m);
/// Ancilla the carry-lookahead construction actually touches for `spec`;
/// identical for the register and constant variants.
std::size_t cla_ancilla_used(const AdderSpec& spec);

// Emitters over an existing circuit. They validate the wiring and throw
// CircuitError on collisions, size mismatches or short ancilla supply.
void append_cla_adder(Circuit& c, const AdderSpec& spec,
                      const AdderWiring& wiring);
void append_plus_k(Circuit& c, const AdderSpec& spec, const AdderWiring& wiring,
                   const BigInt& k);
void append_ripple_adder(Circuit& c, const AdderSpec& spec,
                         const AdderWiring& wiring);

/// Wires a0.., b0.., cin, cout, anc0.. in that order, all dim 2.
AdderWiring standard_wiring(const AdderSpec& spec, bool with_a,
                            std::size_t ancilla);
Circuit standard_adder_circuit(const AdderSpec& spec, const AdderWiring& wiring);

/// Standalone circuits with the standard wiring and exactly the formula
/// ancilla budget (none for the ripple adder).
Circuit build_cla_adder(const AdderSpec& spec);
Circuit build_plus_k(const AdderSpec& spec, const BigInt& k);
Circuit build_ripple_adder(const AdderSpec& spec);

}  // namespace qudit
