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

#include <span>
#include <string>
#include <vector>

#include "qudit/ir.hpp"

namespace qudit {

/**
 * x-y-z compression: m radix-x digits are stored in n_out radix-y digits and
 * z = m - n_out wires are returned clean. Only 2-3-1 (three qubits into two
 * qutrits) and 2-4-1 (two qubits into one ququart) have circuit builders.
 */
struct CompressionScheme {
  unsigned x = 2;
  unsigned y = 3;
  unsigned z = 1;
  unsigned m = 3;
  unsigned n_out = 2;

  static CompressionScheme scheme_231() { return {2, 3, 1, 3, 2}; }
  static CompressionScheme scheme_241() { return {2, 4, 1, 2, 1}; }

  bool is_231() const { return *this == scheme_231(); }
  bool is_241() const { return *this == scheme_241(); }

  /// "231", "241" or "x-y-z" for other schemes.
  std::string name() const;
  /// Accepts "231", "2-3-1", "241", "2-4-1".
  static CompressionScheme parse(const std::string& text);

  bool operator==(const CompressionScheme&) const = default;
};

/// x^m <= y^n_out with 0 < n_out < m.
bool feasible(unsigned x, unsigned y, unsigned m, unsigned n_out);

struct CompressedGroup {
  std::vector<WireId> orig;
  std::vector<WireId> storage;
  std::vector<WireId> ancilla;
  bool operator==(const CompressedGroup&) const = default;
};

struct CompressedLayout {
  std::vector<CompressedGroup> groups;
  std::vector<WireId> leftover;

  std::vector<WireId> ancilla_wires() const;
  bool operator==(const CompressedLayout&) const = default;
};

// Group compressors over explicit wires of an existing circuit. The last
// wire of each group is the one returned clean.
void append_compress_231(Circuit& c, WireId a, WireId b, WireId last);
void append_compress_241(Circuit& c, WireId a, WireId last);
void append_compress_group(Circuit& c, const CompressionScheme& scheme,
                           std::span<const WireId> group);
/// Inverse of the group compressor; `group`'s final wire must hold 0.
void append_decompress_group(Circuit& c, const CompressionScheme& scheme,
                             std::span<const WireId> group);

/// Standalone 3-wire qutrit circuit (wires A, B, C; binary interface).
Circuit build_compress_231();
/// Standalone circuit over A (dim 4) and B (dim 2); binary interface.
Circuit build_compress_241();
Circuit build_compress(const CompressionScheme& scheme);
Circuit build_decompress(const CompressionScheme& scheme);

/// Compresses consecutive m-tuples of `wires` in place.
CompressedLayout compress_block(Circuit& c, std::span<const WireId> wires,
                                const CompressionScheme& scheme);
/// Layout compress_block would produce, without emitting gates.
CompressedLayout plan_compression(std::span<const WireId> wires,
                                  const CompressionScheme& scheme);
void append_compress_layout(Circuit& c, const CompressedLayout& layout,
                            const CompressionScheme& scheme);
void append_decompress_layout(Circuit& c, const CompressedLayout& layout,
                              const CompressionScheme& scheme);

}  // namespace qudit
