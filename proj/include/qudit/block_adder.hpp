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
#include <stdexcept>
#include <string>
#include <vector>

#include "qudit/adders.hpp"
#include "qudit/compress.hpp"
#include "qudit/ir.hpp"

namespace qudit {

// Zero-external-ancilla adders. The registers are cut into c blocks; while
// one block runs a carry-lookahead sub-adder, every other block is held
// compressed and lends the wires it frees up as ancilla. Carries between
// blocks are parked on ancilla of already-finished blocks and cleared at the
// end by redoing each block's addition without its carry-out.

enum class AdderMode { kAPlusB, kPlusK };

std::string to_string(AdderMode mode);
AdderMode parse_adder_mode(const std::string& text);

class PlanError : public std::invalid_argument {
 public:
  explicit PlanError(const std::string& message)
      : std::invalid_argument(message) {}
};

struct BlockPlan {
  AdderMode mode = AdderMode::kAPlusB;
  CompressionScheme scheme;
  std::size_t n = 0;
  std::size_t c = 0;
  /// Extra zero wires added to the ancilla pool. Always 0 for plans from
  /// plan_blocks; only used to exercise degenerate block counts.
  std::size_t spare_ancilla = 0;

  /// Register wires of each block, in register order (a,b interleaved for
  /// A+B, b only for +K).
  std::vector<std::vector<WireId>> blocks;
  std::vector<CompressedLayout> layouts;
  /// Holds the carry out of block i (i < c-1) between steps: the first
  /// ancilla produced by compressing block i.
  std::vector<WireId> carry_slots;

  /// Ancilla available to the active block: generated by the other c-1
  /// blocks plus spares.
  std::size_t supply = 0;
  /// Sub-adder ancilla requirement plus c-1 carry slots.
  std::size_t demand = 0;

  std::size_t block_bits() const { return n / c; }
  std::size_t register_width() const {
    return mode == AdderMode::kAPlusB ? 2 * n : n;
  }
};

struct BlockFlags {
  bool carry_in = false;
  bool carry_out = false;
};

/// The closed-form worst-case condition
/// floor((c-1) T z / (m c)) >= 2n/c + c - 1, with T = 2n for A+B and n for
/// +K and z/m ancilla per compressed qubit.
bool closed_form_feasible(AdderMode mode, const CompressionScheme& scheme,
                          std::size_t n, std::size_t c);

/// Per-step accounting with blocks compressed separately; requires c | n.
std::size_t exact_supply(AdderMode mode, const CompressionScheme& scheme,
                         std::size_t n, std::size_t c);
std::size_t exact_demand(AdderMode mode, std::size_t n, std::size_t c);
bool exact_feasible(AdderMode mode, const CompressionScheme& scheme,
                    std::size_t n, std::size_t c);

/// Whether c is admissible for plan_blocks: 2 <= c, c | n, closed form and
/// exact accounting both hold.
bool admissible_block_count(AdderMode mode, const CompressionScheme& scheme,
                            std::size_t n, std::size_t c);

struct PlanOutcome {
  std::optional<BlockPlan> plan;
  /// Set when infeasible; names the violated condition.
  std::string reason;
};

/// Smallest admissible c. Infeasible is a value, not an error; callers fall
/// back to the ripple adder.
PlanOutcome plan_blocks(AdderMode mode, const CompressionScheme& scheme,
                        std::size_t n);

/// Smallest c | n passing the exact accounting alone.
std::optional<std::size_t> min_exact_blocks(AdderMode mode,
                                            const CompressionScheme& scheme,
                                            std::size_t n);

/// Builds the plan for a given c, checked against the exact accounting only.
/// Throws PlanError.
BlockPlan make_plan(AdderMode mode, const CompressionScheme& scheme,
                    std::size_t n, std::size_t c, std::size_t spare_ancilla = 0);

struct BlockWiring {
  std::vector<WireId> a;  // empty for +K
  std::vector<WireId> b;
  std::optional<WireId> carry_in;
  std::optional<WireId> carry_out;
  std::vector<WireId> spares;
};

/// Wire order: register wires, spares, cin, cout.
BlockWiring block_wiring(const BlockPlan& plan, const BlockFlags& flags);
Circuit block_circuit_shell(const BlockPlan& plan, const BlockFlags& flags);

/**
 * The three phases of a block adder, each over the full wire list.
 *  forward:   compress all blocks but the first, then per block: add, compress,
 *             park the carry, decompress the next block. Ends with the last
 *             block decompressed and carries parked.
 *  uncompute: compresses the last block, then clears the parked carries in
 *             reverse block order. Ends with every block compressed and every
 *             carry slot at 0.
 *  finish:    decompresses every block.
 */
struct BlockStages {
  Circuit forward;
  Circuit uncompute;
  Circuit finish;
};

/// `k` must be set exactly when plan.mode is +K.
BlockStages build_block_stages(const BlockPlan& plan, const BlockFlags& flags,
                               const std::optional<BigInt>& k = std::nullopt);

Circuit build_block_adder(const BlockPlan& plan, const BlockFlags& flags);
Circuit build_block_plus_k(const BlockPlan& plan, const BigInt& k,
                           const BlockFlags& flags);

/// The carry-clearing phase alone (BlockStages::uncompute).
Circuit uncompute_carries(const BlockPlan& plan, const BlockFlags& flags,
                          const std::optional<BigInt>& k = std::nullopt);

}  // namespace qudit
