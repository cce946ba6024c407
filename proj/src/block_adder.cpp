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

#include "qudit/block_adder.hpp"

#include <algorithm>
#include <set>

namespace qudit {

std::string to_string(AdderMode mode) {
  return mode == AdderMode::kAPlusB ? "A+B" : "+K";
}

AdderMode parse_adder_mode(const std::string& text) {
  if (text == "A+B" || text == "a+b") return AdderMode::kAPlusB;
  if (text == "+K" || text == "+k") return AdderMode::kPlusK;
  throw std::invalid_argument("unknown adder mode '" + text + "'");
}

namespace {

std::size_t register_bits(AdderMode mode, std::size_t n) {
  return mode == AdderMode::kAPlusB ? 2 * n : n;
}

std::size_t sub_adder_requirement(AdderMode mode, std::size_t bits) {
  return mode == AdderMode::kAPlusB ? ancilla_required(bits)
                                    : ancilla_required_plus_k(bits);
}

std::string inequality_text(AdderMode mode, const CompressionScheme& scheme) {
  const std::string total = mode == AdderMode::kAPlusB ? "2n" : "n";
  std::string ratio = std::to_string(scheme.m);
  if (scheme.z != 1) ratio = std::to_string(scheme.z) + "/" + ratio;
  return "floor((c-1)*" + total + "/(" + ratio + "c)) >= 2n/c + c - 1";
}

}  // namespace

bool closed_form_feasible(AdderMode mode, const CompressionScheme& scheme,
                          std::size_t n, std::size_t c) {
  if (c < 1 || n < 1) return false;
  const std::size_t generated =
      ((c - 1) * register_bits(mode, n) * scheme.z) / (scheme.m * c);
  // generated >= 2n/c + c - 1, multiplied through by c.
  return generated * c >= 2 * n + c * (c - 1);
}

std::size_t exact_supply(AdderMode mode, const CompressionScheme& scheme,
                         std::size_t n, std::size_t c) {
  if (c < 1 || n % c != 0) return 0;
  const std::size_t per_block =
      (register_bits(mode, n / c) / scheme.m) * scheme.z;
  return (c - 1) * per_block;
}

std::size_t exact_demand(AdderMode mode, std::size_t n, std::size_t c) {
  if (c < 1 || n % c != 0) return 0;
  return sub_adder_requirement(mode, n / c) + (c - 1);
}

bool exact_feasible(AdderMode mode, const CompressionScheme& scheme,
                    std::size_t n, std::size_t c) {
  if (c < 2 || n % c != 0) return false;
  // Every block but the last must produce a wire to park its carry on.
  if (register_bits(mode, n / c) < scheme.m) return false;
  return exact_supply(mode, scheme, n, c) >= exact_demand(mode, n, c);
}

bool admissible_block_count(AdderMode mode, const CompressionScheme& scheme,
                            std::size_t n, std::size_t c) {
  return c >= 2 && n % c == 0 && closed_form_feasible(mode, scheme, n, c) &&
         exact_feasible(mode, scheme, n, c);
}

std::optional<std::size_t> min_exact_blocks(AdderMode mode,
                                            const CompressionScheme& scheme,
                                            std::size_t n) {
  for (std::size_t c = 2; c <= n; ++c) {
    if (exact_feasible(mode, scheme, n, c)) return c;
  }
  return std::nullopt;
}

PlanOutcome plan_blocks(AdderMode mode, const CompressionScheme& scheme,
                        std::size_t n) {
  PlanOutcome out;
  if (!scheme.is_231() && !scheme.is_241()) {
    out.reason = "no compression circuit for scheme " + scheme.name();
    return out;
  }
  for (std::size_t c = 2; c <= n; ++c) {
    if (admissible_block_count(mode, scheme, n, c)) {
      out.plan = make_plan(mode, scheme, n, c);
      return out;
    }
  }
  out.reason = "infeasible: no block count c >= 2 with c | n satisfies " +
               inequality_text(mode, scheme) + " (scheme " + scheme.name() +
               ", " + to_string(mode) + ", n=" + std::to_string(n) +
               ") together with exact per-step ancilla accounting";
  return out;
}

BlockPlan make_plan(AdderMode mode, const CompressionScheme& scheme,
                    std::size_t n, std::size_t c, std::size_t spare_ancilla) {
  if (!scheme.is_231() && !scheme.is_241()) {
    throw PlanError("no compression circuit for scheme " + scheme.name());
  }
  if (c < 2) throw PlanError("block count must be at least 2");
  if (n == 0 || n % c != 0) {
    throw PlanError("block count " + std::to_string(c) +
                    " does not divide register size " + std::to_string(n));
  }
  BlockPlan plan;
  plan.mode = mode;
  plan.scheme = scheme;
  plan.n = n;
  plan.c = c;
  plan.spare_ancilla = spare_ancilla;

  const std::size_t per_block = register_bits(mode, n / c);
  if (per_block < scheme.m) {
    throw PlanError("blocks of " + std::to_string(per_block) +
                    " wires cannot be compressed by scheme " + scheme.name());
  }
  for (std::size_t i = 0; i < c; ++i) {
    std::vector<WireId> wires;
    for (std::size_t j = 0; j < per_block; ++j) {
      wires.push_back(static_cast<WireId>(i * per_block + j));
    }
    plan.layouts.push_back(plan_compression(wires, scheme));
    plan.blocks.push_back(std::move(wires));
  }
  for (std::size_t i = 0; i + 1 < c; ++i) {
    plan.carry_slots.push_back(plan.layouts[i].groups.front().ancilla.front());
  }
  plan.supply = exact_supply(mode, scheme, n, c) + spare_ancilla;
  plan.demand = exact_demand(mode, n, c);
  if (plan.supply < plan.demand) {
    throw PlanError("exact accounting fails for c=" + std::to_string(c) +
                    ": " + std::to_string(plan.supply) +
                    " ancilla available per step, " +
                    std::to_string(plan.demand) + " needed");
  }
  return plan;
}

BlockWiring block_wiring(const BlockPlan& plan, const BlockFlags& flags) {
  BlockWiring w;
  const WireId reg = static_cast<WireId>(plan.register_width());
  for (std::size_t i = 0; i < plan.n; ++i) {
    if (plan.mode == AdderMode::kAPlusB) {
      w.a.push_back(static_cast<WireId>(2 * i));
      w.b.push_back(static_cast<WireId>(2 * i + 1));
    } else {
      w.b.push_back(static_cast<WireId>(i));
    }
  }
  WireId next = reg;
  for (std::size_t i = 0; i < plan.spare_ancilla; ++i) w.spares.push_back(next++);
  if (flags.carry_in) w.carry_in = next++;
  if (flags.carry_out) w.carry_out = next++;
  return w;
}

Circuit block_circuit_shell(const BlockPlan& plan, const BlockFlags& flags) {
  const BlockWiring w = block_wiring(plan, flags);
  std::vector<Wire> wires;
  for (std::size_t i = 0; i < plan.n; ++i) {
    if (plan.mode == AdderMode::kAPlusB) {
      wires.push_back({w.a[i], "a" + std::to_string(i), plan.scheme.y});
    }
    wires.push_back({w.b[i], "b" + std::to_string(i), plan.scheme.y});
  }
  for (std::size_t i = 0; i < w.spares.size(); ++i) {
    wires.push_back({w.spares[i], "spare" + std::to_string(i), plan.scheme.y});
  }
  if (w.carry_in) wires.push_back({*w.carry_in, "cin", 2});
  if (w.carry_out) wires.push_back({*w.carry_out, "cout", 2});
  Circuit c(std::move(wires));
  for (std::size_t i = 0; i < plan.register_width(); ++i) {
    c.set_interface_bound(static_cast<WireId>(i), 2);
  }
  return c;
}

namespace {

class BlockBuilder {
 public:
  BlockBuilder(const BlockPlan& plan, const BlockFlags& flags,
               const std::optional<BigInt>& k)
      : plan_(plan),
        k_(k),
        wiring_(block_wiring(plan, flags)),
        shell_(block_circuit_shell(plan, flags)),
        compressed_(plan.c, false) {
    if (plan.blocks.size() != plan.c || plan.carry_slots.size() + 1 != plan.c) {
      throw PlanError("malformed block plan");
    }
    if ((plan.mode == AdderMode::kPlusK) != k.has_value()) {
      throw PlanError("constant must be given exactly for +K plans");
    }
    if (k && (*k < 0 || *k >= (BigInt(1) << plan.n))) {
      throw PlanError("constant does not fit in " + std::to_string(plan.n) +
                      " bits");
    }
  }

  BlockStages build() {
    BlockStages stages{shell_.empty_copy(), shell_.empty_copy(),
                       shell_.empty_copy()};
    forward(stages.forward);
    uncompute(stages.uncompute);
    for (std::size_t i = 0; i < plan_.c; ++i) decompress(stages.finish, i);
    return stages;
  }

 private:
  void forward(Circuit& out) {
    const std::size_t c = plan_.c;
    for (std::size_t i = 1; i < c; ++i) compress(out, i);
    for (std::size_t i = 0; i < c; ++i) {
      auto pool = free_ancilla(i);
      if (i + 1 < c) {
        const WireId carry = take_front(pool);
        add(out, i, carry_in_for(i), carry, pool);
        compress(out, i);
        out.append(Gate::swap(carry, plan_.carry_slots[i]));
        live_.insert(plan_.carry_slots[i]);
        decompress(out, i + 1);
      } else {
        add(out, i, carry_in_for(i), wiring_.carry_out, pool);
      }
    }
  }

  void uncompute(Circuit& out) {
    const std::size_t c = plan_.c;
    compress(out, c - 1);
    for (std::size_t i = c - 1; i-- > 0;) {
      live_.erase(plan_.carry_slots[i]);
      auto pool = free_ancilla(i);
      const WireId carry = take_front(pool);
      out.append(Gate::swap(plan_.carry_slots[i], carry));
      decompress(out, i);

      Circuit with_carry = shell_.empty_copy();
      add(with_carry, i, carry_in_for(i), carry, pool);
      out.append(inverse(with_carry));

      pool.insert(pool.begin(), carry);
      add(out, i, carry_in_for(i), std::nullopt, pool);
      compress(out, i);
    }
  }

  std::optional<WireId> carry_in_for(std::size_t block) const {
    return block == 0 ? wiring_.carry_in
                      : std::optional<WireId>(plan_.carry_slots[block - 1]);
  }

  static WireId take_front(std::vector<WireId>& pool) {
    if (pool.empty()) throw PlanError("no free ancilla for carry-out");
    const WireId w = pool.front();
    pool.erase(pool.begin());
    return w;
  }

  // Zero wires usable while `active` is decompressed, ascending.
  std::vector<WireId> free_ancilla(std::size_t active) const {
    std::vector<WireId> pool = wiring_.spares;
    for (std::size_t j = 0; j < plan_.c; ++j) {
      if (j == active || !compressed_[j]) continue;
      for (WireId w : plan_.layouts[j].ancilla_wires()) {
        if (!live_.contains(w)) pool.push_back(w);
      }
    }
    std::sort(pool.begin(), pool.end());
    return pool;
  }

  void add(Circuit& out, std::size_t block, std::optional<WireId> carry_in,
           std::optional<WireId> carry_out, std::vector<WireId> pool) const {
    const std::size_t bits = plan_.block_bits();
    AdderSpec spec{bits, carry_in.has_value(), carry_out.has_value()};
    AdderWiring w;
    for (std::size_t j = 0; j < bits; ++j) {
      const std::size_t bit = block * bits + j;
      if (plan_.mode == AdderMode::kAPlusB) w.a.push_back(wiring_.a[bit]);
      w.b.push_back(wiring_.b[bit]);
    }
    w.carry_in = carry_in;
    w.carry_out = carry_out;
    const std::size_t need = sub_adder_requirement(plan_.mode, bits);
    if (pool.size() < need) {
      throw PlanError("block " + std::to_string(block) + " needs " +
                      std::to_string(need) + " ancilla, " +
                      std::to_string(pool.size()) + " free");
    }
    pool.resize(need);
    w.ancilla = std::move(pool);
    if (plan_.mode == AdderMode::kAPlusB) {
      append_cla_adder(out, spec, w);
    } else {
      const BigInt slice =
          (*k_ >> (block * bits)) & ((BigInt(1) << bits) - 1);
      append_plus_k(out, spec, w, slice);
    }
  }

  void compress(Circuit& out, std::size_t block) {
    append_compress_layout(out, plan_.layouts[block], plan_.scheme);
    compressed_[block] = true;
  }

  void decompress(Circuit& out, std::size_t block) {
    append_decompress_layout(out, plan_.layouts[block], plan_.scheme);
    compressed_[block] = false;
  }

  const BlockPlan& plan_;
  const std::optional<BigInt>& k_;
  BlockWiring wiring_;
  Circuit shell_;
  std::vector<bool> compressed_;
  std::set<WireId> live_;
};

}  // namespace

BlockStages build_block_stages(const BlockPlan& plan, const BlockFlags& flags,
                               const std::optional<BigInt>& k) {
  return BlockBuilder(plan, flags, k).build();
}

Circuit build_block_adder(const BlockPlan& plan, const BlockFlags& flags) {
  if (plan.mode != AdderMode::kAPlusB) {
    throw PlanError("build_block_adder needs an A+B plan");
  }
  auto stages = build_block_stages(plan, flags);
  Circuit out = std::move(stages.forward);
  out.append(stages.uncompute);
  out.append(stages.finish);
  return out;
}

Circuit build_block_plus_k(const BlockPlan& plan, const BigInt& k,
                           const BlockFlags& flags) {
  if (plan.mode != AdderMode::kPlusK) {
    throw PlanError("build_block_plus_k needs a +K plan");
  }
  auto stages = build_block_stages(plan, flags, k);
  Circuit out = std::move(stages.forward);
  out.append(stages.uncompute);
  out.append(stages.finish);
  return out;
}

Circuit uncompute_carries(const BlockPlan& plan, const BlockFlags& flags,
                          const std::optional<BigInt>& k) {
  return build_block_stages(plan, flags, k).uncompute;
}

}  // namespace qudit
