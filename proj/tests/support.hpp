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

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "qudit/adders.hpp"
#include "qudit/ir.hpp"
#include "qudit/sim.hpp"

namespace qudit::test_support {

// Test-side big-integer helpers, written against the wire lists only.

inline void write_bits(BasisState& s, const std::vector<WireId>& wires,
                       const BigInt& value) {
  for (std::size_t i = 0; i < wires.size(); ++i) {
    s[wires[i]] = boost::multiprecision::bit_test(value, static_cast<unsigned>(i)) ? 1 : 0;
  }
}

inline BigInt read_bits(const BasisState& s, const std::vector<WireId>& wires) {
  BigInt v = 0;
  for (std::size_t i = wires.size(); i-- > 0;) {
    v <<= 1;
    v += s[wires[i]];
  }
  return v;
}

inline BigInt pow2(std::size_t n) { return BigInt(1) << n; }

/// Draws a uniform n-bit value from raw generator output.
template <class Rng>
BigInt random_bits(Rng& rng, std::size_t n) {
  BigInt v = 0;
  std::size_t have = 0;
  while (have < n) {
    v <<= 64;
    v += static_cast<std::uint64_t>(rng());
    have += 64;
  }
  return v & (pow2(n) - 1);
}

/// A valid circuit over wires of dim 2..4 with gates drawn uniformly from
/// raw generator output. Swaps only pair wires of equal dim.
template <class Rng>
void append_random_gates(Rng& rng, Circuit& c, std::size_t gates) {
  const std::size_t width = c.width();
  const std::size_t target = c.size() + gates;
  while (c.size() < target) {
    std::vector<WireId> order(width);
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t i = width; i > 1; --i) std::swap(order[i - 1], order[rng() % i]);
    const WireId t = order[0];
    const unsigned d = c.dim(t);
    const std::size_t ncontrols = std::min<std::size_t>(rng() % 3, width - 1);
    std::vector<Control> controls;
    for (std::size_t i = 0; i < ncontrols; ++i) {
      const WireId w = order[1 + i];
      controls.push_back({w, static_cast<Digit>(rng() % c.dim(w))});
    }
    switch (rng() % 3) {
      case 0: {
        const Digit i = static_cast<Digit>(rng() % d);
        const Digit j = static_cast<Digit>((i + 1 + rng() % (d - 1)) % d);
        c.append(Gate::flip(t, i, j, controls));
        break;
      }
      case 1:
        c.append(Gate::increment(t, static_cast<Digit>(1 + rng() % (d - 1)), controls));
        break;
      default:
        if (width > 1 && c.dim(order[1]) == d) c.append(Gate::swap(t, order[1]));
    }
  }
}

template <class Rng>
Circuit random_circuit(Rng& rng, std::size_t width, std::size_t gates) {
  std::vector<Wire> wires;
  for (std::size_t i = 0; i < width; ++i) {
    wires.push_back({static_cast<WireId>(i), "w" + std::to_string(i),
                     static_cast<unsigned>(2 + rng() % 3)});
  }
  Circuit c(std::move(wires));
  append_random_gates(rng, c, gates);
  return c;
}

}  // namespace qudit::test_support
