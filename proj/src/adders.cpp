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

#include "qudit/adders.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace qudit {

std::size_t popcount(std::size_t m) { return std::popcount(m); }

std::size_t floor_log2(std::size_t m) {
  if (m == 0) throw std::invalid_argument("floor_log2(0)");
  return std::bit_width(m) - 1;
}

std::size_t ancilla_required(std::size_t m) {
  if (m == 0) return 0;
  return 2 * m - popcount(m) - floor_log2(m);
}

std::size_t ancilla_required_plus_k(std::size_t m) {
  if (m == 0) return 0;
  return ancilla_required(m) - 1;
}

namespace {

// Ancilla holding the propagate products of a width-m prefix tree.
std::size_t tree_ancilla(std::size_t m) {
  if (m == 0) return 0;
  return m - popcount(m) - floor_log2(m);
}

std::size_t carry_positions(const AdderSpec& spec) {
  return spec.carry_out ? spec.n : spec.n - 1;
}

void check_wiring(const Circuit& c, const AdderSpec& spec,
                  const AdderWiring& w, bool with_a, std::size_t min_ancilla,
                  const char* what) {
  auto fail = [&](const std::string& msg) {
    throw CircuitError(std::string(what) + ": " + msg);
  };
  if (spec.n == 0) fail("register size must be at least 1");
  if (w.b.size() != spec.n) fail("b register has wrong size");
  if (with_a && w.a.size() != spec.n) fail("a register has wrong size");
  if (!with_a && !w.a.empty()) fail("constant adder takes no a register");
  if (spec.carry_in != w.carry_in.has_value()) {
    fail("carry-in wire presence does not match spec");
  }
  if (spec.carry_out != w.carry_out.has_value()) {
    fail("carry-out wire presence does not match spec");
  }
  if (w.ancilla.size() < min_ancilla) {
    fail("insufficient ancilla: " + std::to_string(w.ancilla.size()) +
         " supplied, " + std::to_string(min_ancilla) + " required");
  }
  std::set<WireId> seen;
  auto take = [&](WireId id) {
    c.wire(id);
    if (!seen.insert(id).second) {
      fail("wire " + std::to_string(id) + " assigned twice");
    }
  };
  for (WireId id : w.a) take(id);
  for (WireId id : w.b) take(id);
  if (w.carry_in) take(*w.carry_in);
  if (w.carry_out) take(*w.carry_out);
  for (WireId id : w.ancilla) take(id);
}

/**
 * In-place carry-lookahead addition b += addend (+ carry-in).
 *
 * Carries are computed with a Brent-Kung style prefix tree: generate bits go
 * into the carry wires z[1..m], propagate bits overwrite b, and propagate
 * products for blocks of width 2^t live on tree ancilla. After the sum layer
 * the carries are erased by running the carry computation backwards on
 * (addend, NOT sum), which has the same carries as (addend, b).
 *
 * The addend is either the a register or a classical constant; with a
 * constant, gates controlled by a_i are dropped (k_i = 0) or lose that
 * control (k_i = 1).
 */
class ClaEmitter {
 public:
  ClaEmitter(const AdderSpec& spec, const AdderWiring& wiring,
             const BigInt* constant)
      : spec_(spec), w_(wiring), constant_(constant) {}

  std::vector<Gate> emit() {
    const std::size_t n = spec_.n;
    const std::size_t m = carry_positions(spec_);
    std::vector<Gate> out;

    compute_carries(m, out);

    // Sum layer: b_i = p_i xor c_i.
    if (m == 0) xor_addend(0, w_.b[0], out);
    if (w_.carry_in) out.push_back(Gate::cx(*w_.carry_in, w_.b[0]));
    for (std::size_t i = 1; i < m; ++i) out.push_back(Gate::cx(z(i), w_.b[i]));
    if (!spec_.carry_out && n >= 2) {
      xor_addend(n - 1, w_.b[n - 1], out);
      out.push_back(Gate::cx(z(n - 1), w_.b[n - 1]));
    }

    // Erase c_1..c_{n-1}: put b into the propagate form of (addend, NOT sum)
    // and run the carry computation backwards.
    if (n >= 2) {
      for (std::size_t i = 0; i + 1 < n; ++i) {
        out.push_back(Gate::x(w_.b[i]));
        xor_addend(i, w_.b[i], out);
      }
      std::vector<Gate> erase;
      compute_carries(n - 1, erase);
      out.insert(out.end(), erase.rbegin(), erase.rend());
      for (std::size_t i = 0; i + 1 < n; ++i) out.push_back(Gate::x(w_.b[i]));
    }
    return out;
  }

 private:
  bool addend_bit(std::size_t i) const {
    return boost::multiprecision::bit_test(*constant_, static_cast<unsigned>(i));
  }

  // target ^= addend_i
  void xor_addend(std::size_t i, WireId target, std::vector<Gate>& out) const {
    if (!constant_) {
      out.push_back(Gate::cx(w_.a[i], target));
    } else if (addend_bit(i)) {
      out.push_back(Gate::x(target));
    }
  }

  // target ^= addend_i AND ctrl
  void and_addend(std::size_t i, WireId ctrl, WireId target,
                  std::vector<Gate>& out) const {
    if (!constant_) {
      out.push_back(Gate::ccx(w_.a[i], ctrl, target));
    } else if (addend_bit(i)) {
      out.push_back(Gate::cx(ctrl, target));
    }
  }

  // Carry into bit j (1 <= j <= n).
  WireId z(std::size_t j) const {
    if (j == spec_.n) return *w_.carry_out;
    return w_.ancilla[j - 1];
  }

  // Propagate product over bits [2^t x, 2^t (x+1)); level 0 is b itself.
  WireId propagate(std::size_t width, std::size_t t, std::size_t x) const {
    if (t == 0) return w_.b[x];
    std::size_t offset = spec_.n - 1;
    for (std::size_t u = 1; u < t; ++u) offset += (width >> u) - 1;
    return w_.ancilla[offset + x - 1];
  }

  // Leaves b_i = p_i for i < width and z[j] = c_j for 1 <= j <= width.
  void compute_carries(std::size_t width, std::vector<Gate>& out) const {
    if (width == 0) return;
    for (std::size_t i = 0; i < width; ++i) and_addend(i, w_.b[i], z(i + 1), out);
    for (std::size_t i = 0; i < width; ++i) xor_addend(i, w_.b[i], out);
    if (w_.carry_in) out.push_back(Gate::ccx(*w_.carry_in, w_.b[0], z(1)));

    const std::size_t levels = floor_log2(width);
    std::vector<Gate> p_rounds;
    for (std::size_t t = 1; t < levels; ++t) {
      for (std::size_t x = 1; x < (width >> t); ++x) {
        p_rounds.push_back(Gate::ccx(propagate(width, t - 1, 2 * x),
                                     propagate(width, t - 1, 2 * x + 1),
                                     propagate(width, t, x)));
      }
    }
    out.insert(out.end(), p_rounds.begin(), p_rounds.end());

    // Upsweep: z[2^t k + 2^t] collects the generate of its aligned block.
    for (std::size_t t = 1; t <= levels; ++t) {
      const std::size_t step = std::size_t{1} << t;
      for (std::size_t k = 0; k < (width >> t); ++k) {
        out.push_back(Gate::ccx(z(step * k + step / 2),
                                propagate(width, t - 1, 2 * k + 1),
                                z(step * k + step)));
      }
    }

    // Downsweep: fill in the remaining prefixes.
    std::size_t top = 0;
    while (3 * (std::size_t{2} << top) <= 2 * width) ++top;
    if (3 * (std::size_t{1} << top) <= 2 * width) {
      for (std::size_t t = top; t >= 1; --t) {
        const std::size_t step = std::size_t{1} << t;
        for (std::size_t k = 1; step * k + step / 2 <= width; ++k) {
          out.push_back(Gate::ccx(z(step * k), propagate(width, t - 1, 2 * k),
                                  z(step * k + step / 2)));
        }
      }
    }

    out.insert(out.end(), p_rounds.rbegin(), p_rounds.rend());
  }

  const AdderSpec& spec_;
  const AdderWiring& w_;
  const BigInt* constant_;
};

void append_gates(Circuit& c, std::vector<Gate> gates) {
  for (auto& g : gates) c.append(std::move(g));
}

// b[0..m) += a[0..m) + cin, carry xored into `carry`. Cuccaro MAJ/UMA chain
// using the carry-in wire as the running carry.
void ripple_with_carry_in(std::span<const WireId> a, std::span<const WireId> b,
                          WireId cin, WireId carry, std::vector<Gate>& out) {
  const std::size_t m = a.size();
  if (m == 0) {
    out.push_back(Gate::cx(cin, carry));
    return;
  }
  auto maj = [&](WireId x, WireId y, WireId w) {
    out.push_back(Gate::cx(w, y));
    out.push_back(Gate::cx(w, x));
    out.push_back(Gate::ccx(x, y, w));
  };
  auto uma = [&](WireId x, WireId y, WireId w) {
    out.push_back(Gate::ccx(x, y, w));
    out.push_back(Gate::cx(w, x));
    out.push_back(Gate::cx(x, y));
  };
  maj(cin, b[0], a[0]);
  for (std::size_t i = 1; i < m; ++i) maj(a[i - 1], b[i], a[i]);
  out.push_back(Gate::cx(a[m - 1], carry));
  for (std::size_t i = m - 1; i >= 1; --i) uma(a[i - 1], b[i], a[i]);
  uma(cin, b[0], a[0]);
}

// Same contract without a carry-in and without any spare wire; the running
// carry rides on the a register (Takahashi-Tani-Kunihiro).
void ripple_no_carry_in(std::span<const WireId> a, std::span<const WireId> b,
                        WireId carry, std::vector<Gate>& out) {
  const std::size_t m = a.size();
  if (m == 0) return;
  auto ext = [&](std::size_t i) { return i == m ? carry : a[i]; };
  for (std::size_t i = 1; i < m; ++i) out.push_back(Gate::cx(a[i], b[i]));
  for (std::size_t i = m - 1; i >= 1; --i) out.push_back(Gate::cx(a[i], ext(i + 1)));
  for (std::size_t i = 0; i < m; ++i) out.push_back(Gate::ccx(b[i], a[i], ext(i + 1)));
  for (std::size_t i = m - 1; i >= 1; --i) {
    out.push_back(Gate::cx(a[i], b[i]));
    out.push_back(Gate::ccx(b[i - 1], a[i - 1], a[i]));
  }
  for (std::size_t i = 1; i + 1 < m; ++i) out.push_back(Gate::cx(a[i], a[i + 1]));
  for (std::size_t i = 0; i < m; ++i) out.push_back(Gate::cx(a[i], b[i]));
}

}  // namespace

std::size_t cla_ancilla_used(const AdderSpec& spec) {
  if (spec.n == 0) return 0;
  return (spec.n - 1) + tree_ancilla(carry_positions(spec));
}

void append_cla_adder(Circuit& c, const AdderSpec& spec,
                      const AdderWiring& wiring) {
  check_wiring(c, spec, wiring, true, ancilla_required(spec.n), "cla adder");
  append_gates(c, ClaEmitter(spec, wiring, nullptr).emit());
}

void append_plus_k(Circuit& c, const AdderSpec& spec, const AdderWiring& wiring,
                   const BigInt& k) {
  check_wiring(c, spec, wiring, false, ancilla_required_plus_k(spec.n),
               "+K adder");
  if (k < 0 || k >= (BigInt(1) << spec.n)) {
    throw CircuitError("+K adder: constant does not fit in " +
                       std::to_string(spec.n) + " bits");
  }
  append_gates(c, ClaEmitter(spec, wiring, &k).emit());
}

void append_ripple_adder(Circuit& c, const AdderSpec& spec,
                         const AdderWiring& wiring) {
  check_wiring(c, spec, wiring, true, 0, "ripple adder");
  if (!wiring.ancilla.empty()) {
    throw CircuitError("ripple adder: takes no ancilla");
  }
  const std::size_t n = spec.n;
  std::span<const WireId> a(wiring.a);
  std::span<const WireId> b(wiring.b);
  // Without a carry-out the low n-1 bits ripple their carry straight into
  // b_{n-1}, which then only needs a_{n-1} added.
  const std::size_t m = spec.carry_out ? n : n - 1;
  const WireId carry = spec.carry_out ? *wiring.carry_out : wiring.b[n - 1];
  std::vector<Gate> out;
  if (wiring.carry_in) {
    ripple_with_carry_in(a.first(m), b.first(m), *wiring.carry_in, carry, out);
  } else {
    ripple_no_carry_in(a.first(m), b.first(m), carry, out);
  }
  if (!spec.carry_out) out.push_back(Gate::cx(a[n - 1], b[n - 1]));
  append_gates(c, std::move(out));
}

AdderWiring standard_wiring(const AdderSpec& spec, bool with_a,
                            std::size_t ancilla) {
  AdderWiring w;
  WireId next = 0;
  if (with_a) {
    for (std::size_t i = 0; i < spec.n; ++i) w.a.push_back(next++);
  }
  for (std::size_t i = 0; i < spec.n; ++i) w.b.push_back(next++);
  if (spec.carry_in) w.carry_in = next++;
  if (spec.carry_out) w.carry_out = next++;
  for (std::size_t i = 0; i < ancilla; ++i) w.ancilla.push_back(next++);
  return w;
}

Circuit standard_adder_circuit(const AdderSpec&, const AdderWiring& w) {
  const std::size_t width = w.a.size() + w.b.size() + (w.carry_in ? 1 : 0) +
                            (w.carry_out ? 1 : 0) + w.ancilla.size();
  std::vector<Wire> wires(width);
  auto name = [&](WireId id, std::string label) {
    wires.at(id) = Wire{id, std::move(label), 2};
  };
  for (std::size_t i = 0; i < w.a.size(); ++i) name(w.a[i], "a" + std::to_string(i));
  for (std::size_t i = 0; i < w.b.size(); ++i) name(w.b[i], "b" + std::to_string(i));
  if (w.carry_in) name(*w.carry_in, "cin");
  if (w.carry_out) name(*w.carry_out, "cout");
  for (std::size_t i = 0; i < w.ancilla.size(); ++i) {
    name(w.ancilla[i], "anc" + std::to_string(i));
  }
  return Circuit(std::move(wires));
}

Circuit build_cla_adder(const AdderSpec& spec) {
  const auto w = standard_wiring(spec, true, ancilla_required(spec.n));
  Circuit c = standard_adder_circuit(spec, w);
  append_cla_adder(c, spec, w);
  return c;
}

Circuit build_plus_k(const AdderSpec& spec, const BigInt& k) {
  const auto w = standard_wiring(spec, false, ancilla_required_plus_k(spec.n));
  Circuit c = standard_adder_circuit(spec, w);
  append_plus_k(c, spec, w, k);
  return c;
}

Circuit build_ripple_adder(const AdderSpec& spec) {
  const auto w = standard_wiring(spec, true, 0);
  Circuit c = standard_adder_circuit(spec, w);
  append_ripple_adder(c, spec, w);
  return c;
}

}  // namespace qudit
