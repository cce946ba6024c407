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

#include "qudit/sim.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace qudit {

std::string BasisState::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(digits_[i]);
  }
  return out;
}

BasisState BasisState::parse(std::string_view text) {
  std::vector<Digit> digits;
  if (text.empty()) return BasisState(std::move(digits));
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view field = text.substr(
        pos, comma == std::string_view::npos ? std::string_view::npos
                                             : comma - pos);
    unsigned value = 0;
    const auto [end, ec] =
        std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} ||
        end != field.data() + field.size() || value > kMaxDim) {
      throw std::invalid_argument("malformed digit '" + std::string(field) +
                                  "' in basis state");
    }
    digits.push_back(static_cast<Digit>(value));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return BasisState(std::move(digits));
}

void check_state(const Circuit& c, const BasisState& s) {
  if (s.size() != c.width()) {
    throw CircuitError("state has " + std::to_string(s.size()) +
                       " digits; circuit width is " +
                       std::to_string(c.width()));
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] >= c.wires()[i].dim) {
      throw CircuitError("digit " + std::to_string(s[i]) + " on wire " +
                         std::to_string(i) + " exceeds dim " +
                         std::to_string(c.wires()[i].dim));
    }
  }
}

namespace {

bool controls_match(const BasisState& s, const Gate& g) {
  return std::all_of(g.controls.begin(), g.controls.end(),
                     [&](const Control& ctrl) {
                       return s[ctrl.wire] == ctrl.value;
                     });
}

}  // namespace

void apply_gate(BasisState& s, const Gate& g, const Circuit& c) {
  if (!controls_match(s, g)) return;
  const WireId t = g.targets[0];
  if (const auto* f = std::get_if<Flip>(&g.kind)) {
    if (s[t] == f->i) {
      s[t] = f->j;
    } else if (s[t] == f->j) {
      s[t] = f->i;
    }
  } else if (const auto* inc = std::get_if<Increment>(&g.kind)) {
    const unsigned d = c.wires()[t].dim;
    s[t] = static_cast<Digit>((s[t] + inc->k) % d);
  } else {
    std::swap(s[t], s[g.targets[1]]);
  }
}

BasisState apply_gate(const BasisState& s, const Gate& g, const Circuit& c) {
  BasisState out = s;
  apply_gate(out, g, c);
  return out;
}

BasisState run(const Circuit& c, BasisState s) {
  check_state(c, s);
  for (const Gate& g : c.gates()) apply_gate(s, g, c);
  return s;
}

TracedRun run_traced(const Circuit& c, BasisState s) {
  check_state(c, s);
  Digit max_digit = 0;
  for (Digit d : s.digits()) max_digit = std::max(max_digit, d);
  for (const Gate& g : c.gates()) {
    apply_gate(s, g, c);
    for (WireId t : g.targets) max_digit = std::max(max_digit, s[t]);
  }
  return {std::move(s), max_digit};
}

std::vector<BasisState> enumerate_states(const std::vector<unsigned>& bounds) {
  std::size_t total = 1;
  for (unsigned b : bounds) total *= b;
  std::vector<BasisState> out;
  if (total == 0) return out;
  out.reserve(total);
  BasisState cur(bounds.size());
  for (std::size_t n = 0; n < total; ++n) {
    out.push_back(cur);
    for (std::size_t i = bounds.size(); i-- > 0;) {
      if (++cur[i] < bounds[i]) break;
      cur[i] = 0;
    }
  }
  return out;
}

std::map<BasisState, BasisState> permutation_table(
    const Circuit& c, const std::vector<BasisState>& domain) {
  std::map<BasisState, BasisState> table;
  for (const auto& s : domain) table.emplace(s, run(c, s));
  return table;
}

std::vector<unsigned> wire_dims(const Circuit& c) {
  std::vector<unsigned> dims;
  for (const auto& w : c.wires()) dims.push_back(w.dim);
  return dims;
}

namespace {

std::size_t product(const std::vector<unsigned>& dims) {
  std::size_t total = 1;
  for (unsigned d : dims) {
    if (total > kMaxStatevectorSize / d + 1) return kMaxStatevectorSize + 1;
    total *= d;
  }
  return total;
}

// Stride of each wire in the flattened index, wire 0 most significant.
std::vector<std::size_t> strides_of(const std::vector<unsigned>& dims) {
  std::vector<std::size_t> strides(dims.size(), 1);
  for (std::size_t i = dims.size(); i-- > 1;) {
    strides[i - 1] = strides[i] * dims[i];
  }
  return strides;
}

std::size_t mixed_index(const std::vector<unsigned>& dims, const BasisState& s) {
  if (s.size() != dims.size()) {
    throw CircuitError("state width does not match statevector");
  }
  std::size_t idx = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (s[i] >= dims[i]) throw CircuitError("digit out of range");
    idx = idx * dims[i] + s[i];
  }
  return idx;
}

}  // namespace

Statevector::Statevector(std::vector<unsigned> dims,
                         std::vector<Amplitude> amplitudes)
    : dims_(std::move(dims)), amps_(std::move(amplitudes)) {
  const std::size_t total = product(dims_);
  if (total > kMaxStatevectorSize) {
    throw CircuitError("statevector exceeds 2^20 amplitudes");
  }
  if (amps_.size() != total) {
    throw CircuitError("amplitude count " + std::to_string(amps_.size()) +
                       " does not match dimension " + std::to_string(total));
  }
  if (std::abs(norm_squared() - 1.0) > kNormTolerance) {
    throw CircuitError("statevector is not normalized");
  }
}

Statevector Statevector::basis(const std::vector<unsigned>& dims,
                               const BasisState& s) {
  const std::size_t total = product(dims);
  if (total > kMaxStatevectorSize) {
    throw CircuitError("statevector exceeds 2^20 amplitudes");
  }
  std::vector<Amplitude> amps(total);
  amps[mixed_index(dims, s)] = 1.0;
  return Statevector(dims, std::move(amps));
}

Statevector Statevector::uniform(const std::vector<unsigned>& dims) {
  const std::size_t total = product(dims);
  if (total > kMaxStatevectorSize) {
    throw CircuitError("statevector exceeds 2^20 amplitudes");
  }
  const double amp = 1.0 / std::sqrt(static_cast<double>(total));
  return Statevector(dims, std::vector<Amplitude>(total, Amplitude(amp, 0.0)));
}

std::size_t Statevector::index_of(const BasisState& s) const {
  return mixed_index(dims_, s);
}

double Statevector::norm_squared() const {
  double total = 0.0;
  for (const auto& a : amps_) total += std::norm(a);
  return total;
}

Statevector run_statevector(const Circuit& c, const Statevector& v) {
  const auto dims = wire_dims(c);
  if (dims != v.dims()) {
    throw CircuitError("statevector dims do not match circuit wires");
  }
  const auto strides = strides_of(dims);
  std::vector<Statevector::Amplitude> amps = v.amplitudes();
  std::vector<Statevector::Amplitude> next(amps.size());

  auto digit_at = [&](std::size_t idx, WireId w) {
    return static_cast<unsigned>((idx / strides[w]) % dims[w]);
  };

  for (const Gate& g : c.gates()) {
    const WireId t = g.targets[0];
    for (std::size_t idx = 0; idx < amps.size(); ++idx) {
      bool fire = true;
      for (const auto& ctrl : g.controls) {
        fire = fire && digit_at(idx, ctrl.wire) == ctrl.value;
      }
      std::size_t dest = idx;
      if (fire) {
        const unsigned cur = digit_at(idx, t);
        unsigned nxt = cur;
        if (const auto* f = std::get_if<Flip>(&g.kind)) {
          if (cur == f->i) nxt = f->j;
          if (cur == f->j) nxt = f->i;
          dest = idx - cur * strides[t] + nxt * strides[t];
        } else if (const auto* inc = std::get_if<Increment>(&g.kind)) {
          nxt = (cur + inc->k) % dims[t];
          dest = idx - cur * strides[t] + nxt * strides[t];
        } else {
          const WireId u = g.targets[1];
          const unsigned other = digit_at(idx, u);
          dest = idx - cur * strides[t] - other * strides[u] +
                 other * strides[t] + cur * strides[u];
        }
      }
      next[dest] = amps[idx];
    }
    amps.swap(next);
  }
  return Statevector(dims, std::move(amps));
}

}  // namespace qudit
