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

#include <complex>
#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qudit/ir.hpp"

namespace qudit {

/// One digit per wire, least-indexed wire first.
class BasisState {
 public:
  BasisState() = default;
  explicit BasisState(std::vector<Digit> digits) : digits_(std::move(digits)) {}
  explicit BasisState(std::size_t width) : digits_(width, 0) {}

  std::size_t size() const { return digits_.size(); }
  Digit operator[](std::size_t i) const { return digits_[i]; }
  Digit& operator[](std::size_t i) { return digits_[i]; }
  const std::vector<Digit>& digits() const { return digits_; }

  /// "1,0,1"
  std::string to_string() const;
  /// Parses the comma-separated digit format; throws std::invalid_argument.
  static BasisState parse(std::string_view text);

  auto operator<=>(const BasisState&) const = default;

 private:
  std::vector<Digit> digits_;
};

/// Throws CircuitError unless `s` has one in-range digit per wire of `c`.
void check_state(const Circuit& c, const BasisState& s);

void apply_gate(BasisState& s, const Gate& g, const Circuit& c);
BasisState apply_gate(const BasisState& s, const Gate& g, const Circuit& c);

BasisState run(const Circuit& c, BasisState s);

/// Result of a run that also tracks the largest digit seen on any wire,
/// at the input and after every gate.
struct TracedRun {
  BasisState output;
  Digit max_digit = 0;
};
TracedRun run_traced(const Circuit& c, BasisState s);

/// Every state in the mixed-radix box [0, bounds[i]) in lexicographic order,
/// last wire fastest.
std::vector<BasisState> enumerate_states(const std::vector<unsigned>& bounds);

std::map<BasisState, BasisState> permutation_table(
    const Circuit& c, const std::vector<BasisState>& domain);

/// Dense amplitudes indexed in the same mixed-radix order as
/// enumerate_states (wire 0 most significant). Construction rejects vectors
/// whose squared norm is off by more than kNormTolerance.
class Statevector {
 public:
  using Amplitude = std::complex<double>;

  Statevector(std::vector<unsigned> dims, std::vector<Amplitude> amplitudes);

  static Statevector basis(const std::vector<unsigned>& dims,
                           const BasisState& s);
  static Statevector uniform(const std::vector<unsigned>& dims);

  const std::vector<unsigned>& dims() const { return dims_; }
  const std::vector<Amplitude>& amplitudes() const { return amps_; }
  std::vector<Amplitude>& amplitudes() { return amps_; }
  std::size_t index_of(const BasisState& s) const;
  double norm_squared() const;

 private:
  std::vector<unsigned> dims_;
  std::vector<Amplitude> amps_;
};

inline constexpr std::size_t kMaxStatevectorSize = std::size_t{1} << 20;
/// Allowed deviation of the squared norm from 1.
inline constexpr double kNormTolerance = 1e-9;

/// Applies each gate as the permutation it induces on amplitude indices.
Statevector run_statevector(const Circuit& c, const Statevector& v);

std::vector<unsigned> wire_dims(const Circuit& c);

}  // namespace qudit
