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

#include "qudit/compress.hpp"

#include <algorithm>

#include <boost/multiprecision/cpp_int.hpp>

namespace qudit {

std::string CompressionScheme::name() const {
  if (is_231()) return "231";
  if (is_241()) return "241";
  return std::to_string(x) + "-" + std::to_string(y) + "-" + std::to_string(z);
}

CompressionScheme CompressionScheme::parse(const std::string& text) {
  if (text == "231" || text == "2-3-1") return scheme_231();
  if (text == "241" || text == "2-4-1") return scheme_241();
  throw std::invalid_argument("unknown compression scheme '" + text +
                              "' (expected 231 or 241)");
}

bool feasible(unsigned x, unsigned y, unsigned m, unsigned n_out) {
  if (x < 2 || y < 2 || m < 1 || n_out < 1) return false;
  if (n_out >= m) return false;
  using boost::multiprecision::cpp_int;
  return boost::multiprecision::pow(cpp_int(x), m) <=
         boost::multiprecision::pow(cpp_int(y), n_out);
}

std::vector<WireId> CompressedLayout::ancilla_wires() const {
  std::vector<WireId> out;
  for (const auto& g : groups) {
    out.insert(out.end(), g.ancilla.begin(), g.ancilla.end());
  }
  return out;
}

namespace {

void require_dim(const Circuit& c, WireId w, unsigned min_dim,
                 const char* what) {
  if (c.dim(w) < min_dim) {
    throw CircuitError(std::string(what) + ": wire " + std::to_string(w) +
                       " has dim " + std::to_string(c.dim(w)) + ", needs >= " +
                       std::to_string(min_dim));
  }
}

}  // namespace

// Realizes the 2-3-1 truth table: on binary inputs (A,B,C) with C = 0 the
// pair (A,B) is unchanged; with C = 1 it moves to a pair containing a 2, and
// C is cleared. One gate is doubly controlled.
void append_compress_231(Circuit& c, WireId a, WireId b, WireId last) {
  for (WireId w : {a, b, last}) require_dim(c, w, 3, "2-3-1 compression");
  c.append(Gate::increment(b, 1, {{last, 1}}));
  c.append(Gate::flip(last, 0, 1, {{b, 2}}));
  c.append(Gate::flip(b, 1, 2, {{a, 0}}));
  c.append(Gate::flip(a, 0, 1, {{b, 1}, {last, 1}}));
  c.append(Gate::flip(a, 0, 2, {{last, 1}}));
  c.append(Gate::flip(last, 0, 1, {{a, 2}}));
  c.append(Gate::flip(b, 1, 2, {{a, 0}}));
}

// A' = A + 2B on a ququart, then B is cleared wherever A' >= 2.
void append_compress_241(Circuit& c, WireId a, WireId last) {
  require_dim(c, a, 4, "2-4-1 compression");
  require_dim(c, last, 2, "2-4-1 compression");
  c.append(Gate::increment(a, 2, {{last, 1}}));
  c.append(Gate::flip(last, 0, 1, {{a, 2}}));
  c.append(Gate::flip(last, 0, 1, {{a, 3}}));
}

void append_compress_group(Circuit& c, const CompressionScheme& scheme,
                           std::span<const WireId> group) {
  if (scheme.is_231() && group.size() == 3) {
    append_compress_231(c, group[0], group[1], group[2]);
  } else if (scheme.is_241() && group.size() == 2) {
    append_compress_241(c, group[0], group[1]);
  } else {
    throw CircuitError("no compression circuit for scheme " + scheme.name() +
                       " over " + std::to_string(group.size()) + " wires");
  }
}

void append_decompress_group(Circuit& c, const CompressionScheme& scheme,
                             std::span<const WireId> group) {
  Circuit fragment = c.empty_copy();
  append_compress_group(fragment, scheme, group);
  c.append(inverse(fragment));
}

namespace {

Circuit standalone(const CompressionScheme& scheme) {
  std::vector<Wire> wires;
  if (scheme.is_231()) {
    wires = {{0, "A", 3}, {1, "B", 3}, {2, "C", 3}};
  } else if (scheme.is_241()) {
    wires = {{0, "A", 4}, {1, "B", 2}};
  } else {
    throw CircuitError("no compression circuit for scheme " + scheme.name());
  }
  Circuit c(std::move(wires));
  for (WireId w = 0; w < c.width(); ++w) c.set_interface_bound(w, 2);
  return c;
}

std::vector<WireId> iota_wires(std::size_t n) {
  std::vector<WireId> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<WireId>(i);
  return out;
}

}  // namespace

Circuit build_compress(const CompressionScheme& scheme) {
  Circuit c = standalone(scheme);
  append_compress_group(c, scheme, iota_wires(c.width()));
  return c;
}

Circuit build_compress_231() { return build_compress(CompressionScheme::scheme_231()); }
Circuit build_compress_241() { return build_compress(CompressionScheme::scheme_241()); }

Circuit build_decompress(const CompressionScheme& scheme) {
  Circuit c = standalone(scheme);
  append_decompress_group(c, scheme, iota_wires(c.width()));
  return c;
}

CompressedLayout plan_compression(std::span<const WireId> wires,
                                  const CompressionScheme& scheme) {
  if (wires.empty()) throw CircuitError("compress_block needs at least one wire");
  if (!scheme.is_231() && !scheme.is_241()) {
    throw CircuitError("no compression circuit for scheme " + scheme.name());
  }
  CompressedLayout layout;
  const std::size_t m = scheme.m;
  const std::size_t full = wires.size() / m;
  for (std::size_t g = 0; g < full; ++g) {
    CompressedGroup group;
    group.orig.assign(wires.begin() + g * m, wires.begin() + (g + 1) * m);
    group.storage.assign(group.orig.begin(), group.orig.begin() + scheme.n_out);
    group.ancilla.assign(group.orig.begin() + scheme.n_out, group.orig.end());
    layout.groups.push_back(std::move(group));
  }
  layout.leftover.assign(wires.begin() + full * m, wires.end());
  return layout;
}

void append_compress_layout(Circuit& c, const CompressedLayout& layout,
                            const CompressionScheme& scheme) {
  for (const auto& g : layout.groups) append_compress_group(c, scheme, g.orig);
}

void append_decompress_layout(Circuit& c, const CompressedLayout& layout,
                              const CompressionScheme& scheme) {
  for (const auto& g : layout.groups) append_decompress_group(c, scheme, g.orig);
}

CompressedLayout compress_block(Circuit& c, std::span<const WireId> wires,
                                const CompressionScheme& scheme) {
  CompressedLayout layout = plan_compression(wires, scheme);
  append_compress_layout(c, layout, scheme);
  return layout;
}

}  // namespace qudit
