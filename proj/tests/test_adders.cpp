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

#include <gtest/gtest.h>

#include <bit>
#include <cmath>
#include <random>

#include "qudit/adders.hpp"
#include "qudit/sim.hpp"
#include "support.hpp"

namespace qudit {
namespace {

using test_support::pow2;
using test_support::read_bits;
using test_support::write_bits;

// Independent bit-level reference for the ancilla bound.
std::size_t reference_ancilla(std::size_t m) {
  std::size_t ones = 0;
  for (std::size_t v = m; v; v >>= 1) ones += v & 1;
  std::size_t lg = 0;
  while ((std::size_t{2} << lg) <= m) ++lg;
  return 2 * m - ones - lg;
}

TEST(AncillaFormula, MatchesReference) {
  for (std::size_t m = 1; m <= 1024; ++m) {
    EXPECT_EQ(ancilla_required(m), reference_ancilla(m)) << m;
    EXPECT_EQ(ancilla_required_plus_k(m), reference_ancilla(m) - 1) << m;
  }
}

TEST(AncillaFormula, SmallValues) {
  EXPECT_EQ(ancilla_required(1), 1u);
  EXPECT_EQ(ancilla_required(2), 2u);
  EXPECT_EQ(ancilla_required(4), 5u);
  EXPECT_EQ(ancilla_required(8), 12u);
}

TEST(AncillaFormula, UsageWithinBound) {
  for (std::size_t n = 1; n <= 300; ++n) {
    for (bool cin : {false, true}) {
      for (bool cout : {false, true}) {
        AdderSpec spec{n, cin, cout};
        EXPECT_LE(cla_ancilla_used(spec), ancilla_required_plus_k(n)) << n;
      }
    }
  }
}

struct Variant {
  std::size_t n;
  bool cin;
  bool cout;
};

std::vector<Variant> small_variants(std::size_t max_n) {
  std::vector<Variant> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (bool cin : {false, true}) {
      for (bool cout : {false, true}) out.push_back({n, cin, cout});
    }
  }
  return out;
}

// Runs every binary input of an A+B circuit with the standard wiring and
// compares against integer addition.
void check_register_adder(const Circuit& c, const AdderSpec& spec,
                          const AdderWiring& w) {
  const BigInt mod = pow2(spec.n);
  const unsigned cin_values = spec.carry_in ? 2 : 1;
  for (unsigned long av = 0; av < (1ul << spec.n); ++av) {
    for (unsigned long bv = 0; bv < (1ul << spec.n); ++bv) {
      for (unsigned ci = 0; ci < cin_values; ++ci) {
        BasisState s(c.width());
        write_bits(s, w.a, av);
        write_bits(s, w.b, bv);
        if (w.carry_in) s[*w.carry_in] = static_cast<Digit>(ci);
        const auto out = run_traced(c, s);
        const BigInt sum = BigInt(av) + bv + ci;
        ASSERT_EQ(read_bits(out.output, w.a), BigInt(av));
        ASSERT_EQ(read_bits(out.output, w.b), sum % mod)
            << "n=" << spec.n << " a=" << av << " b=" << bv << " cin=" << ci;
        if (w.carry_out) ASSERT_EQ(BigInt(out.output[*w.carry_out]), sum / mod);
        if (w.carry_in) ASSERT_EQ(out.output[*w.carry_in], ci);
        for (WireId anc : w.ancilla) ASSERT_EQ(out.output[anc], 0);
        ASSERT_LE(out.max_digit, 1);
      }
    }
  }
}

TEST(ClaAdder, ExhaustiveSmall) {
  for (const auto& v : small_variants(8)) {
    AdderSpec spec{v.n, v.cin, v.cout};
    const auto w = standard_wiring(spec, true, ancilla_required(v.n));
    const Circuit c = build_cla_adder(spec);
    SCOPED_TRACE(::testing::Message() << "n=" << v.n << " cin=" << v.cin
                                    << " cout=" << v.cout);
    check_register_adder(c, spec, w);
  }
}

TEST(RippleAdder, ExhaustiveSmall) {
  for (const auto& v : small_variants(8)) {
    AdderSpec spec{v.n, v.cin, v.cout};
    const auto w = standard_wiring(spec, true, 0);
    const Circuit c = build_ripple_adder(spec);
    SCOPED_TRACE(::testing::Message() << "n=" << v.n << " cin=" << v.cin
                                    << " cout=" << v.cout);
    check_register_adder(c, spec, w);
  }
}

TEST(PlusK, ExhaustiveSmall) {
  for (const auto& v : small_variants(6)) {
    AdderSpec spec{v.n, v.cin, v.cout};
    const auto w = standard_wiring(spec, false, ancilla_required_plus_k(v.n));
    const BigInt mod = pow2(v.n);
    for (unsigned long k = 0; k < (1ul << v.n); ++k) {
      const Circuit c = build_plus_k(spec, k);
      for (unsigned long bv = 0; bv < (1ul << v.n); ++bv) {
        for (unsigned ci = 0; ci < (v.cin ? 2u : 1u); ++ci) {
          BasisState s(c.width());
          write_bits(s, w.b, bv);
          if (w.carry_in) s[*w.carry_in] = static_cast<Digit>(ci);
          const auto out = run_traced(c, s);
          const BigInt sum = BigInt(k) + bv + ci;
          ASSERT_EQ(read_bits(out.output, w.b), sum % mod)
              << "n=" << v.n << " k=" << k << " b=" << bv << " cin=" << ci;
          if (w.carry_out) ASSERT_EQ(BigInt(out.output[*w.carry_out]), sum / mod);
          for (WireId anc : w.ancilla) ASSERT_EQ(out.output[anc], 0);
          ASSERT_LE(out.max_digit, 1);
        }
      }
    }
  }
}

TEST(PlusK, RejectsOversizedConstant) {
  EXPECT_THROW(build_plus_k({3, false, false}, 8), CircuitError);
  EXPECT_THROW(build_plus_k({3, false, false}, -1), CircuitError);
}

TEST(ClaAdder, RejectsShortAncilla) {
  AdderSpec spec{4, false, true};
  auto w = standard_wiring(spec, true, ancilla_required(4) - 1);
  Circuit c = standard_adder_circuit(spec, w);
  EXPECT_THROW(append_cla_adder(c, spec, w), CircuitError);
}

TEST(ClaAdder, RejectsReusedWire) {
  AdderSpec spec{3, false, false};
  auto w = standard_wiring(spec, true, ancilla_required(3));
  Circuit c = standard_adder_circuit(spec, w);
  w.b[0] = w.a[0];
  EXPECT_THROW(append_cla_adder(c, spec, w), CircuitError);
}

TEST(ClaAdder, GatesAreBinary) {
  const Circuit c = build_cla_adder({16, true, true});
  for (const auto& w : c.wires()) EXPECT_EQ(w.dim, 2u);
  for (const auto& g : c.gates()) {
    EXPECT_LE(g.controls.size(), 2u);
    for (const auto& ctl : g.controls) EXPECT_EQ(ctl.value, 1);
  }
}

// A preset register holding K must produce the same outputs as +K.
TEST(PlusK, AgreesWithRegisterAdderOnRandomInputs) {
  std::mt19937_64 rng(7);
  for (std::size_t n : {8u, 17u, 40u}) {
    AdderSpec spec{n, true, true};
    const auto wr = standard_wiring(spec, true, ancilla_required(n));
    const auto wk = standard_wiring(spec, false, ancilla_required_plus_k(n));
    const Circuit reg = build_cla_adder(spec);
    for (int trial = 0; trial < 20; ++trial) {
      const BigInt k = test_support::random_bits(rng, n);
      const BigInt b = test_support::random_bits(rng, n);
      const Digit ci = rng() & 1;
      const Circuit ck = build_plus_k(spec, k);
      BasisState sr(reg.width());
      write_bits(sr, wr.a, k);
      write_bits(sr, wr.b, b);
      sr[*wr.carry_in] = ci;
      BasisState sk(ck.width());
      write_bits(sk, wk.b, b);
      sk[*wk.carry_in] = ci;
      const auto outr = run(reg, sr);
      const auto outk = run(ck, sk);
      EXPECT_EQ(read_bits(outr, wr.b), read_bits(outk, wk.b));
      EXPECT_EQ(outr[*wr.carry_out], outk[*wk.carry_out]);
    }
  }
}

TEST(RippleAdder, AgreesWithClaOnRandomInputs) {
  std::mt19937_64 rng(11);
  for (std::size_t n : {9u, 33u, 64u}) {
    for (bool cin : {false, true}) {
      AdderSpec spec{n, cin, true};
      const auto wc = standard_wiring(spec, true, ancilla_required(n));
      const auto wr = standard_wiring(spec, true, 0);
      const Circuit cla = build_cla_adder(spec);
      const Circuit rip = build_ripple_adder(spec);
      for (int trial = 0; trial < 20; ++trial) {
        const BigInt a = test_support::random_bits(rng, n);
        const BigInt b = test_support::random_bits(rng, n);
        BasisState sc(cla.width());
        BasisState sr(rip.width());
        write_bits(sc, wc.a, a);
        write_bits(sc, wc.b, b);
        write_bits(sr, wr.a, a);
        write_bits(sr, wr.b, b);
        if (cin) {
          const Digit ci = rng() & 1;
          sc[*wc.carry_in] = ci;
          sr[*wr.carry_in] = ci;
        }
        const auto oc = run(cla, sc);
        const auto orr = run(rip, sr);
        EXPECT_EQ(read_bits(oc, wc.b), read_bits(orr, wr.b));
        EXPECT_EQ(oc[*wc.carry_out], orr[*wr.carry_out]);
      }
    }
  }
}

TEST(ClaAdder, DepthGrowsLogarithmically) {
  auto d = [](std::size_t n) { return depth(build_cla_adder({n, false, true})); };
  const auto d16 = d(16);
  const auto d32 = d(32);
  const auto d64 = d(64);
  const double lo = static_cast<double>(d32 - d16);
  const double hi = static_cast<double>(d64 - d32);
  EXPECT_GT(lo, 0);
  EXPECT_LE(hi, 2 * lo);
  EXPECT_GE(hi, lo / 2);
}

// Documented constants: depth <= 4 log2(n) + 10 for every carry variant.
TEST(ClaAdder, DepthWithinDocumentedBound) {
  for (std::size_t n = 1; n <= 600; n += (n < 70 ? 1 : 37)) {
    for (const auto& v : small_variants(1)) {
      const AdderSpec spec{n, v.cin, v.cout};
      const double bound = 4.0 * std::log2(static_cast<double>(n)) + 10.0;
      EXPECT_LE(static_cast<double>(depth(build_cla_adder(spec))), bound) << n;
      EXPECT_LE(static_cast<double>(depth(build_plus_k(spec, pow2(n) - 1))), bound) << n;
    }
  }
}

TEST(RippleAdder, DepthGrowsLinearly) {
  const auto d32 = depth(build_ripple_adder({32, false, true}));
  const auto d64 = depth(build_ripple_adder({64, false, true}));
  EXPECT_GT(d64, d32 + 32);
}

}  // namespace
}  // namespace qudit
