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

#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <thread>

#include <CLI11.hpp>

#include "qudit/adders.hpp"
#include "qudit/block_adder.hpp"
#include "qudit/compress.hpp"
#include "qudit/resources.hpp"
#include "qudit/serialize.hpp"
#include "qudit/sim.hpp"

namespace qudit::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Kind {
  kCompress231,
  kCompress241,
  kClaAdder,
  kPlusK,
  kBlockAdder,
  kBlockPlusK,
  kRippleAdder,
};

const std::map<std::string, Kind>& kinds() {
  static const std::map<std::string, Kind> table = {
      {"compress231", Kind::kCompress231}, {"compress241", Kind::kCompress241},
      {"cla-adder", Kind::kClaAdder},      {"plus-k", Kind::kPlusK},
      {"block-adder", Kind::kBlockAdder},  {"block-plus-k", Kind::kBlockPlusK},
      {"ripple-adder", Kind::kRippleAdder}};
  return table;
}

bool is_compress(Kind k) {
  return k == Kind::kCompress231 || k == Kind::kCompress241;
}
bool is_constant(Kind k) { return k == Kind::kPlusK || k == Kind::kBlockPlusK; }

struct BuildOptions {
  std::string kind;
  std::optional<std::size_t> n;
  std::string scheme = "231";
  bool carry_in = false;
  bool carry_out = false;
  std::optional<std::string> k;
};

void add_build_options(CLI::App& app, BuildOptions& o) {
  std::vector<std::string> names;
  for (const auto& [name, kind] : kinds()) names.push_back(name);
  app.add_option("--kind", o.kind, "Circuit kind")
      ->required()
      ->check(CLI::IsMember(names));
  app.add_option("--n", o.n, "Register size in bits");
  app.add_option("--scheme", o.scheme, "Compression scheme for block kinds")
      ->check(CLI::IsMember({"231", "241", "2-3-1", "2-4-1"}));
  app.add_flag("--carry-in", o.carry_in, "Add a carry-in wire");
  app.add_flag("--carry-out", o.carry_out, "Add a carry-out wire");
  app.add_option("--k", o.k, "Constant addend (decimal) for +K kinds");
}

// Wire roles of the built circuit. Wires outside these roles start and end
// at 0.
struct Roles {
  std::vector<WireId> a;
  std::vector<WireId> b;
  std::optional<WireId> cin;
  std::optional<WireId> cout;
};

struct Artifact {
  Kind kind = Kind::kCompress231;
  CompressionScheme scheme;
  std::size_t n = 0;
  std::optional<BigInt> k;
  Circuit circuit;
  std::optional<BlockPlan> plan;
  std::optional<std::size_t> min_exact;
  Roles roles;
  /// Largest digit any wire may hold mid-circuit on valid inputs.
  Digit radix_limit = 1;
};

BigInt parse_bigint(const std::string& text) {
  if (text.empty() || !std::all_of(text.begin(), text.end(),
                                   [](char ch) { return ch >= '0' && ch <= '9'; })) {
    throw UsageError("--k must be a non-negative decimal integer, got '" + text + "'");
  }
  return BigInt(text);
}

template <class Rng>
BigInt random_bits(Rng& rng, std::size_t bits) {
  BigInt v = 0;
  for (std::size_t have = 0; have < bits; have += 64) {
    v <<= 64;
    v += static_cast<std::uint64_t>(rng());
  }
  return v & ((BigInt(1) << bits) - 1);
}

Roles roles_of(const AdderWiring& w) { return {w.a, w.b, w.carry_in, w.carry_out}; }

Artifact make_artifact(const BuildOptions& o, std::optional<BigInt> k) {
  Artifact art;
  art.kind = kinds().at(o.kind);
  art.scheme = CompressionScheme::parse(o.scheme);
  if (art.kind == Kind::kCompress231 || art.kind == Kind::kCompress241) {
    art.scheme = art.kind == Kind::kCompress231 ? CompressionScheme::scheme_231()
                                                : CompressionScheme::scheme_241();
    art.circuit = build_compress(art.scheme);
    art.radix_limit = static_cast<Digit>(art.scheme.y - 1);
    return art;
  }
  if (!o.n || *o.n == 0) throw UsageError("--kind " + o.kind + " needs --n >= 1");
  art.n = *o.n;
  if (is_constant(art.kind)) {
    if (!k) throw UsageError("--kind " + o.kind + " needs --k");
    if (*k >= (BigInt(1) << art.n)) {
      throw UsageError("--k does not fit in " + std::to_string(art.n) + " bits");
    }
    art.k = k;
  } else if (o.k) {
    throw UsageError("--k only applies to +K kinds");
  }
  const AdderSpec spec{art.n, o.carry_in, o.carry_out};
  switch (art.kind) {
    case Kind::kClaAdder:
      art.circuit = build_cla_adder(spec);
      art.roles = roles_of(standard_wiring(spec, true, ancilla_required(art.n)));
      break;
    case Kind::kPlusK:
      art.circuit = build_plus_k(spec, *art.k);
      art.roles = roles_of(standard_wiring(spec, false, ancilla_required_plus_k(art.n)));
      break;
    case Kind::kRippleAdder:
      art.circuit = build_ripple_adder(spec);
      art.roles = roles_of(standard_wiring(spec, true, 0));
      break;
    default: {
      const AdderMode mode =
          art.kind == Kind::kBlockAdder ? AdderMode::kAPlusB : AdderMode::kPlusK;
      auto outcome = plan_blocks(mode, art.scheme, art.n);
      if (!outcome.plan) {
        throw UsageError(outcome.reason +
                         "; use --kind ripple-adder for an ancilla-free fallback");
      }
      art.plan = std::move(outcome.plan);
      art.min_exact = min_exact_blocks(mode, art.scheme, art.n);
      const BlockFlags flags{o.carry_in, o.carry_out};
      art.circuit = mode == AdderMode::kAPlusB
                        ? build_block_adder(*art.plan, flags)
                        : build_block_plus_k(*art.plan, *art.k, flags);
      const BlockWiring w = block_wiring(*art.plan, flags);
      art.roles = {w.a, w.b, w.carry_in, w.carry_out};
      art.radix_limit = static_cast<Digit>(art.scheme.y - 1);
    }
  }
  return art;
}

Circuit load_circuit(const std::string& path) {
  return circuit_from_json(read_json_file(path));
}

std::string sidecar_path(const std::string& out) {
  const std::string ext = ".json";
  if (out.size() > ext.size() && out.ends_with(ext)) {
    return out.substr(0, out.size() - ext.size()) + ".plan.json";
  }
  return out + ".plan.json";
}

// build

int cmd_build(const BuildOptions& o, const std::string& out_path,
              std::ostream& out) {
  std::optional<BigInt> k;
  if (o.k) k = parse_bigint(*o.k);
  const Artifact art = make_artifact(o, k);
  write_text_file(out_path, dump(circuit_to_json(art.circuit)));
  out << "wrote " << out_path << ": kind=" << o.kind
      << " width=" << art.circuit.width() << " depth=" << depth(art.circuit)
      << " gates=" << art.circuit.size() << "\n";
  if (art.plan) {
    const std::string sidecar = sidecar_path(out_path);
    write_text_file(sidecar, dump(plan_to_json(*art.plan)));
    out << "plan: mode=" << to_string(art.plan->mode)
        << " scheme=" << art.plan->scheme.name() << " n=" << art.plan->n
        << " c=" << art.plan->c << " ancilla_per_step=" << art.plan->supply
        << " needed=" << art.plan->demand << "\n";
    out << "exact-accounting minimum c="
        << (art.min_exact ? std::to_string(*art.min_exact) : "none") << "\n";
    out << "wrote " << sidecar << "\n";
  }
  return kExitPass;
}

// simulate

int cmd_simulate(const std::string& path, const std::string& input,
                 std::ostream& out) {
  const Circuit c = load_circuit(path);
  BasisState s;
  try {
    s = BasisState::parse(input);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("malformed --input: ") + e.what());
  }
  try {
    check_state(c, s);
  } catch (const CircuitError& e) {
    throw UsageError(std::string("--input does not fit the circuit: ") + e.what());
  }
  out << run(c, s).to_string() << "\n";
  return kExitPass;
}

// verify

// Table rows for the binary inputs, first wire most significant.
const std::vector<std::vector<Digit>>& compression_table(const CompressionScheme& s) {
  static const std::vector<std::vector<Digit>> t231 = {
      {0, 0, 0}, {2, 2, 0}, {0, 1, 0}, {0, 2, 0},
      {1, 0, 0}, {2, 1, 0}, {1, 1, 0}, {1, 2, 0}};
  static const std::vector<std::vector<Digit>> t241 = {
      {0, 0}, {2, 0}, {1, 0}, {3, 0}};
  return s.is_231() ? t231 : t241;
}

struct Case {
  BigInt a;
  BigInt b;
  unsigned cin = 0;
};

class Verifier {
 public:
  explicit Verifier(const Artifact& art, const Circuit& circuit)
      : art_(art), circuit_(circuit), inverse_(inverse(circuit)) {}

  /// Input bits per case.
  std::size_t input_bits() const {
    if (is_compress(art_.kind)) return art_.scheme.m;
    return art_.roles.a.size() + art_.roles.b.size() + (art_.roles.cin ? 1 : 0);
  }

  Case case_from_index(std::uint64_t idx) const {
    if (is_compress(art_.kind)) return {BigInt(idx), 0, 0};
    const std::size_t na = art_.roles.a.size();
    const std::size_t nb = art_.roles.b.size();
    Case out;
    out.a = BigInt(idx) & ((BigInt(1) << na) - 1);
    out.b = (BigInt(idx) >> na) & ((BigInt(1) << nb) - 1);
    out.cin = static_cast<unsigned>((idx >> (na + nb)) & 1);
    return out;
  }

  template <class Rng>
  Case random_case(Rng& rng) const {
    if (is_compress(art_.kind)) return {random_bits(rng, art_.scheme.m), 0, 0};
    Case out;
    out.a = random_bits(rng, art_.roles.a.size());
    out.b = random_bits(rng, art_.roles.b.size());
    if (art_.roles.cin) out.cin = static_cast<unsigned>(rng() & 1);
    return out;
  }

  BasisState input_state(const Case& k) const {
    BasisState s(circuit_.width());
    if (is_compress(art_.kind)) {
      const std::size_t m = art_.scheme.m;
      for (std::size_t w = 0; w < m; ++w) {
        s[w] = boost::multiprecision::bit_test(k.a, static_cast<unsigned>(m - 1 - w));
      }
      return s;
    }
    write(s, art_.roles.a, k.a);
    write(s, art_.roles.b, k.b);
    if (art_.roles.cin) s[*art_.roles.cin] = static_cast<Digit>(k.cin);
    return s;
  }

  /// Empty when the case passes, else a description of the failure.
  std::optional<std::string> check(const Case& k) const {
    const BasisState in = input_state(k);
    const TracedRun traced = run_traced(circuit_, in);
    const BasisState& outs = traced.output;
    auto fail = [&](const std::string& what) -> std::optional<std::string> {
      return "input=" + in.to_string() + " output=" + outs.to_string() + ": " + what;
    };
    if (traced.max_digit > art_.radix_limit) {
      return fail("intermediate digit " + std::to_string(traced.max_digit) +
                  " exceeds " + std::to_string(art_.radix_limit));
    }
    if (run(inverse_, outs) != in) return fail("inverse does not restore the input");

    if (is_compress(art_.kind)) {
      const auto& row =
          compression_table(art_.scheme)[static_cast<std::size_t>(k.a)];
      if (outs.digits() != row) {
        return fail("truth table expects " + BasisState(row).to_string());
      }
      return std::nullopt;
    }

    const std::size_t n = art_.n;
    const BigInt addend = art_.k ? *art_.k : k.a;
    const BigInt sum = addend + k.b + k.cin;
    const BigInt mod = BigInt(1) << n;
    for (Digit d : outs.digits()) {
      if (d > 1) return fail("output is not binary");
    }
    if (read(outs, art_.roles.a) != k.a) return fail("register a changed");
    const BigInt low = sum % mod;
    const BigInt high = sum / mod;
    if (read(outs, art_.roles.b) != low) {
      return fail("register b expected " + low.str());
    }
    if (art_.roles.cout && BigInt(outs[*art_.roles.cout]) != high) {
      return fail("carry-out expected " + high.str());
    }
    if (art_.roles.cin && outs[*art_.roles.cin] != k.cin) {
      return fail("carry-in changed");
    }
    std::vector<bool> role(circuit_.width(), false);
    for (WireId w : art_.roles.a) role[w] = true;
    for (WireId w : art_.roles.b) role[w] = true;
    if (art_.roles.cin) role[*art_.roles.cin] = true;
    if (art_.roles.cout) role[*art_.roles.cout] = true;
    for (std::size_t w = 0; w < role.size(); ++w) {
      if (!role[w] && outs[w] != 0) {
        return fail("ancilla wire " + std::to_string(w) + " not restored");
      }
    }
    return std::nullopt;
  }

 private:
  static void write(BasisState& s, const std::vector<WireId>& wires, const BigInt& v) {
    for (std::size_t i = 0; i < wires.size(); ++i) {
      s[wires[i]] = boost::multiprecision::bit_test(v, static_cast<unsigned>(i));
    }
  }
  static BigInt read(const BasisState& s, const std::vector<WireId>& wires) {
    BigInt v = 0;
    for (std::size_t i = wires.size(); i-- > 0;) {
      v <<= 1;
      v += s[wires[i]];
    }
    return v;
  }

  const Artifact& art_;
  const Circuit& circuit_;
  Circuit inverse_;
};

struct Failure {
  std::size_t index;
  std::string message;
};

// Checks cases [0, count) on a pool of threads and returns the failure with
// the lowest index, so the report does not depend on scheduling.
template <class CaseAt>
std::optional<Failure> check_all(const Verifier& v, std::size_t count,
                                 const CaseAt& case_at) {
  const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers = std::min<std::size_t>(hw, count / 32 + 1);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_bad{count};
  std::vector<std::optional<Failure>> found(workers);
  constexpr std::size_t kChunk = 16;
  auto work = [&](std::size_t id) {
    for (;;) {
      const std::size_t start = next.fetch_add(kChunk);
      if (start >= count || start >= first_bad.load()) return;
      for (std::size_t i = start; i < std::min(count, start + kChunk); ++i) {
        if (auto msg = v.check(case_at(i))) {
          if (!found[id] || i < found[id]->index) found[id] = Failure{i, *msg};
          std::size_t cur = first_bad.load();
          while (i < cur && !first_bad.compare_exchange_weak(cur, i)) {
          }
          return;
        }
      }
    }
  };
  std::vector<std::thread> threads;
  for (std::size_t id = 0; id < workers; ++id) threads.emplace_back(work, id);
  for (auto& t : threads) t.join();
  std::optional<Failure> best;
  for (auto& f : found) {
    if (f && (!best || f->index < best->index)) best = std::move(f);
  }
  return best;
}

struct VerifyOptions {
  bool exhaustive = false;
  std::size_t samples = 0;
  std::uint64_t seed = 1;
  std::optional<std::string> circuit_path;
};

inline constexpr std::size_t kMaxExhaustiveBits = 20;

int cmd_verify(const BuildOptions& o, const VerifyOptions& vo, std::ostream& out) {
  if (vo.exhaustive == (vo.samples > 0)) {
    throw UsageError("give exactly one of --exhaustive or --samples N (N > 0)");
  }
  std::mt19937_64 rng(vo.seed);
  std::optional<BigInt> k;
  if (o.k) {
    k = parse_bigint(*o.k);
  } else if (o.n && is_constant(kinds().at(o.kind))) {
    k = random_bits(rng, *o.n);
  }
  const Artifact art = make_artifact(o, k);

  Circuit circuit = art.circuit;
  if (vo.circuit_path) {
    circuit = load_circuit(*vo.circuit_path);
    if (!circuit.same_wires(art.circuit)) {
      throw UsageError(*vo.circuit_path + " does not have the wires of --kind " + o.kind +
                       " with these parameters");
    }
  }
  const Verifier verifier(art, circuit);

  std::size_t count = 0;
  std::optional<Failure> failure;
  if (vo.exhaustive) {
    const std::size_t bits = verifier.input_bits();
    if (bits > kMaxExhaustiveBits) {
      throw UsageError("--exhaustive needs an input space of at most 2^20, this one is 2^" +
                       std::to_string(bits) + "; use --samples");
    }
    count = std::size_t{1} << bits;
    failure = check_all(verifier, count,
                        [&](std::size_t i) { return verifier.case_from_index(i); });
  } else {
    count = vo.samples;
    std::vector<Case> cases;
    cases.reserve(count);
    for (std::size_t i = 0; i < count; ++i) cases.push_back(verifier.random_case(rng));
    failure = check_all(verifier, count, [&](std::size_t i) { return cases[i]; });
  }

  std::string label = "kind=" + o.kind;
  if (art.n) label += " n=" + std::to_string(art.n);
  if (art.plan) {
    label += " scheme=" + art.scheme.name() + " c=" + std::to_string(art.plan->c);
  }
  if (art.k) label += " k=" + art.k->str();
  if (failure) {
    out << "FAIL " << label << " case=" << failure->index << " " << failure->message
        << "\n";
    return kExitCounterexample;
  }
  out << "PASS " << label << " cases=" << count
      << (vo.exhaustive ? " mode=exhaustive" : " mode=sampled seed=" + std::to_string(vo.seed))
      << "\n";
  return kExitPass;
}

// stats

int cmd_stats(const std::string& path, bool expand, bool csv,
              const std::optional<std::string>& plan_path, std::ostream& out) {
  const Circuit c = load_circuit(path);
  ResourceReport r = report(c);
  if (plan_path) {
    const BlockPlan plan = plan_from_json(read_json_file(*plan_path));
    if (plan.register_width() > c.width()) {
      throw UsageError(*plan_path + " describes more register wires than " + path + " has");
    }
    r.ancilla_generated = plan_ancilla_generated(plan);
  }
  if (expand) r = expand_cost_model(r);
  if (csv) {
    out << csv_header() << "\n" << csv_row(r) << "\n";
  } else {
    out << report_to_json(r).dump(2) << "\n";
  }
  return kExitPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mixed-radix reversible circuit toolkit", "qudit"};
  app.require_subcommand(1);

  BuildOptions build_opts;
  std::string out_path = "circuit.json";
  auto* build = app.add_subcommand("build", "Build a circuit and write it as JSON");
  add_build_options(*build, build_opts);
  build->add_option("--out", out_path, "Output circuit path");

  std::string sim_path;
  std::string sim_input;
  auto* simulate = app.add_subcommand("simulate", "Run a circuit on one basis state");
  simulate->add_option("circuit", sim_path, "Circuit JSON file")->required();
  simulate->add_option("--input", sim_input, "Digits, comma separated")->required();

  BuildOptions verify_opts;
  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "Check a circuit kind against its oracle");
  add_build_options(*verify, verify_opts);
  verify->add_flag("--exhaustive", vo.exhaustive, "Try every input");
  verify->add_option("--samples", vo.samples, "Number of random inputs");
  verify->add_option("--seed", vo.seed, "Seed for mt19937_64");
  verify->add_option("--circuit", vo.circuit_path, "Check this file instead of a fresh build");

  std::string stats_path;
  bool expand = false;
  bool csv = false;
  std::optional<std::string> plan_path;
  auto* stats = app.add_subcommand("stats", "Print a resource report");
  stats->add_option("circuit", stats_path, "Circuit JSON file")->required();
  stats->add_flag("--expand-cost-model", expand, "Charge 2-controlled gates at 6+10");
  stats->add_flag("--csv", csv, "CSV header and row instead of JSON");
  stats->add_option("--plan", plan_path, "Plan sidecar for generated-ancilla counts");

  std::vector<const char*> argv{"qudit"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*build) return cmd_build(build_opts, out_path, out);
    if (*simulate) return cmd_simulate(sim_path, sim_input, out);
    if (*verify) return cmd_verify(verify_opts, vo, out);
    return cmd_stats(stats_path, expand, csv, plan_path, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace qudit::cli
