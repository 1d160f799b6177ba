// Copyright 2026 The opgraph developers
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

// Command-line driver: synthesize channels from operator systems, extract
// operator graphs from channels, and verify the round trip end to end.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/parse/validation
// errors. Diagnostics go to stderr.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "opgraph/errors.hpp"
#include "opgraph/graph.hpp"
#include "opgraph/serialize.hpp"

namespace {

using namespace opgraph;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write file '" + path + "'");
  out << content;
  if (!out) throw ParseError("failed while writing '" + path + "'");
}

EffectKind parse_kind(const std::string& name) {
  if (name == "duan") return EffectKind::duan;
  if (name == "geometric") return EffectKind::geometric;
  throw ParameterError("--kind must be 'duan' or 'geometric'");
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

int do_synthesize(const std::string& system_file, const std::string& kind_name,
                  const std::string& out_file) {
  const OperatorSystem s = parse_operator_system(read_file(system_file));
  const EffectKind kind = parse_kind(kind_name);
  const EffectBasis basis =
      kind == EffectKind::duan ? duan_effect_basis(s) : geometric_effect_sequence(s);
  const QuantumChannel phi = synthesize_channel(basis);
  write_file(out_file, emit(phi));
  std::cout << "synthesized channel [" << kind_name << "]: dim_in=" << phi.dim_in()
            << " dim_out=" << phi.dim_out() << " kraus=" << phi.kraus_count() << " -> "
            << out_file << "\n";
  return 0;
}

int do_extract(const std::string& channel_file, const std::string& out_file) {
  const QuantumChannel phi = parse_channel(read_file(channel_file));
  const GraphExtraction g = operator_graph(phi);
  write_file(out_file, emit(g.system));
  std::cout << "extracted operator graph: dim_h=" << g.system.dim_h()
            << " dim=" << g.system.dim() << " -> " << out_file << "\n";
  return 0;
}

int do_verify(const std::string& system_file, const std::string& kind_name,
              const std::string& json_file) {
  const OperatorSystem s = parse_operator_system(read_file(system_file));
  const RoundTripReport r = verify_round_trip(s, parse_kind(kind_name));

  auto ok = [](bool v) { return v ? "ok" : "FAIL"; };
  std::cout << "system: dim_h=" << r.dim_h << " dim=" << r.system_dim << "\n";
  std::cout << "effects [" << effect_kind_name(r.kind) << "]: count=" << r.effect_count
            << " spectrum=[" << sci(r.effect_min_eigenvalue) << ", "
            << sci(r.effect_max_eigenvalue) << "] " << ok(r.effect_spectrum_ok)
            << "  sum_residual=" << sci(r.effect_sum_residual) << " " << ok(r.effect_sum_ok)
            << "  span_distance=" << sci(r.effect_span_distance) << " " << ok(r.effect_span_ok)
            << "\n";
  if (r.kind == EffectKind::geometric) {
    std::cout << "geometric bounds: norm_decay_margin=" << sci(r.norm_decay_margin)
              << " identity_defect=" << sci(r.identity_defect_norm) << " "
              << ok(r.geometric_bounds_ok) << "\n";
  }
  std::cout << "channel: dim_out=" << r.dim_out << " kraus=" << r.kraus_count
            << " tp_residual=" << sci(r.tp_residual) << " " << ok(r.tp_ok)
            << "  kraus_orthogonality=" << sci(r.kraus_orthogonality_residual) << " "
            << ok(r.kraus_orthogonality_ok) << "\n";
  std::cout << "choi: min_eigenvalue=" << sci(r.choi_min_eigenvalue) << " " << ok(r.choi_psd_ok)
            << "  partial_trace_residual=" << sci(r.choi_tp_residual) << " " << ok(r.choi_tp_ok)
            << "\n";
  std::cout << "graph: dim=" << r.graph_dim_complex
            << " projector_distance=" << sci(r.projector_distance) << " "
            << (r.graph_equal ? "equal" : "NOT EQUAL") << "\n";
  std::cout << "verdict: " << (r.verdict ? "PASS" : "FAIL") << "\n";

  if (!json_file.empty()) write_file(json_file, emit_report(r));
  return r.verdict ? 0 : 1;
}

int do_random_system(std::size_t dim_h, std::size_t dim_s, std::uint64_t seed,
                     const std::string& out_file) {
  const OperatorSystem s = random_system(dim_h, dim_s, seed);
  write_file(out_file, emit(s));
  std::cout << "random system: dim_h=" << s.dim_h() << " dim=" << s.dim() << " seed=" << seed
            << " -> " << out_file << "\n";
  return 0;
}

int do_random_channel(std::size_t dim_in, std::size_t dim_out, std::size_t kraus,
                      std::uint64_t seed, const std::string& out_file) {
  const QuantumChannel phi = random_channel(dim_in, dim_out, kraus, seed);
  write_file(out_file, emit(phi));
  std::cout << "random channel: dim_in=" << phi.dim_in() << " dim_out=" << phi.dim_out()
            << " kraus=" << phi.kraus_count() << " seed=" << seed << " -> " << out_file << "\n";
  return 0;
}

void print_checks(const std::vector<CheckResult>& checks, bool& all_ok) {
  for (const auto& c : checks) {
    std::cout << "  " << c.name << ": value=" << sci(c.value)
              << " threshold=" << sci(c.threshold) << " " << (c.ok ? "ok" : "FAIL") << "\n";
    all_ok = all_ok && c.ok;
  }
}

int do_info(const std::string& file, bool strict) {
  const Document doc = parse_any(read_file(file));
  std::cout << "kind: " << document_kind_name(doc) << "\n";
  bool all_ok = true;
  if (const auto* m = std::get_if<ComplexMatrix>(&doc)) {
    std::cout << "rows: " << m->rows() << "\ncols: " << m->cols() << "\n";
    std::cout << "frobenius_norm: " << sci(m->frobenius_norm()) << "\n";
    if (m->is_square()) {
      std::cout << "hermiticity_residual: " << sci(hermiticity_residual(*m)) << "\n";
    }
  } else if (const auto* s = std::get_if<OperatorSystem>(&doc)) {
    std::cout << "dim_h: " << s->dim_h() << "\ndim: " << s->dim() << "\n";
    print_checks(check_operator_system(*s, strict), all_ok);
  } else if (const auto* e = std::get_if<EffectBasis>(&doc)) {
    std::cout << "dim_h: " << e->dim_h() << "\ncount: " << e->size()
              << "\nbasis_kind: " << effect_kind_name(e->kind) << "\n";
    print_checks(check_effect_basis(*e, strict), all_ok);
  } else {
    const auto& phi = std::get<QuantumChannel>(doc);
    std::cout << "dim_in: " << phi.dim_in() << "\ndim_out: " << phi.dim_out()
              << "\nkraus: " << phi.kraus_count() << "\n";
    print_checks(check_channel(phi, strict), all_ok);
  }
  if (!all_ok) {
    std::cerr << "invariant verification failed\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"operator systems <-> quantum channels: synthesis, graph extraction, verification"};
  app.require_subcommand(1);

  std::string in_file, out_file, kind_name = "duan", json_file;
  std::size_t dim_h = 2, dim_s = 1, dim_in = 2, dim_out = 2, kraus = 1;
  std::uint64_t seed = 0;
  bool strict = false;

  auto* synth = app.add_subcommand("synthesize", "build a channel whose graph is the system");
  synth->add_option("system-file", in_file)->required();
  synth->add_option("--kind", kind_name)->check(CLI::IsMember({"duan", "geometric"}));
  synth->add_option("-o,--output", out_file)->required();

  auto* extract = app.add_subcommand("extract", "operator graph of a Kraus channel");
  extract->add_option("channel-file", in_file)->required();
  extract->add_option("-o,--output", out_file)->required();

  auto* verify = app.add_subcommand("verify", "round-trip report for an operator system");
  verify->add_option("system-file", in_file)->required();
  verify->add_option("--kind", kind_name)->check(CLI::IsMember({"duan", "geometric"}));
  verify->add_option("--json", json_file, "write the machine-readable summary to this path");

  auto* rsys = app.add_subcommand("random-system", "seeded random operator system");
  rsys->add_option("--dim-h", dim_h)->required();
  rsys->add_option("--dim-s", dim_s)->required();
  rsys->add_option("--seed", seed)->required();
  rsys->add_option("-o,--output", out_file)->required();

  auto* rchan = app.add_subcommand("random-channel", "seeded random Kraus channel");
  rchan->add_option("--dim-in", dim_in)->required();
  rchan->add_option("--dim-out", dim_out)->required();
  rchan->add_option("--kraus", kraus)->required();
  rchan->add_option("--seed", seed)->required();
  rchan->add_option("-o,--output", out_file)->required();

  auto* info = app.add_subcommand("info", "dimensions, kind and invariant checks of a file");
  info->add_option("file", in_file)->required();
  info->add_flag("--strict", strict, "re-verify at construction tolerances");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(synth)) return do_synthesize(in_file, kind_name, out_file);
    if (app.got_subcommand(extract)) return do_extract(in_file, out_file);
    if (app.got_subcommand(verify)) return do_verify(in_file, kind_name, json_file);
    if (app.got_subcommand(rsys)) return do_random_system(dim_h, dim_s, seed, out_file);
    if (app.got_subcommand(rchan)) {
      return do_random_channel(dim_in, dim_out, kraus, seed, out_file);
    }
    if (app.got_subcommand(info)) return do_info(in_file, strict);
  } catch (const OpgraphError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
