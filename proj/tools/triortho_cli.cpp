// Copyright 2026 The triortho Authors.
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

// triortho command-line frontend.
//
// Exit codes: 0 ok, 2 usage or domain error, 3 internal assertion,
// 4 mismatch against the reference values.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "triortho/triortho.hpp"

namespace {

using namespace triortho;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;
constexpr int kExitMismatch = 4;

struct Options {
  std::uint32_t r = 8;
  int j = 0;
  std::optional<long long> k;
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string out;
  std::string binary_out;
  std::string reference;
  std::string outcomes = "all";
  int n = 1;
  int j_max = 4;
  std::size_t samples = 10000;
  std::size_t trials = 1000;
  std::size_t phase_samples = 1000;
  bool table3 = false;
  bool verify_table3 = false;
  bool emit_stabilizers = false;
  bool no_m_gamma = false;
};

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot write " + path);
  f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

ReferenceData reference_for(const Options& o) {
  return o.reference.empty() ? embedded_reference() : load_reference(o.reference);
}

Json mismatches_json(const std::vector<CellMismatch>& ms) {
  Json out = Json::array();
  for (const CellMismatch& m : ms)
    out.push_back(Json{{"r", m.r}, {"j", m.j}, {"column", m.column}, {"printed", m.printed}, {"computed", m.computed}});
  return out;
}

int cmd_construct(const Options& o) {
  const AgCode c = construct_base_code(o.r);
  const Field& F = c.code.field();
  TriorthogonalityOptions topt;
  topt.exhaustive = o.r <= 8;
  topt.samples = o.samples;
  topt.seed = o.seed;
  const TriorthogonalityReport tri = is_triorthogonal(c.code, topt);
  const DistanceCertificate dist = distance_certificate(c);

  std::optional<bool> matches;
  for (const ReferenceBaseCode& b : reference_for(o).base_codes)
    if (b.r == o.r)
      matches = b.n == static_cast<std::int64_t>(c.code.n()) && b.k == static_cast<std::int64_t>(c.code.k()) &&
                b.d == dist.lower && dist.exact;

  if (!o.binary_out.empty()) write_output(matrix_binary(F, c.code.generator()), o.binary_out);
  if (o.format == "csv") {
    write_output(matrix_csv(F, c.code.generator()), o.out);
  } else {
    Json j{{"command", "construct"},
           {"r", o.r},
           {"field", field_json(F)},
           {"n", c.code.n()},
           {"k", c.code.k()},
           {"d", dist.lower},
           {"deg_G", c.deg_g()},
           {"D", divisor_json(F, c.d)},
           {"G", divisor_json(F, c.g)},
           {"triorthogonality", triorthogonality_json(tri)},
           {"triorthogonality_mode", topt.exhaustive ? "exhaustive" : "sampled"},
           {"distance", distance_json(F, dist)},
           {"reference_match", matches ? Json(*matches) : Json(nullptr)},
           {"generator", hex_matrix_json(F, c.code.generator())}};
    write_output(dump(j), o.out);
  }
  if (!tri.triorthogonal) {
    std::cerr << "code is not triorthogonal\n";
    return kExitInternal;
  }
  if (matches && !*matches) {
    std::cerr << "parameters differ from the reference values\n";
    return kExitMismatch;
  }
  return kExitOk;
}

int cmd_quantum(const Options& o) {
  if (o.verify_table3) {
    const auto ms = verify_table3(reference_for(o));
    Json j{{"command", "quantum --verify-table3"}, {"mismatches", mismatches_json(ms)}, {"passed", ms.empty()}};
    write_output(dump(j), o.out);
    for (const CellMismatch& m : ms)
      std::cerr << "mismatch r=" << m.r << " j=" << m.j << " " << m.column << ": printed " << m.printed
                << ", computed " << m.computed << "\n";
    return ms.empty() ? kExitOk : kExitMismatch;
  }
  if (o.table3) {
    const auto rows = table3({8, 16, 32}, 0, o.j_max);
    write_output(o.format == "csv" ? table3_csv(rows) : dump(table3_json(rows)), o.out);
    return kExitOk;
  }

  const TowerLevel t{o.r, o.j};
  std::optional<QuantumParams> q;
  if (o.k)
    q = quantum_params(t, *o.k);
  else
    q = optimize_k(t);
  if (!q) throw InvalidK("no valid K at this level");
  Json j{{"command", "quantum"}, {"params", quantum_params_json(*q)}};

  if (o.emit_stabilizers) {
    if (o.j != 0) throw std::domain_error("--emit-stabilizers needs --j 0 (explicit generators exist only for the base code)");
    const AgCode c = construct_base_code(o.r);
    const CssCode css = build_css(c.code, static_cast<std::size_t>(q->k_log), c.deg_g(), 0);
    const HeuristicDistance h = heuristic_distance_upper(css, o.trials, o.seed);
    const PhaseCheckReport phase = transversal_ccz_phase_check(css.form, o.phase_samples, o.seed);
    j["css"] = css_json(css);
    j["heuristic_upper"] = Json{{"trials", o.trials}, {"x", h.x_upper}, {"z", h.z_upper}, {"min", h.upper}};
    j["phase_check"] = Json{{"samples", phase.samples}, {"passed", phase.passed}};
    write_output(dump(j), o.out);
    return phase.passed ? kExitOk : kExitInternal;
  }
  write_output(dump(j), o.out);
  return kExitOk;
}

int cmd_tvz(const Options& o) {
  write_output(dump(tvz_json(tvz_check(o.r))), o.out);
  return kExitOk;
}

int cmd_plan(const Options& o) {
  write_output(dump(plan_json(plan_reduction(o.n))), o.out);
  return kExitOk;
}

OutcomeSelection parse_outcomes(const Options& o) {
  OutcomeSelection sel;
  sel.seed = o.seed;
  if (o.outcomes == "all") return sel;
  if (o.outcomes.rfind("sample:", 0) == 0) {
    sel.mode = OutcomeMode::kSample;
    sel.samples = std::stoul(o.outcomes.substr(7));
    return sel;
  }
  sel.mode = OutcomeMode::kFixed;
  std::istringstream in(o.outcomes);
  std::string cell;
  const Field S = make_field(std::countr_zero(o.r));
  for (int i = 0; i < 3; ++i) {
    if (!std::getline(in, cell, ',')) throw std::invalid_argument("--outcomes expects all, sample:N or a,b,c");
    sel.fixed[i] = from_hex(S, cell).bits;
  }
  return sel;
}

int cmd_reduce_sim(const Options& o) {
  const SimulationReport rep = simulate_reduction(o.r, parse_outcomes(o), !o.no_m_gamma, false);
  write_output(dump(simulation_json(rep)), o.out);
  if (!rep.passed) {
    std::cerr << rep.diagnostics << "\n";
    return kExitMismatch;
  }
  return kExitOk;
}

int cmd_trace_check(const Options& o) {
  const bool exhaustive = o.r <= 8;
  const TraceIdentityReport rep = trace_identity_check(o.r, exhaustive, o.samples, o.seed);
  const QuadraticExtension ext(o.r);
  Json j{{"command", "trace-check"}, {"r", o.r}, {"exhaustive", exhaustive}, {"checked", rep.checked}, {"holds", rep.holds}};
  if (rep.counterexample) j["counterexample"] = hex_vector_json(ext.big(), *rep.counterexample);
  write_output(dump(j), o.out);
  return rep.holds ? kExitOk : kExitInternal;
}

struct Check {
  std::string name;
  bool passed;
  Json detail;
};

int cmd_verify_all(const Options& o) {
  const ReferenceData ref = reference_for(o);
  std::vector<Check> checks;

  for (std::uint32_t r : {8U, 16U, 32U}) {
    const QuadraticExtension ext(r);
    const Divisor got = divisor_of_differential(eta0_differential(ext));
    const bool ok = got == expected_eta0_divisor(ext) && got.degree() == -2;
    checks.push_back({"eta0_divisor_r" + std::to_string(r), ok, Json{{"degree", got.degree()}}});
    const bool cond = check_triorthogonality_condition(base_divisor_g0(ext), base_divisor_d0(ext), got);
    checks.push_back({"divisor_condition_r" + std::to_string(r), cond, Json::object()});
  }

  for (const ReferenceBaseCode& b : ref.base_codes) {
    const AgCode c = construct_base_code(b.r);
    const DistanceCertificate d = distance_certificate(c);
    TriorthogonalityOptions topt;
    topt.exhaustive = b.r <= 8;
    topt.seed = o.seed;
    const TriorthogonalityReport tri = is_triorthogonal(c.code, topt);
    const bool params = b.n == static_cast<std::int64_t>(c.code.n()) && b.k == static_cast<std::int64_t>(c.code.k()) &&
                        b.d == d.lower && d.exact;
    checks.push_back({"base_code_r" + std::to_string(b.r), params && tri.triorthogonal,
                      Json{{"n", c.code.n()}, {"k", c.code.k()}, {"d", d.lower}, {"triples_checked", tri.triples_checked}}});
  }

  const auto ms = verify_table3(ref);
  checks.push_back({"table3", ms.empty(), Json{{"mismatches", mismatches_json(ms)}}});

  for (std::uint64_t r : {8ULL, 16ULL, 32ULL}) {
    const TvzReport t = tvz_check(r);
    checks.push_back({"tvz_r" + std::to_string(r), t.family_meets_claimed_bound && t.margin_claimed_vs_tvz > 0,
                      Json{{"family_sum", rational_json(t.family_sum)},
                           {"claimed_bound", rational_json(t.claimed_bound)},
                           {"tvz_bound", rational_json(t.tvz_bound)},
                           {"family_beats_gv", t.family_beats_gv}}});
  }

  for (std::uint32_t r : {2U, 4U, 8U, 16U, 32U}) {
    const bool exhaustive = r <= 8;
    const TraceIdentityReport t = trace_identity_check(r, exhaustive, 1000000, derive_seed(o.seed, r));
    checks.push_back({"trace_identity_r" + std::to_string(r), t.holds, Json{{"checked", t.checked}}});
  }

  for (std::uint32_t r : {2U, 4U, 8U}) {
    const SimulationReport s = simulate_reduction(r, {}, true, false);
    checks.push_back({"reduction_r" + std::to_string(r), s.passed,
                      Json{{"min_fidelity_gamma", rounded(s.min_fidelity_gamma, 12)},
                           {"min_fidelity_final", rounded(s.min_fidelity_final, 12)},
                           {"diagnostics", s.diagnostics}}});
  }

  bool budgets = true;
  for (int n = 1; n <= 64; ++n) budgets = budgets && plan_reduction(n).within_budget;
  checks.push_back({"plan_budgets", budgets && plan_reduction(1).totals == kReductionBudget, Json::object()});

  Json report = Json::array();
  std::optional<std::string> first_failure;
  for (const Check& c : checks) {
    report.push_back(Json{{"check", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    if (!c.passed && !first_failure) first_failure = c.name;
  }
  write_output(dump(Json{{"command", "verify-all"}, {"seed", o.seed}, {"checks", report}, {"passed", !first_failure}}),
               o.out);
  if (first_failure) {
    std::cerr << "first failing check: " << *first_failure << "\n";
    return kExitMismatch;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Triorthogonal AG codes and qudit CCZ state tools"};
  app.require_subcommand(1);
  Options o;
  auto positive_pow2 = CLI::Validator(
      [](std::string& s) {
        const unsigned long v = std::stoul(s);
        return v >= 2 && (v & (v - 1)) == 0 ? std::string() : "must be a power of two >= 2";
      },
      "POW2");
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "Seed for randomized procedures");
    sub->add_option("--out", o.out, "Output path (default stdout)");
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  };

  auto* construct = app.add_subcommand("construct", "Base code C_0 over GF(r^2)");
  construct->add_option("--r", o.r, "r = 2^m, m >= 3")->required()->check(positive_pow2);
  construct->add_option("--samples", o.samples, "Random triples when r > 8");
  construct->add_option("--binary", o.binary_out, "Also write the generator in TOGM binary format");
  construct->add_option("--reference", o.reference, "Reference data JSON (default: embedded)");
  add_common(construct);

  auto* quantum = app.add_subcommand("quantum", "Quantum code parameters and stabilizers");
  quantum->add_option("--r", o.r, "r = 2^m")->check(positive_pow2);
  quantum->add_option("--j", o.j, "Tower level")->check(CLI::NonNegativeNumber);
  quantum->add_option("--k", o.k, "Logical qudits K (default: argmin gamma)");
  quantum->add_flag("--table3", o.table3, "Best code per level for r in {8,16,32}");
  quantum->add_option("--j-max", o.j_max, "Last level for --table3")->check(CLI::NonNegativeNumber);
  quantum->add_flag("--verify-table3", o.verify_table3, "Compare best codes against the reference table");
  quantum->add_flag("--emit-stabilizers", o.emit_stabilizers, "Build the CSS code (j = 0 only)");
  quantum->add_option("--trials", o.trials, "Heuristic distance trials");
  quantum->add_option("--phase-samples", o.phase_samples, "Transversal CCZ phase samples");
  quantum->add_option("--reference", o.reference, "Reference data JSON (default: embedded)");
  add_common(quantum);

  auto* verify = app.add_subcommand("verify-all", "Run every check and report");
  verify->add_option("--reference", o.reference, "Reference data JSON (default: embedded)");
  add_common(verify);

  auto* reduce = app.add_subcommand("reduce-sim", "Simulate |CCZ>_{r^2} -> |CCZ>_r");
  reduce->add_option("--r", o.r, "r = 2^m <= 8")->check(positive_pow2);
  reduce->add_option("--outcomes", o.outcomes, "all | sample:N | a,b,c (hex)");
  reduce->add_flag("--no-m-gamma", o.no_m_gamma, "Stop before M_gamma");
  add_common(reduce);

  auto* plan = app.add_subcommand("plan", "Reduction plan for |CCZ> on 2^n-dimensional qudits");
  plan->add_option("--n", o.n, "Target n")->required()->check(CLI::PositiveNumber);
  add_common(plan);

  auto* tvz = app.add_subcommand("tvz", "Asymptotic bound report");
  tvz->add_option("--r", o.r, "r = 2^m")->check(positive_pow2);
  add_common(tvz);

  auto* trace = app.add_subcommand("trace-check", "Trace decomposition identity");
  trace->add_option("--r", o.r, "r = 2^m")->check(positive_pow2);
  trace->add_option("--samples", o.samples, "Random triples when r > 8");
  add_common(trace);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*construct) return cmd_construct(o);
    if (*quantum) return cmd_quantum(o);
    if (*verify) return cmd_verify_all(o);
    if (*reduce) return cmd_reduce_sim(o);
    if (*plan) return cmd_plan(o);
    if (*tvz) return cmd_tvz(o);
    if (*trace) return cmd_trace_check(o);
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const ProtocolViolation& e) {
    std::cerr << "protocol violation: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
