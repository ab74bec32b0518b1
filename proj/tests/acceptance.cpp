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

// Acceptance run: one PASS/FAIL line per criterion. Exits nonzero if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "triortho/triortho.hpp"

namespace {

using namespace triortho;

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void run(int id, const char* title, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > limit_s) {
    o.pass = false;
    o.detail += "; runtime over " + std::to_string(static_cast<int>(limit_s)) + " s";
  }
  if (!o.pass) ++failures;
  std::printf("%s C%d %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.c_str(), secs);
  std::fflush(stdout);
}

std::string params(const AgCode& c, const DistanceCertificate& d) {
  std::ostringstream s;
  s << "[" << c.code.n() << "," << c.code.k() << "," << d.lower << "]_" << c.code.q();
  return s.str();
}

Outcome base_code(std::uint32_t r, std::size_t n, std::size_t k, long long d, bool exhaustive) {
  const AgCode c = construct_base_code(r);
  const DistanceCertificate cert = distance_certificate(c);
  TriorthogonalityOptions opt;
  opt.exhaustive = exhaustive;
  opt.samples = 10000;
  opt.seed = r;
  const TriorthogonalityReport tri = is_triorthogonal(c.code, opt);
  const bool singleton = cert.lower == static_cast<long long>(c.code.n() - c.code.k() + 1);
  const bool triples_ok = exhaustive ? tri.triples_checked == k * k * k : tri.triples_checked == 10000;
  const bool ok = c.code.n() == n && c.code.k() == k && cert.lower == d && cert.exact && singleton &&
                  weight(cert.witness) == static_cast<std::size_t>(d) && tri.triorthogonal && tri.contains_all_ones &&
                  triples_ok;
  std::ostringstream s;
  s << params(c, cert) << ", witness weight " << weight(cert.witness) << ", " << tri.triples_checked
    << (exhaustive ? " triples (exhaustive)" : " sampled triples") << ", all-ones "
    << (tri.contains_all_ones ? "in code" : "missing");
  return {ok, s.str()};
}

}  // namespace

int main() {
  run(1, "base code r=8", 10, [] { return base_code(8, 56, 19, 38, true); });

  run(2, "base codes r=16,32", 120, [] {
    const Outcome a = base_code(16, 240, 69, 172, false);
    const Outcome b = base_code(32, 992, 331, 662, false);
    return Outcome{a.pass && b.pass, a.detail + " | " + b.detail};
  });

  run(3, "eta0 divisor", 1, [] {
    Outcome o;
    for (std::uint32_t r : {8U, 16U, 32U}) {
      const QuadraticExtension ext(r);
      const Divisor got = divisor_of_differential(eta0_differential(ext));
      const bool ok = got == expected_eta0_divisor(ext) && got.degree() == -2;
      o.pass = o.pass && ok;
      o.detail += "r=" + std::to_string(r) + (ok ? " ok " : " MISMATCH ");
    }
    return o;
  });

  run(4, "best-code table", 60, [] {
    const auto ms = verify_table3(embedded_reference());
    Outcome o{ms.empty(), "15 rows, " + std::to_string(ms.size()) + " mismatched cells"};
    for (const CellMismatch& m : ms)
      o.detail += "; (r=" + std::to_string(m.r) + ",j=" + std::to_string(m.j) + ") " + m.column + " printed " +
                  m.printed + " computed " + m.computed;
    return o;
  });

  run(5, "TVZ inequality", 1, [] {
    Outcome o;
    for (std::uint64_t r : {8ULL, 16ULL, 32ULL}) {
      const TvzReport t = tvz_check(r);
      const bool ok = t.family_sum >= t.claimed_bound && t.claimed_bound > t.tvz_bound &&
                      t.margin_family_vs_claimed >= 0 && t.margin_claimed_vs_tvz > 0;
      o.pass = o.pass && ok;
      std::ostringstream s;
      s << "r=" << r << " lim(k/n+d/n)=" << t.family_sum << " vs claimed " << t.claimed_bound << " (margin "
        << t.margin_family_vs_claimed << "), TVZ " << t.tvz_bound << "; ";
      o.detail += s.str();
    }
    return o;
  });

  run(6, "CSS [[42,14,6]]_64", 120, [] {
    const AgCode c = construct_base_code(8);
    const Field& F = c.code.field();
    const CssCode q = build_css(c.code, 14, c.deg_g(), 0);
    const bool perp = rows_orthogonal(F, q.form.h0, q.form.h1);
    const PhaseCheckReport phase = transversal_ccz_phase_check(q.form, 1000, 6);
    const HeuristicDistance h = heuristic_distance_upper(q, 100000, 6);
    const bool ok = perp && q.n_phys == 42 && q.d_z_lower == 6 && q.d_x_lower == 24 && q.d_z_lower < q.d_x_lower &&
                    phase.passed && phase.samples == 1000 && h.upper >= 6;
    std::ostringstream s;
    s << "H0 perp H1 " << (perp ? "yes" : "no") << ", d_z>=" << q.d_z_lower << " < d_x>=" << q.d_x_lower
      << ", phase check " << (phase.passed ? "passed" : "failed") << " on " << phase.samples
      << " triples, heuristic min over 1e5 trials " << h.upper << " (x " << h.x_upper << ", z " << h.z_upper << ")";
    return Outcome{ok, s.str()};
  });

  run(7, "trace identity", 60, [] {
    Outcome o;
    for (std::uint32_t r : {2U, 4U, 8U, 16U, 32U}) {
      const bool exhaustive = r <= 8;
      const TraceIdentityReport t = trace_identity_check(r, exhaustive, 1000000, r);
      const std::size_t want = exhaustive ? std::size_t{r} * r * r * r * r * r : 1000000;
      const bool ok = t.holds && t.checked == want;
      o.pass = o.pass && ok;
      o.detail += "r=" + std::to_string(r) + (ok ? " ok" : " FAILED") + " (" + std::to_string(t.checked) + ") ";
    }
    return o;
  });

  run(8, "reduction simulation", 180, [] {
    Outcome o;
    for (std::uint32_t r : {2U, 4U, 8U}) {
      const SimulationReport s = simulate_reduction(r, {}, true, false);
      bool counts = s.outcomes.size() == std::size_t{r} * r * r;
      bool fid = true;
      for (const OutcomeResult& x : s.outcomes) {
        counts = counts && x.single_qudit == 4 && x.two_qudit == 3 && x.measurements == 3;
        fid = fid && x.fidelity_gamma >= 1 - kFidelityTolerance && x.fidelity_final >= 1 - kFidelityTolerance;
      }
      const bool ok = s.passed && fid && counts;
      o.pass = o.pass && ok;
      const std::size_t one = s.outcomes.empty() ? 0 : s.outcomes.front().single_qudit;
      const std::size_t two = s.outcomes.empty() ? 0 : s.outcomes.front().two_qudit;
      char buf[200];
      std::snprintf(buf, sizeof buf, "r=%u %s (min F_gamma %.12f, min F %.12f, gates %zu+%zu)%s; ", r,
                    ok ? "ok" : "FAILED", s.min_fidelity_gamma, s.min_fidelity_final, one, two,
                    s.diagnostics.empty() ? "" : " gamma=0, M_gamma not invertible");
      o.detail += buf;
    }
    return o;
  });

  run(9, "reduction budgets", 1, [] {
    GateTotals worst;
    bool ok = true;
    for (int n = 1; n <= 64; ++n) {
      const ReductionPlan p = plan_reduction(n);
      ok = ok && p.within_budget;
      worst.measurements = std::max(worst.measurements, p.totals.measurements);
      worst.single_qudit = std::max(worst.single_qudit, p.totals.single_qudit);
      worst.two_qudit = std::max(worst.two_qudit, p.totals.two_qudit);
    }
    const GateTotals n1 = plan_reduction(1).totals;
    ok = ok && n1 == kReductionBudget && worst == kReductionBudget;
    char buf[128];
    std::snprintf(buf, sizeof buf, "max over n=1..64 (%d,%d,%d), n=1 (%d,%d,%d)", worst.measurements,
                  worst.single_qudit, worst.two_qudit, n1.measurements, n1.single_qudit, n1.two_qudit);
    return Outcome{ok, buf};
  });

  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
