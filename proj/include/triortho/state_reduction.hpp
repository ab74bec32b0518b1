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

// Reducing |CCZ>_{r^2} to |CCZ>_r.
//
// Write x = x0 theta + x1 theta^r with theta + theta^r = 1. Then
//
//   Tr_{r^2/r}(xyz) = gamma (x0 y0 z0 + x1 y1 z1) + eta * sum_{i+j+k in {1,2}} x_i y_j z_k
//
// with eta = theta^{r+1} and gamma = 1 + eta, both in GF(r). Measuring
// x0, y0, z0 with outcomes a, b, c leaves the phase
// gamma x1 y1 z1 + eta (bc x1 + ac y1 + ab z1 + c x1 y1 + b x1 z1 + a y1 z1)
// on the remaining registers (up to a global sign). Three Z-type and three
// CZ-type corrections remove the eta terms, giving |CCZ^gamma>_r, and
// M_gamma : |v> -> |gamma v> on x1 turns that into |CCZ>_r.
//
// Register values are field elements in polynomial-basis bits; register
// order is x0, y0, z0, x1, y1, z1, with register 0 most significant.

#ifndef TRIORTHO_STATE_REDUCTION_HPP
#define TRIORTHO_STATE_REDUCTION_HPP

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "triortho/errors.hpp"
#include "triortho/gf2m.hpp"
#include "triortho/random.hpp"

namespace triortho {

inline constexpr std::size_t kMaxDenseAmplitudes = std::size_t{1} << 24;

/// Dense real statevector; every register has dimension 2^m and is labelled
/// by GF(2^m).
class QuditState {
 public:
  QuditState(std::vector<std::uint32_t> dims, std::vector<double> amps)
      : dims_(std::move(dims)), amps_(std::move(amps)) {
    std::size_t total = 1;
    for (std::uint32_t d : dims_) {
      if (d < 2 || !std::has_single_bit(d)) throw std::invalid_argument("register dimensions must be powers of two");
      total *= d;
    }
    if (total != amps_.size()) throw std::invalid_argument("amplitude count does not match register dimensions");
    strides_.assign(dims_.size(), 1);
    for (std::size_t i = dims_.size(); i-- > 1;) strides_[i - 1] = strides_[i] * dims_[i];
  }

  const std::vector<std::uint32_t>& dims() const { return dims_; }
  const std::vector<double>& amplitudes() const { return amps_; }
  std::vector<double>& amplitudes() { return amps_; }
  std::size_t size() const { return amps_.size(); }

  std::uint32_t value(std::size_t index, std::size_t reg) const {
    return static_cast<std::uint32_t>((index / strides_[reg]) % dims_[reg]);
  }
  std::size_t stride(std::size_t reg) const { return strides_[reg]; }

  double norm() const {
    double s = 0;
    for (double a : amps_) s += a * a;
    return std::sqrt(s);
  }

 private:
  std::vector<std::uint32_t> dims_;
  std::vector<std::size_t> strides_;
  std::vector<double> amps_;
};

inline Field register_field(std::uint32_t dim) { return make_field(std::countr_zero(dim)); }

/// gamma = 1 + theta^{r+1} and eta = theta^{r+1} in GF(r) coordinates.
struct ReductionConstants {
  NormalBasisPair nb;
  Gf gamma;
  Gf eta;
  bool gamma_invertible = false;
};

inline ReductionConstants constants_for(const QuadraticExtension& ext, const NormalBasisPair& nb) {
  const Field& F = ext.big();
  const Gf norm = F.mul(nb.theta, nb.theta_conj);
  ReductionConstants c;
  c.nb = nb;
  c.eta = ext.subfield().project(norm);
  c.gamma = ext.subfield().project(Field::add(F.one(), norm));
  c.gamma_invertible = c.gamma.bits != 0;
  return c;
}

/// Smallest normalized theta with gamma != 0. For r = 2 no such theta exists
/// (every theta in GF(4) with theta + theta^2 = 1 has theta^3 = 1); the
/// smallest theta is returned with gamma_invertible = false.
inline ReductionConstants reduction_constants(const QuadraticExtension& ext) {
  const Field& F = ext.big();
  auto nb = find_normal_basis_if(ext, [&](const NormalBasisPair& p) {
    return F.mul(p.theta, p.theta_conj) != F.one();
  });
  return constants_for(ext, nb ? *nb : find_normal_basis(ext));
}

struct TraceIdentityReport {
  bool holds = true;
  std::size_t checked = 0;
  std::optional<std::array<Gf, 3>> counterexample;
};

/// Checks Tr_{r^2/r}(xyz) against the decomposed form, over all of
/// GF(r^2)^3 when exhaustive, otherwise on `samples` seeded triples.
inline TraceIdentityReport trace_identity_check(std::uint32_t r, bool exhaustive, std::size_t samples,
                                                std::uint64_t seed) {
  const QuadraticExtension ext(r);
  const ReductionConstants k = reduction_constants(ext);
  const Field& F = ext.big();
  const Field& S = ext.small();
  auto rhs = [&](Gf x, Gf y, Gf z) {
    const auto [x0, x1] = decompose(ext, k.nb, x);
    const auto [y0, y1] = decompose(ext, k.nb, y);
    const auto [z0, z1] = decompose(ext, k.nb, z);
    const std::array<Gf, 2> xs{x0, x1}, ys{y0, y1}, zs{z0, z1};
    Gf mixed = S.zero();
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int l = 0; l < 2; ++l) {
          const int s = i + j + l;
          if (s == 1 || s == 2) mixed = Field::add(mixed, S.mul(S.mul(xs[i], ys[j]), zs[l]));
        }
    const Gf diag = Field::add(S.mul(S.mul(x0, y0), z0), S.mul(S.mul(x1, y1), z1));
    return Field::add(S.mul(k.gamma, diag), S.mul(k.eta, mixed));
  };
  auto check = [&](Gf x, Gf y, Gf z, TraceIdentityReport& rep) {
    ++rep.checked;
    const Gf lhs = ext.subfield().trace(F.mul(F.mul(x, y), z));
    if (lhs != rhs(x, y, z)) {
      rep.holds = false;
      rep.counterexample = std::array<Gf, 3>{x, y, z};
      return false;
    }
    return true;
  };

  TraceIdentityReport rep;
  if (exhaustive) {
    for (Gf x : F.elements())
      for (Gf y : F.elements())
        for (Gf z : F.elements())
          if (!check(x, y, z, rep)) return rep;
  } else {
    Rng rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
      const Gf x{static_cast<std::uint32_t>(rng.below(F.order()))};
      const Gf y{static_cast<std::uint32_t>(rng.below(F.order()))};
      const Gf z{static_cast<std::uint32_t>(rng.below(F.order()))};
      if (!check(x, y, z, rep)) return rep;
    }
  }
  return rep;
}

/// |CCZ>_q with amplitudes q^{-3/2} (-1)^{Tr(xyz)}. With as_pairs, q = r^2
/// and each register is split into (x0, x1) over GF(r) using `nb`, giving six
/// registers ordered x0, y0, z0, x1, y1, z1.
inline QuditState build_ccz_state(std::uint32_t q, bool as_pairs, std::optional<NormalBasisPair> nb = std::nullopt) {
  if (q < 2 || !std::has_single_bit(q)) throw std::domain_error("field order must be a power of two");
  const std::uint64_t total = std::uint64_t{q} * q * q;
  if (total > kMaxDenseAmplitudes)
    throw std::domain_error("q^3 = " + std::to_string(total) + " exceeds the dense simulation limit 2^24");
  const Field F = make_field(std::countr_zero(q));
  const double amp = 1.0 / std::sqrt(static_cast<double>(total));
  if (!as_pairs) {
    std::vector<double> a(static_cast<std::size_t>(total));
    std::size_t idx = 0;
    for (std::uint32_t x = 0; x < q; ++x)
      for (std::uint32_t y = 0; y < q; ++y)
        for (std::uint32_t z = 0; z < q; ++z)
          a[idx++] = F.absolute_trace(F.mul(F.mul(Gf{x}, Gf{y}), Gf{z})) ? -amp : amp;
    return QuditState({q, q, q}, std::move(a));
  }
  if (F.degree() % 2 != 0) throw std::domain_error("as_pairs needs q = r^2");
  const std::uint32_t r = std::uint32_t{1} << (F.degree() / 2);
  const QuadraticExtension ext(r);
  const NormalBasisPair basis = nb ? *nb : reduction_constants(ext).nb;
  QuditState s({r, r, r, r, r, r}, std::vector<double>(static_cast<std::size_t>(total)));
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::array<Gf, 3> xyz;
    for (std::size_t t = 0; t < 3; ++t) xyz[t] = compose(ext, basis, Gf{s.value(i, t)}, Gf{s.value(i, t + 3)});
    s.amplitudes()[i] = ext.big().absolute_trace(ext.big().mul(ext.big().mul(xyz[0], xyz[1]), xyz[2])) ? -amp : amp;
  }
  return s;
}

struct CliffordGate {
  enum class Kind { kZpow, kCZpow, kMmul, kMeasureZ };
  Kind kind = Kind::kZpow;
  Gf beta{};  // exponent for Zpow/CZpow, multiplier for Mmul, outcome for MeasureZ
  std::size_t target = 0;
  std::size_t target2 = 0;  // CZpow only

  bool single_qudit() const { return kind == Kind::kZpow || kind == Kind::kMmul; }
  bool two_qudit() const { return kind == Kind::kCZpow; }
  bool measurement() const { return kind == Kind::kMeasureZ; }
};

/// Measurements of x0, y0, z0 with outcomes (a, b, c), then
/// Zpow(eta ab) on z1, Zpow(eta ac) on y1, Zpow(eta bc) on x1,
/// CZpow(eta a) on (y1, z1), CZpow(eta b) on (x1, z1), CZpow(eta c) on (x1, y1),
/// and Mmul(gamma) on x1. Outcomes and constants are GF(r) elements.
inline std::vector<CliffordGate> reduction_circuit(const Field& small, const ReductionConstants& k,
                                                   std::array<Gf, 3> outcome, bool apply_m_gamma = true) {
  using K = CliffordGate::Kind;
  const auto [a, b, c] = outcome;
  auto eta = [&](Gf u) { return small.mul(k.eta, u); };
  std::vector<CliffordGate> g = {
      {K::kMeasureZ, a, 0, 0},
      {K::kMeasureZ, b, 1, 0},
      {K::kMeasureZ, c, 2, 0},
      {K::kZpow, eta(small.mul(a, b)), 5, 0},
      {K::kZpow, eta(small.mul(a, c)), 4, 0},
      {K::kZpow, eta(small.mul(b, c)), 3, 0},
      {K::kCZpow, eta(a), 4, 5},
      {K::kCZpow, eta(b), 3, 5},
      {K::kCZpow, eta(c), 3, 4},
  };
  if (apply_m_gamma) {
    if (!k.gamma_invertible) throw std::domain_error("gamma = 0: M_gamma is not invertible");
    g.push_back({K::kMmul, k.gamma, 3, 0});
  }
  return g;
}

/// Applies one gate in place; a measurement projects onto its outcome,
/// renormalizes, and returns the outcome probability (1 for other gates).
inline double apply_gate(QuditState& s, const CliffordGate& g) {
  using K = CliffordGate::Kind;
  const Field F = register_field(s.dims().at(g.target));
  auto& amps = s.amplitudes();
  switch (g.kind) {
    case K::kZpow:
      for (std::size_t i = 0; i < s.size(); ++i)
        if (amps[i] != 0 && F.absolute_trace(F.mul(g.beta, Gf{s.value(i, g.target)}))) amps[i] = -amps[i];
      return 1.0;
    case K::kCZpow:
      if (s.dims().at(g.target2) != s.dims()[g.target]) throw std::invalid_argument("CZpow registers differ in dimension");
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (amps[i] == 0) continue;
        const Gf uv = F.mul(Gf{s.value(i, g.target)}, Gf{s.value(i, g.target2)});
        if (F.absolute_trace(F.mul(g.beta, uv))) amps[i] = -amps[i];
      }
      return 1.0;
    case K::kMmul: {
      if (g.beta.bits == 0) throw std::domain_error("M_gamma needs gamma != 0");
      std::vector<double> out(s.size(), 0.0);
      const std::size_t st = s.stride(g.target);
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (amps[i] == 0) continue;
        const std::uint32_t v = s.value(i, g.target);
        const std::uint32_t w = F.mul(g.beta, Gf{v}).bits;
        out[i - v * st + w * st] = amps[i];
      }
      amps = std::move(out);
      return 1.0;
    }
    case K::kMeasureZ: {
      double p = 0;
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (s.value(i, g.target) != g.beta.bits)
          amps[i] = 0;
        else
          p += amps[i] * amps[i];
      }
      if (p <= 0) throw ProtocolViolation("measurement outcome has zero probability");
      const double scale = 1.0 / std::sqrt(p);
      for (double& a : amps) a *= scale;
      return p;
    }
  }
  return 1.0;
}

/// Amplitudes of registers `keep` at fixed values of the others (the
/// post-measurement factor). Registers not kept must be fixed in `fixed`.
inline QuditState restrict_to(const QuditState& s, const std::vector<std::size_t>& keep,
                              const std::vector<std::pair<std::size_t, std::uint32_t>>& fixed) {
  std::vector<std::uint32_t> dims;
  std::size_t total = 1;
  for (std::size_t r : keep) {
    dims.push_back(s.dims()[r]);
    total *= s.dims()[r];
  }
  std::vector<double> out(total);
  std::size_t base = 0;
  for (auto [reg, v] : fixed) base += v * s.stride(reg);
  for (std::size_t j = 0; j < total; ++j) {
    std::size_t rem = j, idx = base;
    for (std::size_t t = keep.size(); t-- > 0;) {
      idx += (rem % dims[t]) * s.stride(keep[t]);
      rem /= dims[t];
    }
    out[j] = s.amplitudes()[idx];
  }
  return QuditState(std::move(dims), std::move(out));
}

inline double overlap(const QuditState& a, const QuditState& b) {
  if (a.dims() != b.dims()) throw std::invalid_argument("overlap of states with different registers");
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a.amplitudes()[i] * b.amplitudes()[i];
  return s;
}

/// |CCZ^gamma>_r: amplitudes r^{-3/2} (-1)^{Tr(gamma xyz)}.
inline QuditState ccz_gamma_state(std::uint32_t r, Gf gamma) {
  QuditState s = build_ccz_state(r, false);
  const Field F = register_field(r);
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Gf xyz = F.mul(F.mul(Gf{s.value(i, 0)}, Gf{s.value(i, 1)}), Gf{s.value(i, 2)});
    const double mag = std::fabs(s.amplitudes()[i]);
    s.amplitudes()[i] = F.absolute_trace(F.mul(gamma, xyz)) ? -mag : mag;
  }
  return s;
}

enum class OutcomeMode { kAll, kFixed, kSample };

struct OutcomeSelection {
  OutcomeMode mode = OutcomeMode::kAll;
  std::array<std::uint32_t, 3> fixed{};  // kFixed
  std::uint64_t seed = 0;                 // kSample
  std::size_t samples = 1;                // kSample
};

struct OutcomeResult {
  std::array<Gf, 3> outcome{};
  double probability = 0;           // product of the three measurement probabilities
  double fidelity_gamma = 0;        // |<CCZ^gamma_r | psi>| after corrections, before M_gamma
  double fidelity_final = 0;        // |<CCZ_r | psi>| at the end (after M_gamma when applied)
  double max_amplitude_error = 0;   // vs the target state, up to the global sign
  double leaked_norm = 0;           // weight outside the measured (a, b, c) block
  std::size_t measurements = 0;
  std::size_t single_qudit = 0;
  std::size_t two_qudit = 0;
};

struct SimulationReport {
  std::uint32_t r = 0;
  ReductionConstants constants;
  bool applied_m_gamma = true;
  std::vector<OutcomeResult> outcomes;
  double min_fidelity_gamma = 1;
  double min_fidelity_final = 1;
  bool passed = true;
  std::string diagnostics;
};

inline constexpr double kFidelityTolerance = 1e-10;
inline constexpr double kNormTolerance = 1e-12;

/// Dense simulation of the reduction from |CCZ>_{r^2} for r <= 8. Throws
/// ProtocolViolation on a failed check unless `throw_on_violation` is false,
/// in which case failures are recorded in the report.
inline SimulationReport simulate_reduction(std::uint32_t r, const OutcomeSelection& sel, bool apply_m_gamma = true,
                                           bool throw_on_violation = true) {
  if (r > 8) throw std::domain_error("dense reduction simulation supports r <= 8");
  const QuadraticExtension ext(r);
  const Field& S = ext.small();
  SimulationReport rep;
  rep.r = r;
  rep.constants = reduction_constants(ext);
  rep.applied_m_gamma = apply_m_gamma && rep.constants.gamma_invertible;
  if (apply_m_gamma && !rep.constants.gamma_invertible) {
    rep.passed = false;
    rep.diagnostics = "gamma = 1 + theta^(r+1) = 0 for every normalized theta at r=" + std::to_string(r) +
                      "; M_gamma is not invertible, so only |CCZ^gamma> = |+>^3 is produced";
  }
  const QuditState start = build_ccz_state(r * r, true, rep.constants.nb);
  const QuditState target_gamma = ccz_gamma_state(r, rep.constants.gamma);
  const QuditState target = build_ccz_state(r, false);

  std::vector<std::array<Gf, 3>> outcomes;
  if (sel.mode == OutcomeMode::kAll) {
    for (std::uint32_t a = 0; a < r; ++a)
      for (std::uint32_t b = 0; b < r; ++b)
        for (std::uint32_t c = 0; c < r; ++c) outcomes.push_back({Gf{a}, Gf{b}, Gf{c}});
  } else if (sel.mode == OutcomeMode::kFixed) {
    for (std::uint32_t v : sel.fixed)
      if (v >= r) throw std::domain_error("outcome value outside GF(r)");
    outcomes.push_back({Gf{sel.fixed[0]}, Gf{sel.fixed[1]}, Gf{sel.fixed[2]}});
  } else {
    // Born-rule sampling from the marginal of (x0, y0, z0).
    std::vector<double> marginal(static_cast<std::size_t>(r) * r * r, 0.0);
    for (std::size_t i = 0; i < start.size(); ++i)
      marginal[i / start.stride(2)] += start.amplitudes()[i] * start.amplitudes()[i];
    Rng rng(sel.seed);
    for (std::size_t s = 0; s < sel.samples; ++s) {
      const double u = static_cast<double>(rng.next() >> 11U) * 0x1.0p-53;
      double acc = 0;
      std::size_t pick = marginal.size() - 1;
      for (std::size_t m = 0; m < marginal.size(); ++m) {
        acc += marginal[m];
        if (u < acc) {
          pick = m;
          break;
        }
      }
      outcomes.push_back({Gf{static_cast<std::uint32_t>(pick / (r * r))},
                          Gf{static_cast<std::uint32_t>((pick / r) % r)}, Gf{static_cast<std::uint32_t>(pick % r)}});
    }
  }

  auto fail = [&](const std::string& why) {
    rep.passed = false;
    if (rep.diagnostics.empty()) rep.diagnostics = why;
    if (throw_on_violation) throw ProtocolViolation(why);
  };

  for (const auto& oc : outcomes) {
    OutcomeResult res;
    res.outcome = oc;
    QuditState psi = start;
    const auto gates = reduction_circuit(S, rep.constants, oc, false);
    res.probability = 1;
    for (const CliffordGate& g : gates) {
      res.probability *= apply_gate(psi, g);
      res.measurements += g.measurement() ? 1 : 0;
      res.single_qudit += g.single_qudit() ? 1 : 0;
      res.two_qudit += g.two_qudit() ? 1 : 0;
    }
    // Post-measurement state must be |a,b,c> (x) reduced state.
    const std::vector<std::pair<std::size_t, std::uint32_t>> fixed = {{0, oc[0].bits}, {1, oc[1].bits}, {2, oc[2].bits}};
    QuditState reduced = restrict_to(psi, {3, 4, 5}, fixed);
    double leaked = 0;
    for (std::size_t i = 0; i < psi.size(); ++i)
      if (psi.value(i, 0) != oc[0].bits || psi.value(i, 1) != oc[1].bits || psi.value(i, 2) != oc[2].bits)
        leaked += psi.amplitudes()[i] * psi.amplitudes()[i];
    res.leaked_norm = std::sqrt(leaked);
    if (res.leaked_norm > kNormTolerance || std::fabs(reduced.norm() - 1) > kNormTolerance)
      fail("post-measurement state does not factorize as |a,b,c> (x) psi");

    const double og = overlap(reduced, target_gamma);
    res.fidelity_gamma = std::fabs(og);
    if (rep.applied_m_gamma) {
      const auto mg = CliffordGate{CliffordGate::Kind::kMmul, rep.constants.gamma, 0, 0};
      apply_gate(reduced, mg);
      ++res.single_qudit;
    }
    const double of = overlap(reduced, target);
    res.fidelity_final = std::fabs(of);
    const QuditState& ref = rep.applied_m_gamma ? target : target_gamma;
    const double sign = (rep.applied_m_gamma ? of : og) < 0 ? -1.0 : 1.0;
    for (std::size_t i = 0; i < reduced.size(); ++i)
      res.max_amplitude_error =
          std::max(res.max_amplitude_error, std::fabs(reduced.amplitudes()[i] - sign * ref.amplitudes()[i]));

    const double expect_p = 1.0 / (static_cast<double>(r) * r * r);
    if (std::fabs(res.probability - expect_p) > kNormTolerance) fail("outcome probability differs from r^-3");
    if (res.fidelity_gamma < 1 - kFidelityTolerance) fail("corrected state is not |CCZ^gamma>_r");
    if (rep.applied_m_gamma && res.fidelity_final < 1 - kFidelityTolerance) fail("final state is not |CCZ>_r");
    rep.min_fidelity_gamma = std::min(rep.min_fidelity_gamma, res.fidelity_gamma);
    rep.min_fidelity_final = std::min(rep.min_fidelity_final, res.fidelity_final);
    rep.outcomes.push_back(res);
  }
  if (throw_on_violation && !rep.passed) throw ProtocolViolation(rep.diagnostics);
  return rep;
}

/// M_b X^a M_b^{-1} = X^{ab} and M_b Z^a M_b^{-1} = Z^{a/b} as dense matrix
/// identities over all a in GF(r) and nonzero b.
inline bool check_m_beta_conjugation(std::uint32_t r) {
  const Field F = register_field(r);
  const std::size_t d = r;
  using Mat = std::vector<double>;
  auto mul = [&](const Mat& x, const Mat& y) {
    Mat z(d * d, 0.0);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < d; ++k)
        if (x[i * d + k] != 0)
          for (std::size_t j = 0; j < d; ++j) z[i * d + j] += x[i * d + k] * y[k * d + j];
    return z;
  };
  // Column v of each operator is its image of |v>.
  auto xop = [&](Gf a) {
    Mat m(d * d, 0.0);
    for (std::uint32_t v = 0; v < r; ++v) m[Field::add(Gf{v}, a).bits * d + v] = 1;
    return m;
  };
  auto zop = [&](Gf a) {
    Mat m(d * d, 0.0);
    for (std::uint32_t v = 0; v < r; ++v) m[v * d + v] = F.absolute_trace(F.mul(a, Gf{v})) ? -1 : 1;
    return m;
  };
  auto mop = [&](Gf b) {
    Mat m(d * d, 0.0);
    for (std::uint32_t v = 0; v < r; ++v) m[F.mul(b, Gf{v}).bits * d + v] = 1;
    return m;
  };
  for (Gf b : F.elements()) {
    if (b.bits == 0) continue;
    const Mat mb = mop(b), mbi = mop(F.inv(b));
    for (Gf a : F.elements()) {
      if (mul(mul(mb, xop(a)), mbi) != xop(F.mul(a, b))) return false;
      if (mul(mul(mb, zop(a)), mbi) != zop(F.div(a, b))) return false;
    }
  }
  return true;
}

struct ReductionStep {
  int from_log2 = 0;  // qudit dimension 2^from_log2
  int to_log2 = 0;
  bool gamma_invertible = true;  // a theta with gamma != 0 exists for r = 2^to_log2
};

struct GateTotals {
  int measurements = 0;
  int single_qudit = 0;
  int two_qudit = 0;
  friend bool operator==(const GateTotals&, const GateTotals&) = default;
};

inline constexpr GateTotals kReductionGates{3, 4, 3};
inline constexpr GateTotals kReductionBudget{9, 12, 9};

struct ReductionPlan {
  int n = 0;            // target |CCZ> on qudits of dimension 2^n
  int distill_log2 = 0;  // distill at dimension 2^distill_log2
  int reductions = 0;
  std::vector<ReductionStep> steps;
  GateTotals totals;
  bool within_budget = true;
  bool all_steps_invertible = true;
};

/// Even n >= 6: distill at 2^n directly. Odd n > 2 or n = 4: distill at
/// 2^{2n} and reduce once. n <= 2: distill at 2^8 and reduce to 2^4, 2^2, 2^1
/// as needed.
inline ReductionPlan plan_reduction(int n) {
  if (n < 1) throw std::domain_error("plan_reduction needs n >= 1");
  ReductionPlan p;
  p.n = n;
  if (n % 2 == 0 && n >= 6) {
    p.distill_log2 = n;
  } else if (n > 2 || n == 4) {
    p.distill_log2 = 2 * n;
  } else {
    p.distill_log2 = 8;
  }
  for (int cur = p.distill_log2; cur > n; cur /= 2) {
    ensure(cur % 2 == 0, "reduction from an odd-degree field");
    p.steps.push_back({cur, cur / 2, cur / 2 >= 2});
  }
  p.reductions = static_cast<int>(p.steps.size());
  p.totals = {p.reductions * kReductionGates.measurements, p.reductions * kReductionGates.single_qudit,
              p.reductions * kReductionGates.two_qudit};
  p.within_budget = p.totals.measurements <= kReductionBudget.measurements &&
                    p.totals.single_qudit <= kReductionBudget.single_qudit &&
                    p.totals.two_qudit <= kReductionBudget.two_qudit;
  p.all_steps_invertible = std::all_of(p.steps.begin(), p.steps.end(), [](const ReductionStep& s) { return s.gamma_invertible; });
  ensure(p.within_budget, "reduction plan exceeds the gate budget");
  return p;
}

}  // namespace triortho

#endif  // TRIORTHO_STATE_REDUCTION_HPP
