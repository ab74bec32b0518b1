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

// CSS codes from triorthogonal codes. With the generator in standard form
//
//     ( I_K  H1 )
//     ( 0    H0 )
//
// the first K coordinates are punctured, X-stabilizers span H0 and
// Z-stabilizers span the dual of rowspace(H0, H1).

#ifndef TRIORTHO_CSS_BUILDER_HPP
#define TRIORTHO_CSS_BUILDER_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "triortho/classical_codes.hpp"
#include "triortho/errors.hpp"
#include "triortho/matrix.hpp"
#include "triortho/random.hpp"

namespace triortho {

struct StandardForm {
  Field field;
  std::size_t k_log = 0;
  std::vector<std::size_t> column_perm;  // position i holds original column column_perm[i]
  Matrix reduced;                        // permuted generator, ( I H1 ; 0 H0 )
  Matrix h1;                             // k_log x (n - k_log)
  Matrix h0;                             // (k - k_log) x (n - k_log)
};

/// Row reduce, take the first k_log pivot columns as logical coordinates and
/// move them to the front; the remaining columns keep their relative order.
inline StandardForm standard_form(const LinearCode& c, std::size_t k_log) {
  const Field& F = c.field();
  if (k_log < 1 || k_log > c.k())
    throw InvalidK("K=" + std::to_string(k_log) + " must lie in [1, k=" + std::to_string(c.k()) + "]");
  const RowEchelon e = rref(F, c.generator());
  ensure(e.rank() == c.k(), "generator lost rank in reduction");
  const std::vector<Gf> ones(c.n(), F.one());
  ensure(in_rowspace(F, e, ones), "all-ones word is not in the code");

  StandardForm s{F, k_log, {}, {}, {}, {}};
  std::vector<bool> logical(c.n(), false);
  for (std::size_t i = 0; i < k_log; ++i) {
    s.column_perm.push_back(e.pivots[i]);
    logical[e.pivots[i]] = true;
  }
  for (std::size_t j = 0; j < c.n(); ++j)
    if (!logical[j]) s.column_perm.push_back(j);
  s.reduced = e.reduced.permute_columns(s.column_perm);

  std::vector<std::size_t> rest(c.n() - k_log);
  std::iota(rest.begin(), rest.end(), k_log);
  s.h1 = s.reduced.submatrix(0, k_log, rest);
  s.h0 = s.reduced.submatrix(k_log, c.k() - k_log, rest);
  for (std::size_t i = 0; i < c.k(); ++i)
    for (std::size_t j = 0; j < k_log; ++j)
      ensure(s.reduced(i, j) == (i == j ? F.one() : F.zero()), "standard form lacks the identity block");
  ensure(rows_orthogonal(F, s.h0, s.h1), "rowspace(H0) is not orthogonal to rowspace(H1)");
  return s;
}

struct CssCode {
  StandardForm form;
  std::size_t n_phys = 0;
  std::size_t k_log = 0;
  Matrix x_stabilizers;  // rows span H0
  Matrix z_stabilizers;  // rows span rowspace(H0, H1)^perp
  // Lower bounds from the divisor data; absent when built without it.
  bool bounds_known = false;
  long long d_x_lower = 0;  // n - deg G - K
  long long d_z_lower = 0;  // deg G - K - (2g - 2)
  long long d_lower = 0;
  bool vacuous = false;  // some bound is <= 0
};

/// Stabilizer matrices only (no distance bounds).
inline CssCode build_css(const LinearCode& c, std::size_t k_log) {
  CssCode q{standard_form(c, k_log), c.n() - k_log, k_log, {}, {}, false, 0, 0, 0, false};
  const Field& F = q.form.field;
  q.x_stabilizers = q.form.h0;
  const Matrix hh = vstack(q.form.h0, q.form.h1);
  q.z_stabilizers = kernel(F, hh);
  if (!q.x_stabilizers.empty()) ensure(rows_orthogonal(F, q.x_stabilizers, q.z_stabilizers), "X and Z stabilizers do not commute");
  const std::size_t rx = q.x_stabilizers.empty() ? 0 : rank(F, q.x_stabilizers);
  const std::size_t rz = q.z_stabilizers.empty() ? 0 : rank(F, q.z_stabilizers);
  ensure(rx + rz == q.n_phys - k_log, "stabilizer ranks do not leave K logical qudits");
  return q;
}

/// As above plus d_X >= n - deg G - K and d_Z >= deg G - K - (2g - 2).
inline CssCode build_css(const LinearCode& c, std::size_t k_log, long long deg_g, long long genus) {
  CssCode q = build_css(c, k_log);
  const auto n = static_cast<long long>(c.n());
  const auto k = static_cast<long long>(k_log);
  q.bounds_known = true;
  q.d_x_lower = n - deg_g - k;
  q.d_z_lower = deg_g - k - (2 * genus - 2);
  q.d_lower = std::min(q.d_x_lower, q.d_z_lower);
  q.vacuous = q.d_x_lower <= 0 || q.d_z_lower <= 0;
  return q;
}

struct HeuristicDistance {
  long long x_upper = 0;  // lightest element of H \ H0 found
  long long z_upper = 0;  // lightest element of H0^perp \ H^perp found
  long long upper = 0;
  std::vector<Gf> x_witness;
  std::vector<Gf> z_witness;
};

namespace detail {

inline std::vector<std::size_t> random_permutation(std::size_t n, Rng& rng) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[rng.below(i)]);
  return p;
}

inline std::vector<Gf> unpermute(std::span<const Gf> v, const std::vector<std::size_t>& perm) {
  std::vector<Gf> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[perm[i]] = v[i];
  return out;
}

}  // namespace detail

/// Information-set sampling: each trial permutes the physical columns, takes
/// the systematic rows of rowspace(H0, H1) (X side) and the systematic kernel
/// vectors of H0 (Z side), and keeps the lightest ones that are not
/// stabilizers. Per-trial seeds are derived from `seed`, so the result is
/// deterministic. The result is an upper bound on each side's distance.
inline HeuristicDistance heuristic_distance_upper(const CssCode& code, std::size_t trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  const Field& F = code.form.field;
  const std::size_t n = code.n_phys;
  const Matrix hh = vstack(code.form.h0, code.form.h1);
  const bool has_h0 = !code.form.h0.empty();
  const RowEchelon h0e = has_h0 ? rref(F, code.form.h0) : RowEchelon{Matrix(0, n), {}};

  HeuristicDistance out;
  out.x_upper = static_cast<long long>(n) + 1;
  out.z_upper = static_cast<long long>(n) + 1;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, t));
    const auto perm = detail::random_permutation(n, rng);

    const RowEchelon xe = rref(F, hh.permute_columns(perm));
    for (std::size_t i = 0; i < xe.rank(); ++i) {
      const auto w = static_cast<long long>(weight(xe.reduced.row(i)));
      if (w >= out.x_upper) continue;
      auto v = detail::unpermute(xe.reduced.row(i), perm);
      if (has_h0 && in_rowspace(F, h0e, v)) continue;
      out.x_upper = w;
      out.x_witness = std::move(v);
    }

    const Matrix zk = has_h0 ? kernel(F, code.form.h0.permute_columns(perm)) : Matrix();
    const std::size_t zrows = has_h0 ? zk.rows() : n;
    for (std::size_t i = 0; i < zrows; ++i) {
      std::vector<Gf> vp(n, F.zero());
      if (has_h0)
        std::copy(zk.row(i).begin(), zk.row(i).end(), vp.begin());
      else
        vp[i] = F.one();
      const auto w = static_cast<long long>(weight(vp));
      if (w >= out.z_upper) continue;
      auto v = detail::unpermute(vp, perm);
      bool in_dual = true;  // orthogonal to every H1 row means Z-stabilizer
      for (std::size_t r = 0; r < code.form.h1.rows() && in_dual; ++r)
        in_dual = dot(F, code.form.h1.row(r), v).bits == 0;
      if (in_dual) continue;
      out.z_upper = w;
      out.z_witness = std::move(v);
    }
  }
  out.upper = std::min(out.x_upper, out.z_upper);
  if (code.bounds_known && !code.vacuous) {
    ensure(out.x_upper >= code.d_x_lower, "heuristic X weight below the proven lower bound");
    ensure(out.z_upper >= code.d_z_lower, "heuristic Z weight below the proven lower bound");
  }
  return out;
}

struct PhaseCheckReport {
  bool passed = true;
  std::size_t samples = 0;
  std::optional<std::size_t> failing_sample;
};

/// For sampled logical vectors u, v, w in GF(q)^K and random stabilizer
/// offsets from rowspace(H0), the physical words a = u H1 + s (likewise b, c)
/// satisfy sum_i a_i b_i c_i = sum_l u_l v_l w_l, so the transversal CCZ phase
/// (-1)^Tr(...) on the physical qudits equals the logical one. Each sample
/// also redraws the offsets and checks that the phase is unchanged.
inline PhaseCheckReport transversal_ccz_phase_check(const StandardForm& form, std::size_t samples, std::uint64_t seed) {
  const Field& F = form.field;
  const std::size_t k = form.k_log;
  const std::size_t n = form.h1.cols();
  Rng rng(seed);
  auto rand_elem = [&] { return Gf{static_cast<std::uint32_t>(rng.below(F.order()))}; };
  auto encode = [&](const std::vector<Gf>& u) {
    std::vector<Gf> a(n, F.zero());
    for (std::size_t l = 0; l < k; ++l) axpy(F, u[l], form.h1.row(l), a);
    for (std::size_t s = 0; s < form.h0.rows(); ++s) axpy(F, rand_elem(), form.h0.row(s), a);
    return a;
  };
  auto triple_sum = [&](const std::vector<Gf>& a, const std::vector<Gf>& b, const std::vector<Gf>& c) {
    Gf acc = F.zero();
    for (std::size_t i = 0; i < a.size(); ++i) acc = Field::add(acc, F.mul(F.mul(a[i], b[i]), c[i]));
    return acc;
  };

  PhaseCheckReport rep;
  for (std::size_t s = 0; s < samples; ++s) {
    std::vector<Gf> u(k), v(k), w(k);
    for (std::size_t l = 0; l < k; ++l) {
      u[l] = rand_elem();
      v[l] = rand_elem();
      w[l] = rand_elem();
    }
    const Gf logical = triple_sum(u, v, w);
    const Gf phys1 = triple_sum(encode(u), encode(v), encode(w));
    const Gf phys2 = triple_sum(encode(u), encode(v), encode(w));
    ++rep.samples;
    if (phys1 != logical || phys2 != logical || F.absolute_trace(phys1) != F.absolute_trace(logical)) {
      rep.passed = false;
      rep.failing_sample = s;
      break;
    }
  }
  return rep;
}

}  // namespace triortho

#endif  // TRIORTHO_CSS_BUILDER_HPP
