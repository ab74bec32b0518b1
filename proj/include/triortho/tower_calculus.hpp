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

// Parameter calculus for the lifted code families C_j over GF(r^2) and the
// derived CSS codes Q_j: genus of the tower level, classical [n, k, d],
// quantum [[N, K, D]], the overhead exponent gamma = ln(N/K) / ln(D), and the
// asymptotic rate/distance bounds.
//
// All integer quantities are exact (cpp_int); limits are exact rationals.

#ifndef TRIORTHO_TOWER_CALCULUS_HPP
#define TRIORTHO_TOWER_CALCULUS_HPP

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "triortho/errors.hpp"

namespace triortho {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using HighFloat = boost::multiprecision::cpp_bin_float_50;

struct TowerLevel {
  std::uint64_t r = 8;
  int j = 0;
};

inline void validate_level(const TowerLevel& t) {
  if (t.r < 8 || !std::has_single_bit(t.r))
    throw std::domain_error("tower level needs r = 2^m with m >= 3, got r=" + std::to_string(t.r));
  if (t.j < 0) throw std::domain_error("tower level needs j >= 0");
}

inline BigInt big_pow(std::uint64_t base, unsigned e) { return boost::multiprecision::pow(BigInt(base), e); }

/// floor((r - 2) / 3), the coefficient of G_0 on the ramification locus.
inline BigInt g0_coefficient(std::uint64_t r) { return BigInt((r - 2) / 3); }

/// g_j = (r^{(j+1)/2} - 1)^2 for odd j, (r^{j/2} - 1)(r^{(j+2)/2} - 1) for even j.
inline BigInt genus(const TowerLevel& t) {
  validate_level(t);
  const auto j = static_cast<unsigned>(t.j);
  if (j % 2 == 1) {
    const BigInt a = big_pow(t.r, (j + 1) / 2) - 1;
    return a * a;
  }
  return (big_pow(t.r, j / 2) - 1) * (big_pow(t.r, (j + 2) / 2) - 1);
}

/// deg G_j = r^j (r + 1) floor((r - 2) / 3).
inline BigInt degree_g(const TowerLevel& t) {
  validate_level(t);
  return big_pow(t.r, static_cast<unsigned>(t.j)) * (t.r + 1) * g0_coefficient(t.r);
}

/// n_j = r^{j+1} (r - 1).
inline BigInt code_length(const TowerLevel& t) {
  validate_level(t);
  return big_pow(t.r, static_cast<unsigned>(t.j) + 1) * (t.r - 1);
}

struct ClassicalParams {
  BigInt n;
  BigInt k;
  BigInt d_lower;       // n - deg G_j
  BigInt d_two_thirds;  // ceil((2/3) r^j (r^2 - r + 2))
  BigInt deg_g;
  BigInt genus;
};

inline ClassicalParams classical_params(const TowerLevel& t) {
  ClassicalParams p;
  p.genus = genus(t);
  p.deg_g = degree_g(t);
  p.n = code_length(t);
  if (!(p.deg_g > 2 * p.genus - 2))
    throw FormulaRegimeError("deg G_j > 2 g_j - 2 fails at r=" + std::to_string(t.r) + ", j=" + std::to_string(t.j));
  p.k = p.deg_g + 1 - p.genus;
  p.d_lower = p.n - p.deg_g;
  const BigInt num = 2 * big_pow(t.r, static_cast<unsigned>(t.j)) * (BigInt(t.r) * t.r - t.r + 2);
  p.d_two_thirds = (num + 2) / 3;
  ensure(p.k >= 1 && p.k <= p.n, "classical dimension out of range");
  ensure(p.d_lower <= p.n - p.k + 1, "Singleton bound violated");
  return p;
}

/// deg G_j + 2(1 - g_j): the Z-side distance bound is this minus K.
inline BigInt quantum_budget(const TowerLevel& t) { return degree_g(t) + 2 * (1 - genus(t)); }

/// v(r, j) = 4 r^{(j+1)/2} (odd j) or 2 r^{j/2} (1 + r) (even j).
inline BigInt v_term(const TowerLevel& t) {
  validate_level(t);
  const auto j = static_cast<unsigned>(t.j);
  if (j % 2 == 1) return 4 * big_pow(t.r, (j + 1) / 2);
  return 2 * big_pow(t.r, j / 2) * (1 + t.r);
}

struct QuantumParams {
  TowerLevel level;
  BigInt n_phys;
  BigInt k_log;
  BigInt d_lower;    // min of the two sides (= d_z_lower)
  BigInt d_x_lower;  // n_j - deg G_j - K
  BigInt d_z_lower;  // deg G_j - K - (2 g_j - 2)
  double gamma_max = 0;
  double rate = 0;
  Rational rate_exact;
  Rational x1;  // K = x1 r^j ((r+1)f - 2r) + x2 v(r, j), taking x1 = x2 = K / budget
  Rational x2;
};

inline HighFloat gamma_high(const BigInt& n_phys, const BigInt& k_log, const BigInt& d) {
  using boost::multiprecision::log;
  return log(HighFloat(n_phys) / HighFloat(k_log)) / log(HighFloat(d));
}

inline QuantumParams quantum_params(const TowerLevel& t, const BigInt& k_log) {
  const ClassicalParams c = classical_params(t);
  const BigInt budget = quantum_budget(t);
  if (k_log < 1) throw InvalidK("K must be >= 1");
  if (k_log > c.k - 1)
    throw InvalidK("K=" + k_log.str() + " violates K <= k_j - 1 = " + BigInt(c.k - 1).str());
  if (k_log > budget - 1)
    throw InvalidK("K=" + k_log.str() + " violates K <= deg G_j + 2(1 - g_j) - 1 = " + BigInt(budget - 1).str() +
                   " (positive distance)");
  QuantumParams q;
  q.level = t;
  q.k_log = k_log;
  q.n_phys = c.n - k_log;
  q.d_z_lower = budget - k_log;
  q.d_x_lower = c.n - c.deg_g - k_log;
  ensure(q.d_z_lower < q.d_x_lower, "Z-side bound is not the minimum");
  q.d_lower = q.d_z_lower;
  q.rate_exact = Rational(k_log, q.n_phys);
  q.rate = static_cast<double>(q.rate_exact);
  q.gamma_max = q.d_lower >= 2 ? static_cast<double>(gamma_high(q.n_phys, k_log, q.d_lower))
                               : std::numeric_limits<double>::infinity();
  q.x1 = Rational(k_log, budget);
  q.x2 = q.x1;
  ensure(q.x1 * big_pow(t.r, static_cast<unsigned>(t.j)) * ((t.r + 1) * g0_coefficient(t.r) - 2 * t.r) +
                 q.x2 * v_term(t) ==
             Rational(k_log),
         "x1/x2 decomposition does not reproduce K");
  return q;
}

namespace detail {

inline constexpr std::int64_t kExhaustiveLimit = 4'000'000;
inline constexpr std::int64_t kLocalWindow = 1'000'000;

inline std::int64_t to_i64(const BigInt& v) {
  if (v > BigInt(std::numeric_limits<std::int64_t>::max() / 4))
    throw std::domain_error("tower level too large for K optimization");
  return v.convert_to<std::int64_t>();
}

inline long double gamma_ld(std::int64_t n, std::int64_t budget, std::int64_t k) {
  return std::log(static_cast<long double>(n - k) / static_cast<long double>(k)) /
         std::log(static_cast<long double>(budget - k));
}

}  // namespace detail

/// Valid K for the optimization: 1 <= K <= min(k_j - 1, budget - 2), i.e. D >= 2.
inline std::pair<BigInt, BigInt> optimizable_k_range(const TowerLevel& t) {
  const ClassicalParams c = classical_params(t);
  return {BigInt(1), std::min(BigInt(c.k - 1), BigInt(quantum_budget(t) - 2))};
}

/// argmin_K gamma_max, ties to the larger K. Ranges up to 4e6 are scanned
/// exhaustively in long double; larger ones are bracketed by integer ternary
/// search and then scanned exhaustively within +-1e6 of the bracket. Values
/// within 1e-14 of the best are re-ranked with 50-digit logarithms.
inline std::optional<QuantumParams> optimize_k(const TowerLevel& t) {
  const auto [lo_big, hi_big] = optimizable_k_range(t);
  if (hi_big < lo_big) return std::nullopt;
  const std::int64_t n = detail::to_i64(code_length(t));
  const std::int64_t budget = detail::to_i64(quantum_budget(t));
  std::int64_t lo = detail::to_i64(lo_big), hi = detail::to_i64(hi_big);
  auto g = [&](std::int64_t k) { return detail::gamma_ld(n, budget, k); };

  if (hi - lo + 1 > detail::kExhaustiveLimit) {
    std::int64_t a = lo, b = hi;
    while (b - a > 3) {
      const std::int64_t m1 = a + (b - a) / 3, m2 = b - (b - a) / 3;
      if (g(m1) <= g(m2))
        b = m2;
      else
        a = m1;
    }
    std::int64_t c = a;
    for (std::int64_t k = a + 1; k <= b; ++k)
      if (g(k) <= g(c)) c = k;
    lo = std::max(lo, c - detail::kLocalWindow);
    hi = std::min(hi, c + detail::kLocalWindow);
  }

  long double best = std::numeric_limits<long double>::infinity();
  for (std::int64_t k = lo; k <= hi; ++k) best = std::min(best, g(k));
  const long double tol = 1e-14L * std::max(1.0L, best);
  std::optional<std::int64_t> arg;
  HighFloat arg_gamma;
  const BigInt n_big(n), budget_big(budget);
  for (std::int64_t k = lo; k <= hi; ++k) {
    if (g(k) > best + tol) continue;
    const BigInt kb(k);
    const HighFloat gh = gamma_high(n_big - kb, kb, budget_big - kb);
    if (!arg || gh <= arg_gamma) {
      arg = k;
      arg_gamma = gh;
    }
  }
  ensure(arg.has_value(), "empty K optimization window");
  return quantum_params(t, BigInt(*arg));
}

struct UnimodalityReport {
  bool unimodal = true;
  bool exhaustive = true;  // false: checked on an evenly strided grid
  std::int64_t points_checked = 0;
};

/// gamma_max(K) non-increasing then non-decreasing over the valid range.
inline UnimodalityReport check_gamma_unimodal(const TowerLevel& t) {
  UnimodalityReport rep;
  const auto [lo_big, hi_big] = optimizable_k_range(t);
  if (hi_big < lo_big) return rep;
  const std::int64_t n = detail::to_i64(code_length(t));
  const std::int64_t budget = detail::to_i64(quantum_budget(t));
  const std::int64_t lo = detail::to_i64(lo_big), hi = detail::to_i64(hi_big);
  const std::int64_t stride = std::max<std::int64_t>(1, (hi - lo + 1) / detail::kExhaustiveLimit);
  rep.exhaustive = stride == 1;
  bool rising = false;
  long double prev = detail::gamma_ld(n, budget, lo);
  for (std::int64_t k = lo + stride; k <= hi; k += stride) {
    const long double cur = detail::gamma_ld(n, budget, k);
    ++rep.points_checked;
    if (cur > prev) rising = true;
    if (rising && cur < prev) {
      rep.unimodal = false;
      break;
    }
    prev = cur;
  }
  return rep;
}

/// Exact classical rate k_j / n_j.
inline Rational classical_rate(const TowerLevel& t) {
  const ClassicalParams c = classical_params(t);
  return Rational(c.k, c.n);
}

/// q-ary entropy H_q(x) for 0 < x < 1.
inline double qary_entropy(double x, double q) {
  const double lq = std::log(q);
  return x * std::log(q - 1) / lq - x * std::log(x) / lq - (1 - x) * std::log1p(-x) / lq;
}

struct TvzReport {
  std::uint64_t r = 0;
  // Closed forms as printed for the family limits.
  Rational published_dist_limit;   // 2/3 + 4/(3r(r-1))
  Rational published_rate_limit;   // 1/3 - (2r+7)/(3r(r-1))
  Rational published_rate_intermediate;  // ((r+1)f - 1) / (r(r-1))
  Rational published_sum;
  Rational claimed_bound;      // 1 - (2r+3)/(3r(r-1))
  Rational tvz_bound;          // 1 - 1/(r-1)
  // Exact limits of the family [n_j, k_j, n_j - deg G_j] as j -> infinity.
  Rational family_rate_limit;  // ((r+1)f - r) / (r(r-1))
  Rational family_dist_limit;  // (r(r-1) - (r+1)f) / (r(r-1))
  Rational family_sum;
  // Comparisons.
  bool published_chain_holds = false;          // published_sum >= claimed_bound > tvz_bound
  bool family_meets_claimed_bound = false;  // family_sum >= claimed_bound
  bool family_meets_tvz = false;            // family_sum >= tvz_bound
  bool family_beats_tvz_strictly = false;
  Rational margin_family_vs_claimed;  // family_sum - claimed_bound
  Rational margin_claimed_vs_tvz;     // claimed_bound - tvz_bound
  Rational margin_family_vs_tvz;      // family_sum - tvz_bound
  // Gilbert-Varshamov rate 1 - H_q(delta) at delta = family distance limit.
  double gv_rate_at_family_dist = 0;
  bool family_beats_gv = false;
};

inline TvzReport tvz_check(std::uint64_t r) {
  validate_level({r, 0});
  TvzReport t;
  t.r = r;
  const BigInt rr(r);
  const BigInt f = g0_coefficient(r);
  const BigInt rr1 = rr * (rr - 1);
  t.published_dist_limit = Rational(2, 3) + Rational(4, 3 * rr1);
  t.published_rate_limit = Rational(1, 3) - Rational(2 * rr + 7, 3 * rr1);
  t.published_rate_intermediate = Rational((rr + 1) * f - 1, rr1);
  t.published_sum = t.published_dist_limit + t.published_rate_limit;
  t.claimed_bound = 1 - Rational(2 * rr + 3, 3 * rr1);
  t.tvz_bound = 1 - Rational(1, rr - 1);
  t.family_rate_limit = Rational((rr + 1) * f - rr, rr1);
  t.family_dist_limit = Rational(rr1 - (rr + 1) * f, rr1);
  t.family_sum = t.family_rate_limit + t.family_dist_limit;
  t.published_chain_holds = t.published_sum >= t.claimed_bound && t.claimed_bound > t.tvz_bound;
  t.family_meets_claimed_bound = t.family_sum >= t.claimed_bound;
  t.family_meets_tvz = t.family_sum >= t.tvz_bound;
  t.family_beats_tvz_strictly = t.family_sum > t.tvz_bound;
  t.margin_family_vs_claimed = t.family_sum - t.claimed_bound;
  t.margin_claimed_vs_tvz = t.claimed_bound - t.tvz_bound;
  t.margin_family_vs_tvz = t.family_sum - t.tvz_bound;
  const double q = static_cast<double>(r) * static_cast<double>(r);
  t.gv_rate_at_family_dist = 1.0 - qary_entropy(static_cast<double>(t.family_dist_limit), q);
  t.family_beats_gv = static_cast<double>(t.family_rate_limit) > t.gv_rate_at_family_dist;
  return t;
}

struct Table3Row {
  std::uint64_t r = 0;
  int j = 0;
  std::optional<QuantumParams> best;  // empty when no valid K exists
  bool beyond_reference = false;
};

/// Best (argmin gamma) code per level. Levels outside r in {8,16,32},
/// j in 0..4 are flagged beyond_reference.
inline std::vector<Table3Row> table3(const std::vector<std::uint64_t>& rs, int j_first, int j_last) {
  std::vector<Table3Row> rows;
  for (std::uint64_t r : rs)
    for (int j = j_first; j <= j_last; ++j) {
      Table3Row row;
      row.r = r;
      row.j = j;
      row.best = optimize_k({r, j});
      row.beyond_reference = !((r == 8 || r == 16 || r == 32) && j >= 0 && j <= 4);
      rows.push_back(std::move(row));
    }
  return rows;
}

}  // namespace triortho

#endif  // TRIORTHO_TOWER_CALCULUS_HPP
