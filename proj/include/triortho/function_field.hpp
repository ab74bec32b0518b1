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

// Divisor calculus on the rational function field GF(q)(x).
//
// All places of GF(q)(x) used here are rational: P_alpha (the zero of
// x + alpha) for alpha in GF(q), and the place at infinity. With
// q = r^2, the evaluation set is Z = GF(r^2) \ GF(r) and the ramification
// locus is V = GF(r) + {infinity}.

#ifndef TRIORTHO_FUNCTION_FIELD_HPP
#define TRIORTHO_FUNCTION_FIELD_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "triortho/errors.hpp"
#include "triortho/gf2m.hpp"
#include "triortho/polynomial.hpp"

namespace triortho {

struct Place {
  bool at_infinity = false;
  Gf alpha{};  // meaningful only for finite places

  static Place finite(Gf a) { return Place{false, a}; }
  static Place infinity() { return Place{true, Gf{}}; }

  // Finite places by alpha, infinity last.
  friend constexpr auto operator<=>(const Place& a, const Place& b) {
    if (a.at_infinity != b.at_infinity) return a.at_infinity <=> b.at_infinity;
    if (a.at_infinity) return std::strong_ordering::equal;
    return a.alpha <=> b.alpha;
  }
  friend constexpr bool operator==(const Place& a, const Place& b) { return (a <=> b) == 0; }
};

/// Integer combination of places; zero coefficients are never stored.
class Divisor {
 public:
  Divisor() = default;

  static Divisor single(Place p, int c = 1) {
    Divisor d;
    d.add(p, c);
    return d;
  }

  void add(Place p, int c) {
    if (c == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(p, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  int coeff(const Place& p) const {
    auto it = coeffs_.find(p);
    return it == coeffs_.end() ? 0 : it->second;
  }

  long long degree() const {
    long long d = 0;
    for (const auto& [p, c] : coeffs_) d += c;
    return d;
  }

  bool is_effective() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& kv) { return kv.second >= 0; });
  }

  const std::map<Place, int>& terms() const { return coeffs_; }
  std::size_t support_size() const { return coeffs_.size(); }

  friend Divisor operator+(Divisor a, const Divisor& b) {
    for (const auto& [p, c] : b.coeffs_) a.add(p, c);
    return a;
  }
  friend Divisor operator-(Divisor a, const Divisor& b) {
    for (const auto& [p, c] : b.coeffs_) a.add(p, -c);
    return a;
  }
  friend Divisor operator*(int k, const Divisor& d) {
    Divisor out;
    for (const auto& [p, c] : d.coeffs_) out.add(p, k * c);
    return out;
  }
  friend bool operator==(const Divisor&, const Divisor&) = default;

 private:
  std::map<Place, int> coeffs_;
};

/// a <= b coefficientwise.
inline bool divisor_leq(const Divisor& a, const Divisor& b) { return (b - a).is_effective(); }

/// numerator / denominator in lowest terms with monic denominator.
class RationalFunction {
 public:
  explicit RationalFunction(Polynomial num)
      : num_(std::move(num)), den_(Polynomial::constant(num_.field(), num_.field().one())) {}

  RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    reduce();
  }

  const Field& field() const { return num_.field(); }
  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  /// f(alpha); throws PoleError at a pole.
  Gf eval(Gf alpha) const {
    const Gf d = den_.eval(alpha);
    if (d.bits == 0) throw PoleError("evaluation at a pole of a rational function");
    return field().div(num_.eval(alpha), d);
  }

  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  RationalFunction inverse() const {
    if (is_zero()) throw std::domain_error("inverse of the zero function");
    return RationalFunction(den_, num_);
  }
  RationalFunction pow(int e) const {
    if (e >= 0) return RationalFunction(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
    return inverse().pow(-e);
  }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  void reduce() {
    if (num_.is_zero()) {
      den_ = Polynomial::constant(field(), field().one());
      return;
    }
    const Polynomial g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_.divmod(g).first;
      den_ = den_.divmod(g).first;
    }
    const Gf lead_inv = field().inv(den_.leading());
    num_ = num_.scaled(lead_inv);
    den_ = den_.scaled(lead_inv);
  }

  Polynomial num_;
  Polynomial den_;
};

/// u * dx.
struct DifferentialForm {
  RationalFunction coefficient;
};

inline constexpr int kValuationInfinity = std::numeric_limits<int>::max();

/// v_P(f); kValuationInfinity for the zero function.
inline int valuation(const Place& p, const RationalFunction& f) {
  if (f.is_zero()) return kValuationInfinity;
  if (p.at_infinity) return f.denominator().degree() - f.numerator().degree();
  return f.numerator().root_multiplicity(p.alpha) - f.denominator().root_multiplicity(p.alpha);
}

namespace detail {

/// Root multiplicities of a polynomial that splits into linear factors over
/// its field; throws UnsupportedFactorization otherwise.
inline std::vector<std::pair<Gf, int>> split_roots(const Polynomial& p) {
  std::vector<std::pair<Gf, int>> out;
  Polynomial rest = p;
  for (Gf a : p.field().elements()) {
    if (rest.degree() <= 0) break;
    int mult = 0;
    for (;;) {
      auto [q, rem] = rest.deflate(a);
      if (rem.bits != 0) break;
      rest = std::move(q);
      ++mult;
    }
    if (mult > 0) out.emplace_back(a, mult);
  }
  if (rest.degree() > 0)
    throw UnsupportedFactorization("polynomial does not split into linear factors over GF(" +
                                   std::to_string(p.field().order()) + ")");
  return out;
}

}  // namespace detail

/// Principal divisor (f); degree 0.
inline Divisor divisor_of_function(const RationalFunction& f) {
  if (f.is_zero()) throw std::domain_error("divisor of the zero function");
  Divisor d;
  for (auto [a, m] : detail::split_roots(f.numerator())) d.add(Place::finite(a), m);
  for (auto [a, m] : detail::split_roots(f.denominator())) d.add(Place::finite(a), -m);
  d.add(Place::infinity(), f.denominator().degree() - f.numerator().degree());
  ensure(d.degree() == 0, "principal divisor has nonzero degree");
  return d;
}

/// (u dx) = (u) + (dx), with (dx) = -2 * infinity on the rational field.
inline Divisor divisor_of_differential(const DifferentialForm& w) {
  return divisor_of_function(w.coefficient) + Divisor::single(Place::infinity(), -2);
}

/// Leading Laurent coefficients [c_{-e}, ..., c_{-1}, c_0] of f at P_alpha in
/// the local parameter t = x + alpha, where e is the pole order. When f has
/// no pole there, the single entry f(alpha) is returned.
inline std::vector<Gf> laurent_head(const RationalFunction& f, Gf alpha) {
  const Field& F = f.field();
  const int e = f.denominator().root_multiplicity(alpha);
  if (e == 0) return {f.eval(alpha)};
  // f = t^{-e} * N(t) / D'(t) with D'(0) != 0; expand N/D' to order e.
  Polynomial dshift = f.denominator().taylor_shift(alpha);
  std::vector<Gf> dcoef(dshift.coeffs().begin() + e, dshift.coeffs().end());
  const Polynomial nshift = f.numerator().taylor_shift(alpha);
  std::vector<Gf> series(static_cast<std::size_t>(e) + 1, F.zero());
  const Gf d0_inv = F.inv(dcoef.at(0));
  for (std::size_t k = 0; k < series.size(); ++k) {
    Gf acc = nshift.coeff(k);
    for (std::size_t i = 1; i <= k && i < dcoef.size(); ++i) acc = Field::add(acc, F.mul(dcoef[i], series[k - i]));
    series[k] = F.mul(acc, d0_inv);
  }
  return series;
}

/// Residue of u*dx at P_alpha (coefficient of t^{-1}); zero when not a pole.
inline Gf residue(const DifferentialForm& w, Gf alpha) {
  const auto head = laurent_head(w.coefficient, alpha);
  if (head.size() < 2) return w.coefficient.field().zero();
  return head[head.size() - 2];
}

/// Basis {x^i / h : 0 <= i <= deg G} of L(G), with
/// h = prod_{finite alpha} (x + alpha)^{c_alpha}. Every basis element is
/// checked against (f) + G >= 0 at the possible pole locations.
inline std::vector<RationalFunction> riemann_roch_basis(const Field& F, const Divisor& g) {
  const long long deg = g.degree();
  if (deg < 0) return {};
  Polynomial hpos = Polynomial::constant(F, F.one());
  Polynomial hneg = Polynomial::constant(F, F.one());
  for (const auto& [p, c] : g.terms()) {
    if (p.at_infinity) continue;
    if (c > 0) hpos = hpos * Polynomial::linear(F, p.alpha).pow(static_cast<unsigned>(c));
    if (c < 0) hneg = hneg * Polynomial::linear(F, p.alpha).pow(static_cast<unsigned>(-c));
  }
  std::vector<RationalFunction> basis;
  basis.reserve(static_cast<std::size_t>(deg) + 1);
  for (long long i = 0; i <= deg; ++i) {
    RationalFunction f(Polynomial::monomial(F, static_cast<std::size_t>(i), F.one()) * hneg, hpos);
    // Finite poles lie among roots of hpos, i.e. in supp(G).
    for (const auto& [p, c] : g.terms()) ensure(valuation(p, f) >= -c, "Riemann-Roch basis element violates (f) + G >= 0");
    ensure(valuation(Place::infinity(), f) >= -g.coeff(Place::infinity()),
           "Riemann-Roch basis element violates (f) + G >= 0 at infinity");
    basis.push_back(std::move(f));
  }
  return basis;
}

/// G >= 0 and 3G <= D + (eta).
inline bool check_triorthogonality_condition(const Divisor& g, const Divisor& d, const Divisor& eta) {
  return g.is_effective() && divisor_leq(3 * g, d + eta);
}

// --- The base configuration over GF(r^2) ---------------------------------

/// Z = GF(r^2) \ GF(r) in the documented element order.
inline std::vector<Gf> evaluation_points(const QuadraticExtension& ext) {
  std::vector<Gf> z;
  z.reserve(static_cast<std::size_t>(ext.q() - ext.r()));
  for (Gf a : ext.big().elements())
    if (!ext.subfield().contains(a)) z.push_back(a);
  return z;
}

/// V = {P_alpha : alpha in GF(r)} + {infinity}.
inline std::vector<Place> ramification_locus(const QuadraticExtension& ext) {
  std::vector<Place> v;
  for (Gf a : ext.big().elements())
    if (ext.subfield().contains(a)) v.push_back(Place::finite(a));
  v.push_back(Place::infinity());
  return v;
}

inline Divisor base_divisor_d0(const QuadraticExtension& ext) {
  Divisor d;
  for (Gf a : evaluation_points(ext)) d.add(Place::finite(a), 1);
  return d;
}

inline int base_g0_coefficient(std::uint32_t r) { return (static_cast<int>(r) - 2) / 3; }

inline Divisor base_divisor_g0(const QuadraticExtension& ext) {
  Divisor d;
  for (const Place& p : ramification_locus(ext)) d.add(p, base_g0_coefficient(ext.r()));
  return d;
}

/// eta_0 = dt_0 / t_0 with t_0 = prod_{alpha in Z} (x + alpha), computed as
/// the logarithmic derivative t_0' / t_0 in lowest terms.
inline DifferentialForm eta0_differential(const QuadraticExtension& ext) {
  if (ext.r() < 8) throw std::domain_error("eta_0 is defined for r = 2^m with m >= 3");
  const Field& F = ext.big();
  const auto z = evaluation_points(ext);
  const Polynomial t0 = Polynomial::from_roots(F, z);
  return DifferentialForm{RationalFunction(t0.derivative(), t0)};
}

/// (eta_0) = -D_0 + (r - 2) * sum_{Q in V} Q.
inline Divisor expected_eta0_divisor(const QuadraticExtension& ext) {
  Divisor d = Divisor() - base_divisor_d0(ext);
  for (const Place& p : ramification_locus(ext)) d.add(p, static_cast<int>(ext.r()) - 2);
  return d;
}

}  // namespace triortho

#endif  // TRIORTHO_FUNCTION_FIELD_HPP
