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

#ifndef TRIORTHO_POLYNOMIAL_HPP
#define TRIORTHO_POLYNOMIAL_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "triortho/gf2m.hpp"

namespace triortho {

/// Dense univariate polynomial over GF(2^m), coefficients in ascending
/// degree. Trailing zeros are always stripped, so the zero polynomial has no
/// coefficients and degree -1.
class Polynomial {
 public:
  explicit Polynomial(Field f) : field_(std::move(f)) {}
  Polynomial(Field f, std::vector<Gf> coeffs) : field_(std::move(f)), c_(std::move(coeffs)) { trim(); }

  static Polynomial constant(const Field& f, Gf c) { return Polynomial(f, {c}); }
  static Polynomial x(const Field& f) { return Polynomial(f, {f.zero(), f.one()}); }
  static Polynomial monomial(const Field& f, std::size_t i, Gf c) {
    std::vector<Gf> v(i + 1, f.zero());
    v[i] = c;
    return Polynomial(f, std::move(v));
  }
  /// x + alpha.
  static Polynomial linear(const Field& f, Gf alpha) { return Polynomial(f, {alpha, f.one()}); }
  /// prod (x + alpha) over the given roots.
  static Polynomial from_roots(const Field& f, std::span<const Gf> roots) {
    Polynomial p = constant(f, f.one());
    for (Gf a : roots) p = p.mul_linear(a);
    return p;
  }

  const Field& field() const { return field_; }
  const std::vector<Gf>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Gf coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }
  Gf leading() const { return c_.empty() ? field_.zero() : c_.back(); }

  Gf eval(Gf a) const {
    Gf acc = field_.zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = Field::add(field_.mul(acc, a), *it);
    return acc;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Gf> v(std::max(a.c_.size(), b.c_.size()), a.field_.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] = Field::add(v[i], b.c_[i]);
    return Polynomial(a.field_, std::move(v));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    const Field& f = a.field_;
    if (a.is_zero() || b.is_zero()) return Polynomial(f);
    std::vector<Gf> v(a.c_.size() + b.c_.size() - 1, f.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].bits == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        v[i + j] = Field::add(v[i + j], f.mul(a.c_[i], b.c_[j]));
    }
    return Polynomial(f, std::move(v));
  }

  Polynomial scaled(Gf s) const {
    std::vector<Gf> v(c_);
    for (Gf& e : v) e = field_.mul(e, s);
    return Polynomial(field_, std::move(v));
  }

  /// this * (x + alpha).
  Polynomial mul_linear(Gf alpha) const {
    if (is_zero()) return *this;
    std::vector<Gf> v(c_.size() + 1, field_.zero());
    for (std::size_t i = 0; i < c_.size(); ++i) {
      v[i + 1] = Field::add(v[i + 1], c_[i]);
      v[i] = Field::add(v[i], field_.mul(c_[i], alpha));
    }
    return Polynomial(field_, std::move(v));
  }

  Polynomial pow(unsigned e) const {
    Polynomial result = constant(field_, field_.one());
    Polynomial base = *this;
    while (e != 0) {
      if (e & 1U) result = result * base;
      e >>= 1U;
      if (e != 0) base = base * base;
    }
    return result;
  }

  /// Quotient and remainder; throws on division by zero.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    const Field& f = field_;
    std::vector<Gf> r(c_);
    if (degree() < d.degree()) return {Polynomial(f), *this};
    std::vector<Gf> q(static_cast<std::size_t>(degree() - d.degree() + 1), f.zero());
    const Gf lead_inv = f.inv(d.leading());
    const std::size_t dd = d.c_.size() - 1;
    for (std::size_t i = r.size(); i-- > dd;) {
      if (r[i].bits == 0) continue;
      const Gf c = f.mul(r[i], lead_inv);
      q[i - dd] = c;
      for (std::size_t j = 0; j <= dd; ++j) r[i - dd + j] = Field::add(r[i - dd + j], f.mul(c, d.c_[j]));
    }
    return {Polynomial(f, std::move(q)), Polynomial(f, std::move(r))};
  }

  /// Synthetic division by (x + alpha); returns quotient and remainder value.
  std::pair<Polynomial, Gf> deflate(Gf alpha) const {
    if (is_zero()) return {*this, field_.zero()};
    std::vector<Gf> q(c_.size() - 1, field_.zero());
    Gf carry = field_.zero();
    for (std::size_t i = c_.size(); i-- > 0;) {
      const Gf cur = Field::add(c_[i], field_.mul(carry, alpha));
      if (i > 0) q[i - 1] = cur;
      carry = cur;
    }
    return {Polynomial(field_, std::move(q)), carry};
  }

  /// Multiplicity of (x + alpha) as a factor; the polynomial must be nonzero.
  int root_multiplicity(Gf alpha) const {
    if (is_zero()) throw std::domain_error("multiplicity in the zero polynomial");
    int mult = 0;
    Polynomial cur = *this;
    for (;;) {
      auto [q, rem] = cur.deflate(alpha);
      if (rem.bits != 0) return mult;
      ++mult;
      cur = std::move(q);
    }
  }

  /// Formal derivative (characteristic 2: even-degree terms vanish).
  Polynomial derivative() const {
    if (c_.size() <= 1) return Polynomial(field_);
    std::vector<Gf> v(c_.size() - 1, field_.zero());
    for (std::size_t i = 1; i < c_.size(); i += 2) v[i - 1] = c_[i];
    return Polynomial(field_, std::move(v));
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return scaled(field_.inv(leading()));
  }

  /// Coefficients of p(t + alpha) in t.
  Polynomial taylor_shift(Gf alpha) const {
    std::vector<Gf> v(c_);
    const std::size_t n = v.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
      for (std::size_t j = n - 1; j > i; --j) v[j - 1] = Field::add(v[j - 1], field_.mul(alpha, v[j]));
    return Polynomial(field_, std::move(v));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back().bits == 0) c_.pop_back();
  }

  Field field_;
  std::vector<Gf> c_;
};

/// Monic gcd (zero if both inputs are zero).
inline Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

}  // namespace triortho

#endif  // TRIORTHO_POLYNOMIAL_HPP
