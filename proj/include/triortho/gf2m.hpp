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

// Binary extension fields GF(2^m), subfield embeddings, traces, and the
// normal-basis view of GF(r^2) over GF(r).
//
// Elements are stored in polynomial basis: bit i of Gf::bits is the
// coefficient of x^i. Every field uses the Conway polynomial of its degree,
// so matrices and test vectors are reproducible bit-for-bit.

#ifndef TRIORTHO_GF2M_HPP
#define TRIORTHO_GF2M_HPP

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "triortho/errors.hpp"

namespace triortho {

/// Field element in polynomial-basis coordinates. Meaningful only together
/// with the Field that produced it.
struct Gf {
  std::uint32_t bits = 0;

  friend constexpr auto operator<=>(Gf, Gf) = default;
};

inline constexpr int kMaxFieldDegree = 16;

/// Conway polynomials over GF(2), indexed by degree (bit i = coeff of x^i).
inline constexpr std::array<std::uint32_t, kMaxFieldDegree + 1> kConwayModuli = {
    0x0,     0x3,     0x7,     0xB,    0x13,   0x25,   0x5B,   0x83,   0x11D,
    0x211,   0x46F,   0x805,   0x10EB, 0x201B, 0x40A9, 0x8035, 0x1002D};

namespace detail {

inline int gf2_degree(std::uint64_t p) {
  return p == 0 ? -1 : 63 - std::countl_zero(p);
}

inline std::uint64_t gf2_mod(std::uint64_t a, std::uint64_t m) {
  const int dm = gf2_degree(m);
  for (int da = gf2_degree(a); da >= dm; da = gf2_degree(a)) a ^= m << (da - dm);
  return a;
}

}  // namespace detail

/// Irreducibility over GF(2) by trial division with every polynomial of
/// degree 1..deg/2.
inline bool gf2_is_irreducible(std::uint64_t p) {
  const int d = detail::gf2_degree(p);
  if (d < 1) return false;
  for (int dd = 1; 2 * dd <= d; ++dd) {
    for (std::uint64_t t = std::uint64_t{1} << dd; t < (std::uint64_t{2} << dd); ++t) {
      if (detail::gf2_mod(p, t) == 0) return false;
    }
  }
  return true;
}

/// GF(2^m) with log/antilog tables. Immutable and cheap to copy (tables are
/// shared).
class Field {
 public:
  Field(int degree, std::uint32_t modulus) {
    if (degree < 1 || degree > kMaxFieldDegree)
      throw std::out_of_range("field degree must be in [1, 16], got " + std::to_string(degree));
    if (detail::gf2_degree(modulus) != degree)
      throw std::invalid_argument("modulus degree does not match field degree");
    if (!gf2_is_irreducible(modulus))
      throw std::invalid_argument("modulus is reducible over GF(2)");

    auto t = std::make_shared<Tables>();
    t->degree = degree;
    t->modulus = modulus;
    t->order = std::uint32_t{1} << degree;
    const std::uint32_t group = t->order - 1;
    t->exp.assign(2 * static_cast<std::size_t>(group), 0);
    t->log.assign(t->order, 0);
    // x generates the multiplicative group iff the modulus is primitive;
    // Conway polynomials are.
    std::uint64_t g = 1;
    for (std::uint32_t i = 0; i < group; ++i) {
      if (i > 0 && g == 1)
        throw std::invalid_argument("modulus is not primitive");
      t->exp[i] = static_cast<std::uint32_t>(g);
      t->log[g] = i;
      g = detail::gf2_mod(g << 1U, modulus);
    }
    if (g != 1) throw std::invalid_argument("modulus is not primitive");
    for (std::uint32_t i = 0; i < group; ++i) t->exp[i + group] = t->exp[i];

    // Absolute trace is GF(2)-linear, so it is a parity mask on the bits.
    for (int i = 0; i < degree; ++i) {
      std::uint32_t acc = 0;
      std::uint32_t cur = std::uint32_t{1} << i;
      for (int k = 0; k < degree; ++k) {
        acc ^= cur;
        cur = mul_raw(*t, cur, cur);
      }
      ensure(acc <= 1, "absolute trace left GF(2)");
      t->trace_mask |= acc << i;
    }
    tables_ = std::move(t);
  }

  int degree() const { return tables_->degree; }
  std::uint32_t modulus() const { return tables_->modulus; }
  std::uint32_t order() const { return tables_->order; }

  Gf zero() const { return Gf{0}; }
  Gf one() const { return Gf{1}; }
  Gf generator() const { return Gf{degree() == 1 ? 1U : 2U}; }

  Gf from_bits(std::uint32_t bits) const {
    if (bits >= order()) throw std::out_of_range("element bits exceed field size");
    return Gf{bits};
  }
  bool contains(Gf a) const { return a.bits < order(); }

  static Gf add(Gf a, Gf b) { return Gf{a.bits ^ b.bits}; }
  static Gf sub(Gf a, Gf b) { return Gf{a.bits ^ b.bits}; }

  Gf mul(Gf a, Gf b) const { return Gf{mul_raw(*tables_, a.bits, b.bits)}; }

  Gf inv(Gf a) const {
    if (a.bits == 0) throw std::domain_error("inverse of zero");
    const std::uint32_t group = order() - 1;
    return Gf{tables_->exp[(group - tables_->log[a.bits]) % group]};
  }

  Gf div(Gf a, Gf b) const { return mul(a, inv(b)); }

  Gf pow(Gf a, std::uint64_t e) const {
    if (e == 0) return one();
    if (a.bits == 0) return zero();
    const std::uint64_t group = order() - 1;
    return Gf{tables_->exp[(tables_->log[a.bits] * (e % group)) % group]};
  }

  /// a^(2^k).
  Gf frobenius(Gf a, int k) const {
    if (a.bits == 0) return a;
    const std::uint64_t group = order() - 1;
    std::uint64_t e = 1;
    for (int i = 0; i < k; ++i) e = (e * 2) % group;
    return Gf{tables_->exp[(tables_->log[a.bits] * e) % group]};
  }

  /// Discrete log base the generator; a must be nonzero.
  std::uint32_t log(Gf a) const {
    if (a.bits == 0) throw std::domain_error("log of zero");
    return tables_->log[a.bits];
  }
  Gf exp(std::uint64_t e) const { return Gf{tables_->exp[e % (order() - 1)]}; }

  /// Tr_{GF(2^m)/GF(2)}(a) as 0 or 1.
  int absolute_trace(Gf a) const {
    return std::popcount(a.bits & tables_->trace_mask) & 1;
  }

  /// All elements in the documented order (integer value of the bit pattern).
  std::vector<Gf> elements() const {
    std::vector<Gf> out(order());
    for (std::uint32_t i = 0; i < order(); ++i) out[i] = Gf{i};
    return out;
  }

  /// Evaluate a GF(2)[x] polynomial (bit pattern) at a.
  Gf eval_gf2_poly(std::uint64_t p, Gf a) const {
    Gf acc{0};
    for (int i = detail::gf2_degree(p); i >= 0; --i) {
      acc = mul(acc, a);
      if ((p >> i) & 1U) acc = add(acc, one());
    }
    return acc;
  }

  friend bool operator==(const Field& a, const Field& b) {
    return a.degree() == b.degree() && a.modulus() == b.modulus();
  }

 private:
  struct Tables {
    int degree = 0;
    std::uint32_t modulus = 0;
    std::uint32_t order = 0;
    std::uint32_t trace_mask = 0;
    std::vector<std::uint32_t> exp;
    std::vector<std::uint32_t> log;
  };
  static std::uint32_t mul_raw(const Tables& t, std::uint32_t a, std::uint32_t b) {
    if (a == 0 || b == 0) return 0;
    return t.exp[t.log[a] + t.log[b]];
  }

  std::shared_ptr<const Tables> tables_;
};

/// GF(2^m) with the Conway modulus of degree m.
inline Field make_field(int m) {
  if (m < 1 || m > kMaxFieldDegree)
    throw std::out_of_range("unsupported field degree " + std::to_string(m) + " (supported: 1..16)");
  return Field(m, kConwayModuli[static_cast<std::size_t>(m)]);
}

/// GF(2^b) embedded in GF(2^a), b | a. The embedding sends the generator of
/// the small field to w^((2^a-1)/(2^b-1)) (Conway compatibility); if that
/// element is not a root of the small modulus, the smallest root is used.
class Subfield {
 public:
  Subfield(Field big, Field small) {
    const int a = big.degree();
    const int b = small.degree();
    if (a % b != 0)
      throw std::domain_error("subfield degree " + std::to_string(b) + " does not divide " +
                              std::to_string(a));
    auto d = std::make_shared<Data>(Data{std::move(big), std::move(small), {}, {}, false});
    const Field& F = d->big;
    const Field& S = d->small;
    const std::uint64_t cof = (std::uint64_t{F.order()} - 1) / (std::uint64_t{S.order()} - 1);
    Gf beta = F.exp(cof);
    d->conway_compatible = F.eval_gf2_poly(S.modulus(), beta).bits == 0;
    if (!d->conway_compatible) {
      bool found = false;
      for (Gf c : F.elements()) {
        if (F.eval_gf2_poly(S.modulus(), c).bits == 0) {
          beta = c;
          found = true;
          break;
        }
      }
      ensure(found, "no root of the subfield modulus in the extension");
    }
    d->embed.resize(S.order());
    d->project.assign(F.order(), -1);
    for (std::uint32_t s = 0; s < S.order(); ++s) {
      Gf acc{0};
      Gf pw = F.one();
      for (int i = 0; i < b; ++i) {
        if ((s >> i) & 1U) acc = Field::add(acc, pw);
        pw = F.mul(pw, beta);
      }
      d->embed[s] = acc;
      d->project[acc.bits] = static_cast<std::int32_t>(s);
    }
    data_ = std::move(d);
  }

  const Field& big() const { return data_->big; }
  const Field& small() const { return data_->small; }
  bool conway_compatible() const { return data_->conway_compatible; }

  Gf embed(Gf s) const { return data_->embed.at(s.bits); }
  bool contains(Gf x) const { return data_->project.at(x.bits) >= 0; }
  Gf project(Gf x) const {
    const std::int32_t v = data_->project.at(x.bits);
    if (v < 0) throw std::domain_error("element is not in the subfield");
    return Gf{static_cast<std::uint32_t>(v)};
  }

  /// Tr_{big/small}(x) = x + x^s + ... + x^(s^(n-1)), s = |small|, returned in
  /// small-field coordinates.
  Gf trace(Gf x) const {
    const int a = big().degree();
    const int b = small().degree();
    Gf acc{0};
    Gf cur = x;
    for (int i = 0; i < a / b; ++i) {
      acc = Field::add(acc, cur);
      cur = big().frobenius(cur, b);
    }
    return project(acc);
  }

 private:
  struct Data {
    Field big;
    Field small;
    std::vector<Gf> embed;
    std::vector<std::int32_t> project;
    bool conway_compatible;
  };
  std::shared_ptr<const Data> data_;
};

/// Relative trace of x in `big` down to GF(2^target_degree).
inline Gf field_trace(const Field& big, Gf x, int target_degree) {
  if (target_degree < 1 || big.degree() % target_degree != 0)
    throw std::domain_error("target degree must divide the field degree");
  return Subfield(big, make_field(target_degree)).trace(x);
}

/// GF(r^2) over GF(r) with r = 2^m.
class QuadraticExtension {
 public:
  explicit QuadraticExtension(std::uint32_t r)
      : r_(r), sub_(make_field(2 * checked_degree(r)), make_field(checked_degree(r))) {}

  std::uint32_t r() const { return r_; }
  int m() const { return sub_.small().degree(); }
  std::uint32_t q() const { return big().order(); }
  const Field& big() const { return sub_.big(); }
  const Field& small() const { return sub_.small(); }
  const Subfield& subfield() const { return sub_; }

  /// x -> x^r.
  Gf frobenius(Gf x) const { return big().frobenius(x, m()); }

 private:
  static int checked_degree(std::uint32_t r) {
    if (r < 2 || !std::has_single_bit(r))
      throw std::domain_error("r must be a power of two >= 2");
    const int m = std::countr_zero(r);
    if (2 * m > kMaxFieldDegree) throw std::out_of_range("r too large: GF(r^2) needs degree <= 16");
    return m;
  }

  std::uint32_t r_;
  Subfield sub_;
};

/// Normal basis {theta, theta^r} of GF(r^2)/GF(r) with theta + theta^r = 1.
struct NormalBasisPair {
  Gf theta;
  Gf theta_conj;
};

/// Smallest theta (documented element order) with theta + theta^r = 1 that
/// also satisfies `accept`.
inline std::optional<NormalBasisPair> find_normal_basis_if(
    const QuadraticExtension& ext, const std::function<bool(const NormalBasisPair&)>& accept) {
  for (Gf t : ext.big().elements()) {
    const Gf tr = ext.frobenius(t);
    if (Field::add(t, tr) != ext.big().one()) continue;
    NormalBasisPair nb{t, tr};
    if (accept(nb)) return nb;
  }
  return std::nullopt;
}

inline NormalBasisPair find_normal_basis(const QuadraticExtension& ext) {
  auto nb = find_normal_basis_if(ext, [](const NormalBasisPair&) { return true; });
  ensure(nb.has_value(), "no element of relative trace 1");
  return *nb;
}

/// x = x0*theta + x1*theta^r with x0, x1 in GF(r) (small-field coordinates).
///
/// Using theta + theta^r = 1: x1 = x*theta^r + x^r*theta and
/// x0 = x*theta + x^r*theta^r.
inline std::pair<Gf, Gf> decompose(const QuadraticExtension& ext, const NormalBasisPair& nb, Gf x) {
  const Field& F = ext.big();
  const Gf xr = ext.frobenius(x);
  const Gf x0 = Field::add(F.mul(x, nb.theta), F.mul(xr, nb.theta_conj));
  const Gf x1 = Field::add(F.mul(x, nb.theta_conj), F.mul(xr, nb.theta));
  return {ext.subfield().project(x0), ext.subfield().project(x1)};
}

inline Gf compose(const QuadraticExtension& ext, const NormalBasisPair& nb, Gf x0, Gf x1) {
  const Field& F = ext.big();
  return Field::add(F.mul(ext.subfield().embed(x0), nb.theta),
                    F.mul(ext.subfield().embed(x1), nb.theta_conj));
}

/// Fixed-width lowercase hex of the coefficient bits.
inline std::string to_hex(const Field& f, Gf a) {
  static constexpr char kDigits[] = "0123456789abcdef";
  const int width = (f.degree() + 3) / 4;
  std::string s(static_cast<std::size_t>(width), '0');
  std::uint32_t v = a.bits;
  for (int i = width - 1; i >= 0; --i) {
    s[static_cast<std::size_t>(i)] = kDigits[v & 0xFU];
    v >>= 4U;
  }
  return s;
}

inline Gf from_hex(const Field& f, const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty hex element");
  std::size_t pos = 0;
  const unsigned long v = std::stoul(s, &pos, 16);
  if (pos != s.size()) throw std::invalid_argument("bad hex element: " + s);
  return f.from_bits(static_cast<std::uint32_t>(v));
}

}  // namespace triortho

#endif  // TRIORTHO_GF2M_HPP
