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

// Linear codes over GF(q) given by generator matrices, algebraic-geometry
// evaluation codes on GF(q)(x), and the triorthogonal base code C_0.

#ifndef TRIORTHO_CLASSICAL_CODES_HPP
#define TRIORTHO_CLASSICAL_CODES_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "triortho/errors.hpp"
#include "triortho/function_field.hpp"
#include "triortho/gf2m.hpp"
#include "triortho/matrix.hpp"
#include "triortho/random.hpp"

namespace triortho {

/// [n, k]_q code; the generator rows are a basis (rank == k is enforced).
class LinearCode {
 public:
  LinearCode(Field f, Matrix gen) : field_(std::move(f)), gen_(std::move(gen)) {
    if (gen_.rows() < 1) throw std::invalid_argument("a linear code needs k >= 1");
    if (gen_.cols() < gen_.rows()) throw std::invalid_argument("a linear code needs n >= k");
    if (rank(field_, gen_) != gen_.rows()) throw DegenerateDivisorError("generator matrix is rank deficient");
  }

  const Field& field() const { return field_; }
  std::uint32_t q() const { return field_.order(); }
  std::size_t n() const { return gen_.cols(); }
  std::size_t k() const { return gen_.rows(); }
  const Matrix& generator() const { return gen_; }

 private:
  Field field_;
  Matrix gen_;
};

struct EvaluationSpec {
  std::vector<Place> eval_points;
  std::vector<RationalFunction> rr_basis;
};

/// gen[i][j] = rr_basis[i](eval_points[j]).
inline LinearCode evaluate_code(const EvaluationSpec& spec) {
  if (spec.rr_basis.empty()) throw std::invalid_argument("empty Riemann-Roch basis");
  const Field& f = spec.rr_basis.front().field();
  for (std::size_t i = 0; i < spec.eval_points.size(); ++i) {
    if (spec.eval_points[i].at_infinity) throw std::invalid_argument("evaluation points must be finite places");
    for (std::size_t j = 0; j < i; ++j)
      if (spec.eval_points[j] == spec.eval_points[i]) throw std::invalid_argument("evaluation points must be distinct");
  }
  Matrix gen(spec.rr_basis.size(), spec.eval_points.size());
  for (std::size_t i = 0; i < spec.rr_basis.size(); ++i) {
    for (std::size_t j = 0; j < spec.eval_points.size(); ++j) {
      try {
        gen(i, j) = spec.rr_basis[i].eval(spec.eval_points[j].alpha);
      } catch (const PoleError&) {
        throw PoleError("evaluation point " + std::to_string(j) + " is a pole of basis function " +
                        std::to_string(i) + " (D and G are not disjoint)");
      }
    }
  }
  if (rank(f, gen) != gen.rows())
    throw DegenerateDivisorError("evaluation matrix is rank deficient (deg G >= n?)");
  return LinearCode(f, std::move(gen));
}

/// AG code C_L(D, G) on GF(r^2)(x) with its defining data.
struct AgCode {
  QuadraticExtension ext;
  std::vector<Gf> points;  // supp(D) in column order
  Divisor d;
  Divisor g;
  LinearCode code;
  long long deg_g() const { return g.degree(); }
};

/// C_0 = C_L(D_0, G_0), D_0 = sum_{P in Z} P, G_0 = floor((r-2)/3) sum_{Q in V} Q.
inline AgCode construct_base_code(std::uint32_t r) {
  if (r < 8 || (r & (r - 1)) != 0)
    throw std::domain_error("base code needs r = 2^m with m >= 3; for r < 8 floor((r-2)/3) = 0, so G_0 = 0 and "
                            "C_0 degenerates to the repetition code (and deg G_j > 2g_j - 2 fails)");
  QuadraticExtension ext(r);
  const Field& F = ext.big();
  auto pts = evaluation_points(ext);
  Divisor d0 = base_divisor_d0(ext);
  Divisor g0 = base_divisor_g0(ext);
  EvaluationSpec spec;
  spec.eval_points.reserve(pts.size());
  for (Gf a : pts) spec.eval_points.push_back(Place::finite(a));
  spec.rr_basis = riemann_roch_basis(F, g0);
  LinearCode code = evaluate_code(spec);
  return AgCode{std::move(ext), std::move(pts), std::move(d0), std::move(g0), std::move(code)};
}

/// Basis of C^perp as a code.
inline LinearCode dual_code(const LinearCode& c) {
  return LinearCode(c.field(), kernel(c.field(), c.generator()));
}

inline std::vector<Gf> star_product(const Field& f, std::span<const Gf> a, std::span<const Gf> b) {
  if (a.size() != b.size()) throw std::invalid_argument("star product length mismatch");
  std::vector<Gf> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.mul(a[i], b[i]);
  return out;
}

struct TriorthogonalityOptions {
  bool exhaustive = true;
  std::size_t samples = 10000;  // random basis triples when !exhaustive
  std::uint64_t seed = 0;
};

struct TriorthogonalityReport {
  bool triorthogonal = false;
  bool contains_all_ones = false;
  bool pairs_orthogonal = false;
  bool triples_orthogonal = false;
  std::size_t pairs_checked = 0;
  std::size_t triples_checked = 0;
  std::optional<std::pair<std::size_t, std::size_t>> bad_pair;
  std::optional<std::array<std::size_t, 3>> bad_triple;
};

/// All-ones in C, and sum_i g_a[i] g_b[i] g_c[i] = 0 on basis triples
/// (every ordered triple when exhaustive, seeded samples otherwise). Pairwise
/// orthogonality of basis rows is checked on every pair in both modes.
inline TriorthogonalityReport is_triorthogonal(const LinearCode& c, const TriorthogonalityOptions& opt = {}) {
  const Field& f = c.field();
  const Matrix& g = c.generator();
  const std::size_t k = c.k();
  TriorthogonalityReport rep;

  const std::vector<Gf> ones(c.n(), f.one());
  rep.contains_all_ones = in_rowspace(f, rref(f, g), ones);

  rep.pairs_orthogonal = true;
  for (std::size_t a = 0; a < k && rep.pairs_orthogonal; ++a) {
    for (std::size_t b = a; b < k; ++b) {
      ++rep.pairs_checked;
      if (dot(f, g.row(a), g.row(b)).bits != 0) {
        rep.pairs_orthogonal = false;
        rep.bad_pair = {a, b};
        break;
      }
    }
  }

  rep.triples_orthogonal = true;
  if (opt.exhaustive) {
    for (std::size_t a = 0; a < k && rep.triples_orthogonal; ++a) {
      for (std::size_t b = 0; b < k && rep.triples_orthogonal; ++b) {
        const auto ab = star_product(f, g.row(a), g.row(b));
        for (std::size_t cc = 0; cc < k; ++cc) {
          ++rep.triples_checked;
          if (dot(f, ab, g.row(cc)).bits != 0) {
            rep.triples_orthogonal = false;
            rep.bad_triple = std::array<std::size_t, 3>{a, b, cc};
            break;
          }
        }
      }
    }
  } else {
    Rng rng(opt.seed);
    for (std::size_t s = 0; s < opt.samples; ++s) {
      const std::size_t a = rng.below(k), b = rng.below(k), cc = rng.below(k);
      ++rep.triples_checked;
      const auto ab = star_product(f, g.row(a), g.row(b));
      if (dot(f, ab, g.row(cc)).bits != 0) {
        rep.triples_orthogonal = false;
        rep.bad_triple = std::array<std::size_t, 3>{a, b, cc};
        break;
      }
    }
  }
  rep.triorthogonal = rep.contains_all_ones && rep.pairs_orthogonal && rep.triples_orthogonal;
  return rep;
}

struct DistanceCertificate {
  long long lower = 0;
  long long upper = 0;
  std::vector<Gf> witness;
  bool exact = false;  // lower == upper
  bool mds = false;    // lower == n - k + 1
};

/// d >= n - deg G, and an explicit codeword of weight n - deg G: the
/// evaluation of prod_{i < deg G} (x + alpha_i) / h at the points, with
/// alpha_i the first deg G evaluation points. Requires the canonical basis
/// x^i / h (row i of the generator is x^i / h), so the witness is the row
/// combination given by the coefficients of the product polynomial.
inline DistanceCertificate distance_certificate(const LinearCode& c, std::span<const Gf> points, long long deg_g) {
  const long long n = static_cast<long long>(c.n());
  if (deg_g >= n) throw std::domain_error("deg G >= n: no distance bound");
  if (deg_g < 0) throw std::domain_error("deg G must be nonnegative");
  if (points.size() != c.n()) throw std::invalid_argument("point count does not match code length");
  if (static_cast<long long>(c.k()) < deg_g + 1)
    throw std::invalid_argument("generator is not the canonical Riemann-Roch basis of a degree-deg G divisor");
  const Field& f = c.field();
  const Polynomial p = Polynomial::from_roots(f, points.first(static_cast<std::size_t>(deg_g)));
  std::vector<Gf> w(c.n(), f.zero());
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) axpy(f, p.coeffs()[i], c.generator().row(i), w);
  DistanceCertificate cert;
  cert.lower = n - deg_g;
  cert.upper = static_cast<long long>(weight(w));
  cert.witness = std::move(w);
  ensure(cert.upper >= cert.lower, "witness codeword lighter than the designed distance");
  cert.exact = cert.lower == cert.upper;
  cert.mds = cert.lower == n - static_cast<long long>(c.k()) + 1;
  return cert;
}

inline DistanceCertificate distance_certificate(const AgCode& c) {
  return distance_certificate(c.code, c.points, c.deg_g());
}

}  // namespace triortho

#endif  // TRIORTHO_CLASSICAL_CODES_HPP
