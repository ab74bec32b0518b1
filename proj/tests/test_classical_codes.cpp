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

#include <gtest/gtest.h>

#include <vector>

#include "triortho/classical_codes.hpp"

namespace triortho {
namespace {

Matrix random_matrix(Rng& rng, std::size_t k, std::size_t n, std::uint32_t q) {
  Matrix m(k, n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Gf{static_cast<std::uint32_t>(rng.below(q))};
  return m;
}

TEST(EvaluateCode, ConstantBasisGivesRepetitionCode) {
  const Field F = make_field(3);
  EvaluationSpec spec;
  for (std::uint32_t a : {1U, 4U, 6U}) spec.eval_points.push_back(Place::finite(Gf{a}));
  spec.rr_basis = {RationalFunction(Polynomial::constant(F, F.one()))};
  const LinearCode c = evaluate_code(spec);
  EXPECT_EQ(c.k(), 1U);
  for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(c.generator()(0, j), F.one());
}

TEST(EvaluateCode, ReedSolomonOverGf4HasDistanceThree) {
  const Field F = make_field(2);
  EvaluationSpec spec;
  for (Gf a : F.elements()) spec.eval_points.push_back(Place::finite(a));
  spec.rr_basis = riemann_roch_basis(F, Divisor::single(Place::infinity(), 1));
  const LinearCode c = evaluate_code(spec);
  ASSERT_EQ(c.k(), 2U);
  std::size_t dmin = 99;
  for (Gf a : F.elements())
    for (Gf b : F.elements()) {
      if (a.bits == 0 && b.bits == 0) continue;
      std::vector<Gf> w(4, F.zero());
      axpy(F, a, c.generator().row(0), w);
      axpy(F, b, c.generator().row(1), w);
      dmin = std::min(dmin, weight(w));
    }
  EXPECT_EQ(dmin, 3U);
}

TEST(EvaluateCode, PoleAtEvaluationPointThrows) {
  const Field F = make_field(3);
  EvaluationSpec spec;
  spec.eval_points = {Place::finite(Gf{2}), Place::finite(Gf{3})};
  spec.rr_basis = riemann_roch_basis(F, Divisor::single(Place::finite(Gf{2}), 1));
  EXPECT_THROW(evaluate_code(spec), PoleError);
}

TEST(EvaluateCode, RankDeficiencyThrows) {
  const Field F = make_field(3);
  EvaluationSpec spec;
  spec.eval_points = {Place::finite(Gf{1}), Place::finite(Gf{2})};
  spec.rr_basis = riemann_roch_basis(F, Divisor::single(Place::infinity(), 2));
  EXPECT_THROW(evaluate_code(spec), DegenerateDivisorError);
}

TEST(BaseCode, R8Parameters) {
  const AgCode c = construct_base_code(8);
  EXPECT_EQ(c.code.q(), 64U);
  EXPECT_EQ(c.code.n(), 56U);
  EXPECT_EQ(c.code.k(), 19U);
  EXPECT_EQ(c.deg_g(), 18);
  const DistanceCertificate cert = distance_certificate(c);
  EXPECT_EQ(cert.lower, 38);
  EXPECT_EQ(cert.upper, 38);
  EXPECT_TRUE(cert.exact);
  EXPECT_TRUE(cert.mds);
}

TEST(BaseCode, R16AndR32Parameters) {
  struct Row {
    std::uint32_t r;
    std::size_t n, k;
    long long d;
  };
  for (const Row& row : {Row{16, 240, 69, 172}, Row{32, 992, 331, 662}}) {
    const AgCode c = construct_base_code(row.r);
    EXPECT_EQ(c.code.n(), row.n);
    EXPECT_EQ(c.code.k(), row.k);
    const DistanceCertificate cert = distance_certificate(c);
    EXPECT_EQ(cert.lower, row.d);
    EXPECT_EQ(cert.upper, row.d);
    EXPECT_EQ(cert.lower, static_cast<long long>(row.n - row.k + 1));
    // witness vanishes exactly on the first deg G points
    for (std::size_t j = 0; j < row.n; ++j)
      EXPECT_EQ(cert.witness[j].bits == 0, static_cast<long long>(j) < c.deg_g()) << j;
  }
}

TEST(BaseCode, RejectsSmallR) {
  EXPECT_THROW(construct_base_code(4), std::domain_error);
  EXPECT_THROW(construct_base_code(2), std::domain_error);
}

TEST(Triorthogonality, R8Exhaustive) {
  const AgCode c = construct_base_code(8);
  const auto rep = is_triorthogonal(c.code);
  EXPECT_TRUE(rep.triorthogonal);
  EXPECT_TRUE(rep.contains_all_ones);
  EXPECT_EQ(rep.triples_checked, 19U * 19U * 19U);
  EXPECT_EQ(rep.pairs_checked, 19U * 20U / 2U);
}

TEST(Triorthogonality, R16AndR32Sampled) {
  for (std::uint32_t r : {16U, 32U}) {
    const AgCode c = construct_base_code(r);
    const auto rep = is_triorthogonal(c.code, {false, 10000, 2026});
    EXPECT_TRUE(rep.triorthogonal) << r;
    EXPECT_EQ(rep.triples_checked, 10000U);
  }
}

TEST(Triorthogonality, ReplacedRowIsDetected) {
  const AgCode c = construct_base_code(8);
  Rng rng(1);
  int detected = 0;
  for (int t = 0; t < 5; ++t) {
    Matrix g = c.code.generator();
    const std::size_t row = 1 + rng.below(18);
    for (std::size_t j = 0; j < g.cols(); ++j) g(row, j) = Gf{static_cast<std::uint32_t>(rng.below(64))};
    if (rank(c.code.field(), g) != g.rows()) continue;
    const auto rep = is_triorthogonal(LinearCode(c.code.field(), g));
    if (!rep.triorthogonal) {
      ++detected;
      EXPECT_TRUE(rep.bad_pair.has_value() || rep.bad_triple.has_value());
    }
  }
  EXPECT_GE(detected, 4);
}

TEST(Triorthogonality, EvenLengthAllOnesCode) {
  const Field F = make_field(6);
  Matrix g(1, 10);
  for (std::size_t j = 0; j < 10; ++j) g(0, j) = F.one();
  EXPECT_TRUE(is_triorthogonal(LinearCode(F, g)).triorthogonal);
}

TEST(Dual, RepetitionCodeDualIsSumZero) {
  const Field F = make_field(4);
  Matrix g(1, 7);
  for (std::size_t j = 0; j < 7; ++j) g(0, j) = F.one();
  const LinearCode d = dual_code(LinearCode(F, g));
  EXPECT_EQ(d.k(), 6U);
  for (std::size_t i = 0; i < d.k(); ++i) {
    Gf s = F.zero();
    for (Gf x : d.generator().row(i)) s = Field::add(s, x);
    EXPECT_EQ(s.bits, 0U);
  }
}

TEST(Dual, BaseCodeStarSquareInDual) {
  const AgCode c = construct_base_code(8);
  const Field& F = c.code.field();
  const LinearCode d = dual_code(c.code);
  EXPECT_EQ(d.k(), 37U);
  const RowEchelon de = rref(F, d.generator());
  for (std::size_t a = 0; a < c.code.k(); ++a)
    for (std::size_t b = a; b < c.code.k(); ++b)
      EXPECT_TRUE(in_rowspace(F, de, star_product(F, c.code.generator().row(a), c.code.generator().row(b))));
}

TEST(Dual, DoubleDualPreservesRowspace) {
  Rng rng(20);
  for (int t = 0; t < 20; ++t) {
    const Field F = make_field(1 + static_cast<int>(rng.below(8)));
    const std::size_t n = 2 + rng.below(20);
    const std::size_t k = 1 + rng.below(n - 1);
    Matrix g = random_matrix(rng, k, n, F.order());
    if (rank(F, g) != k) continue;
    const LinearCode c(F, g);
    const LinearCode dd = dual_code(dual_code(c));
    EXPECT_TRUE(same_rowspace(F, c.generator(), dd.generator()));
  }
}

TEST(StarProduct, IdentitiesOnBaseCode) {
  const AgCode c = construct_base_code(8);
  const Field& F = c.code.field();
  const auto& g = c.code.generator();
  const std::vector<Gf> ones(c.code.n(), F.one());
  Rng rng(4);
  for (int t = 0; t < 20; ++t) {
    const std::size_t i = rng.below(19), j = rng.below(19);
    EXPECT_EQ(star_product(F, g.row(i), ones), g.row_vector(i));
    EXPECT_EQ(star_product(F, g.row(i), g.row(j)), star_product(F, g.row(j), g.row(i)));
    // x^{i+j} / h^2 evaluated on Z
    const Polynomial h = (Polynomial::monomial(F, 8, F.one()) + Polynomial::x(F)).pow(2);
    const RationalFunction f(Polynomial::monomial(F, i + j, F.one()), h * h);
    const auto prod = star_product(F, g.row(i), g.row(j));
    for (std::size_t col = 0; col < c.points.size(); ++col) EXPECT_EQ(prod[col], f.eval(c.points[col]));
  }
  EXPECT_THROW(star_product(F, g.row(0), std::vector<Gf>(3)), std::invalid_argument);
}

TEST(DistanceCertificate, RejectsDegreeAtLeastLength) {
  const AgCode c = construct_base_code(8);
  EXPECT_THROW(distance_certificate(c.code, c.points, 56), std::domain_error);
}

}  // namespace
}  // namespace triortho
