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

#include "triortho/matrix.hpp"
#include "triortho/polynomial.hpp"
#include "triortho/random.hpp"

namespace triortho {
namespace {

Polynomial random_poly(const Field& f, Rng& rng, int deg) {
  std::vector<Gf> c(static_cast<std::size_t>(deg) + 1);
  for (Gf& x : c) x = Gf{static_cast<std::uint32_t>(rng.below(f.order()))};
  return Polynomial(f, c);
}

TEST(Polynomial, ZeroHasDegreeMinusOne) {
  const Field f = make_field(4);
  EXPECT_EQ(Polynomial(f).degree(), -1);
  EXPECT_TRUE(Polynomial(f, {Gf{0}, Gf{0}}).is_zero());
}

TEST(Polynomial, DivmodReconstructs) {
  const Field f = make_field(6);
  Rng rng(3);
  for (int t = 0; t < 200; ++t) {
    const Polynomial a = random_poly(f, rng, static_cast<int>(rng.below(12)));
    Polynomial b = random_poly(f, rng, static_cast<int>(rng.below(6)));
    if (b.is_zero()) continue;
    auto [q, r] = a.divmod(b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
  }
}

TEST(Polynomial, FromRootsVanishesExactlyThere) {
  const Field f = make_field(3);
  const std::vector<Gf> roots = {Gf{1}, Gf{5}, Gf{6}};
  const Polynomial p = Polynomial::from_roots(f, roots);
  EXPECT_EQ(p.degree(), 3);
  for (Gf a : f.elements()) {
    const bool is_root = a == Gf{1} || a == Gf{5} || a == Gf{6};
    EXPECT_EQ(p.eval(a).bits == 0, is_root);
    EXPECT_EQ(p.root_multiplicity(a), is_root ? 1 : 0);
  }
}

TEST(Polynomial, XrPlusXIsProductOverSubfield) {
  const QuadraticExtension ext(8);
  const Field& F = ext.big();
  std::vector<Gf> sub;
  for (Gf a : F.elements())
    if (ext.subfield().contains(a)) sub.push_back(a);
  const Polynomial lhs = Polynomial::monomial(F, 8, F.one()) + Polynomial::x(F);
  EXPECT_EQ(Polynomial::from_roots(F, sub), lhs);
}

TEST(Polynomial, DerivativeInCharacteristicTwo) {
  const Field f = make_field(4);
  // (x^5 + x^4 + x)' = x^4 + 1
  const Polynomial p = Polynomial::monomial(f, 5, f.one()) + Polynomial::monomial(f, 4, f.one()) + Polynomial::x(f);
  EXPECT_EQ(p.derivative(), Polynomial::monomial(f, 4, f.one()) + Polynomial::constant(f, f.one()));
}

TEST(Polynomial, TaylorShiftMatchesComposition) {
  const Field f = make_field(5);
  Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    const Polynomial p = random_poly(f, rng, 7);
    const Gf alpha{static_cast<std::uint32_t>(rng.below(f.order()))};
    const Polynomial s = p.taylor_shift(alpha);
    for (Gf u : f.elements()) EXPECT_EQ(s.eval(u), p.eval(Field::add(u, alpha)));
  }
}

TEST(Polynomial, GcdIsMonicCommonFactor) {
  const Field f = make_field(4);
  const std::vector<Gf> r1 = {Gf{1}, Gf{2}, Gf{3}};
  const std::vector<Gf> r2 = {Gf{2}, Gf{3}, Gf{7}};
  const Polynomial a = Polynomial::from_roots(f, r1).scaled(Gf{9});
  const Polynomial b = Polynomial::from_roots(f, r2).scaled(Gf{4});
  const std::vector<Gf> common = {Gf{2}, Gf{3}};
  EXPECT_EQ(gcd(a, b), Polynomial::from_roots(f, common));
}

TEST(Matrix, KernelIsOrthogonalAndComplementary) {
  const Field f = make_field(6);
  Rng rng(9);
  for (int t = 0; t < 30; ++t) {
    const std::size_t k = 1 + rng.below(8), n = k + rng.below(10);
    Matrix m(k, n);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = Gf{static_cast<std::uint32_t>(rng.below(64))};
    const Matrix ker = kernel(f, m);
    EXPECT_TRUE(rows_orthogonal(f, m, ker));
    EXPECT_EQ(rank(f, ker), ker.rows());
    EXPECT_EQ(ker.rows() + rank(f, m), n);
  }
}

TEST(Matrix, RrefPivotsLeftmost) {
  const Field f = make_field(2);
  const Matrix m = Matrix::from_rows({{Gf{0}, Gf{1}, Gf{1}}, {Gf{0}, Gf{2}, Gf{2}}, {Gf{1}, Gf{0}, Gf{1}}}, 3);
  const RowEchelon e = rref(f, m);
  EXPECT_EQ(e.rank(), 2U);
  EXPECT_EQ(e.pivots, (std::vector<std::size_t>{0, 1}));
  EXPECT_TRUE(in_rowspace(f, e, std::vector<Gf>{Gf{1}, Gf{1}, Gf{0}}));
  EXPECT_FALSE(in_rowspace(f, e, std::vector<Gf>{Gf{0}, Gf{0}, Gf{1}}));
}

}  // namespace
}  // namespace triortho
