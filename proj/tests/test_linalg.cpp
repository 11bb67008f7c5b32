/*
   Copyright 2026 The formclass Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include <stdexcept>

#include "formclass/matrix.hpp"
#include "formclass/subspace.hpp"
#include "oracle.hpp"

namespace formclass {
namespace {

Matrix mat(std::size_t cols, std::vector<Vector> rows) { return Matrix::from_rows(cols, rows); }

TEST(Rref, IdentityIsFixed) {
  const auto e = rref(Matrix::identity(3));
  EXPECT_EQ(e.reduced, Matrix::identity(3));
  EXPECT_EQ(e.rank, 3u);
}

TEST(Rref, ZeroIsFixed) {
  const auto e = rref(Matrix(2, 5));
  EXPECT_EQ(e.reduced, Matrix(2, 5));
  EXPECT_EQ(e.rank, 0u);
  EXPECT_TRUE(e.pivots.empty());
}

TEST(Rref, DependentRows) {
  // [[1,2],[2,4]]: R2 -= 2 R1 leaves [[1,2],[0,0]].
  const auto e = rref(mat(2, {{1, 2}, {2, 4}}));
  EXPECT_EQ(e.reduced, mat(2, {{1, 2}, {0, 0}}));
  EXPECT_EQ(e.rank, 1u);
  EXPECT_EQ(e.pivots, (std::vector<std::size_t>{0}));
}

TEST(Kernel, Examples) {
  EXPECT_TRUE(kernel_basis(Matrix::identity(3)).is_zero());
  EXPECT_EQ(kernel_basis(Matrix(2, 3)), Subspace::full(3));
  // x − z = 0: solutions (a, b, a).
  const Subspace k = kernel_basis(mat(3, {{1, 0, -1}}));
  EXPECT_EQ(k, Subspace::span(3, {{1, 0, 1}, {0, 1, 0}}));
  EXPECT_EQ(k.dim(), 2u);
}

TEST(SolveAffine, Examples) {
  const Vector b{Rational(3), Rational(-1, 2)};
  auto s = solve_affine(Matrix::identity(2), b);
  ASSERT_TRUE(s);
  EXPECT_EQ(s->particular, b);
  EXPECT_TRUE(s->homogeneous.is_zero());

  EXPECT_FALSE(solve_affine(Matrix(2, 2), Vector{Rational(1), Rational(0)}));

  // x + y = 2: (2, 0) with free direction (1, −1).
  s = solve_affine(mat(2, {{1, 1}}), Vector{Rational(2)});
  ASSERT_TRUE(s);
  EXPECT_EQ(s->particular, (Vector{2, 0}));
  EXPECT_EQ(s->homogeneous, Subspace::span(2, {{1, -1}}));
}

TEST(SolveAffine, RowCountChecked) { EXPECT_THROW(solve_affine(Matrix(2, 2), Vector{Rational(1)}), std::invalid_argument); }

TEST(Subspace, IntersectExamples) {
  const Subspace s = Subspace::span(3, {{1, 0, 0}, {0, 1, 0}});
  const Subspace t = Subspace::span(3, {{0, 1, 0}, {0, 0, 1}});
  EXPECT_EQ(subspace_intersect(s, s), s);
  EXPECT_EQ(subspace_intersect(s, t), Subspace::span(3, {{0, 1, 0}}));
  const Subspace p = Subspace::span(4, {{1, 0, 0, 0}, {0, 1, 0, 0}});
  const Subspace q = Subspace::span(4, {{0, 0, 1, 0}, {0, 0, 0, 1}});
  EXPECT_TRUE(subspace_intersect(p, q).is_zero());
  EXPECT_THROW(subspace_intersect(s, p), std::invalid_argument);
}

TEST(Subspace, AnnihilatorExamples) {
  EXPECT_EQ(annihilator(Subspace::zero(3)), Subspace::full(3));
  EXPECT_TRUE(annihilator(Subspace::full(3)).is_zero());
  EXPECT_EQ(annihilator(Subspace::span(3, {{1, 1, 0}})), Subspace::span(3, {{1, -1, 0}, {0, 0, 1}}));
}

TEST(Subspace, SumAndContains) {
  const Subspace s = Subspace::span(3, {{1, 2, 3}});
  EXPECT_EQ(subspace_sum(s, Subspace::zero(3)), s);
  const Subspace e1 = Subspace::span(3, {{1, 0, 0}});
  const Subspace e2 = Subspace::span(3, {{0, 1, 0}});
  const Subspace both = subspace_sum(e1, e2);
  EXPECT_EQ(both, Subspace::span(3, {{1, 0, 0}, {0, 1, 0}}));
  EXPECT_TRUE(both.contains(Subspace::span(3, {{1, 1, 0}})));
  EXPECT_FALSE(both.contains(Vector{0, 0, 1}));
}

TEST(Subspace, CanonicalRepresentation) {
  const Subspace a = Subspace::span(3, {{1, 1, 0}, {1, -1, 0}});
  const Subspace b = Subspace::span(3, {{2, 0, 0}, {0, 5, 0}, {3, 3, 0}});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.basis(), b.basis());
}

// --- properties -----------------------------------------------------------

TEST(LinalgProperty, RankNullity) {
  oracle::Gen gen(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto rows = static_cast<std::size_t>(gen.integer(1, 8));
    const auto cols = static_cast<std::size_t>(gen.integer(1, 8));
    const Matrix a = gen.matrix(rows, cols, gen.coin() ? 0.3 : 0.8);
    const Subspace k = kernel_basis(a);
    ASSERT_EQ(rank(a) + k.dim(), cols);
    ASSERT_EQ(rank(a), oracle::bareiss_rank(a));
    for (const auto& v : k.vectors()) ASSERT_TRUE(oracle::annihilates(a, v));
  }
}

TEST(LinalgProperty, RrefIsIdempotentAndCanonical) {
  oracle::Gen gen(12);
  for (int trial = 0; trial < 200; ++trial) {
    const Matrix a = gen.matrix(static_cast<std::size_t>(gen.integer(1, 6)), static_cast<std::size_t>(gen.integer(1, 6)));
    const auto e = rref(a);
    ASSERT_EQ(rref(e.reduced).reduced, e.reduced);
    ASSERT_EQ(e.rank, e.pivots.size());
    for (std::size_t r = 0; r < e.rank; ++r) ASSERT_TRUE(e.reduced(r, e.pivots[r]).is_one());
  }
}

TEST(LinalgProperty, Grassmann) {
  oracle::Gen gen(13);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t m = gen.dim(1, 7);
    std::vector<Vector> gs, gt;
    for (long i = gen.integer(0, static_cast<long>(m)); i > 0; --i) gs.push_back(gen.vector(m));
    for (long i = gen.integer(0, static_cast<long>(m)); i > 0; --i) gt.push_back(gen.vector(m));
    // Share a vector sometimes so intersections are nontrivial.
    if (!gs.empty() && gen.coin()) gt.push_back(gs.front());
    const Subspace s = Subspace::span(m, gs), t = Subspace::span(m, gt);
    const Subspace meet = subspace_intersect(s, t);
    ASSERT_EQ(meet.dim() + subspace_sum(s, t).dim(), s.dim() + t.dim());
    ASSERT_TRUE(s.contains(meet));
    ASSERT_TRUE(t.contains(meet));
  }
}

TEST(LinalgProperty, AnnihilatorInvolutionAndReversal) {
  oracle::Gen gen(14);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t m = gen.dim(1, 7);
    std::vector<Vector> gs;
    for (long i = gen.integer(0, static_cast<long>(m)); i > 0; --i) gs.push_back(gen.vector(m));
    const Subspace s = Subspace::span(m, gs);
    const Subspace ann = annihilator(s);
    ASSERT_EQ(ann.dim(), m - s.dim());
    ASSERT_EQ(annihilator(ann), s);
    for (const auto& u : ann.vectors())
      for (const auto& v : s.vectors()) ASSERT_TRUE(dot(u, v).is_zero());
    const Subspace bigger = subspace_sum(s, Subspace::span(m, {gen.vector(m)}));
    ASSERT_TRUE(annihilator(s).contains(annihilator(bigger)));
  }
}

TEST(LinalgProperty, SolveAffineSatisfiesSystem) {
  oracle::Gen gen(15);
  int consistent = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto rows = static_cast<std::size_t>(gen.integer(1, 7));
    const auto cols = static_cast<std::size_t>(gen.integer(1, 7));
    const Matrix a = gen.matrix(rows, cols, 0.5);
    // Half the time b lies in the column space by construction.
    const Vector b = gen.coin() ? a.apply(gen.vector(cols)) : gen.vector(rows);
    const auto s = solve_affine(a, b);
    if (!s) {
      Matrix augmented(rows, cols + 1);
      for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) augmented(r, c) = a(r, c);
        augmented(r, cols) = b[r];
      }
      ASSERT_EQ(rank(augmented), rank(a) + 1);
      continue;
    }
    ++consistent;
    ASSERT_EQ(a.apply(s->particular), b);
    for (const auto& k : s->homogeneous.vectors()) ASSERT_TRUE(is_zero(a.apply(k)));
    ASSERT_EQ(s->homogeneous, kernel_basis(a));
  }
  EXPECT_GT(consistent, 100);
}

}  // namespace
}  // namespace formclass
