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

#ifndef FORMCLASS_SUBSPACE_HPP
#define FORMCLASS_SUBSPACE_HPP

#include <cstddef>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "formclass/matrix.hpp"

namespace formclass {

/// Linear subspace of R^m (or of its dual), stored as the nonzero rows of a
/// reduced row-echelon basis. Equal subspaces have identical representations.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient) { return Subspace(ambient, Matrix(0, ambient)); }
  static Subspace full(std::size_t ambient) { return Subspace(ambient, Matrix::identity(ambient)); }

  /// Span of arbitrary (possibly dependent or zero) vectors.
  static Subspace span(std::size_t ambient, const std::vector<Vector>& vectors) {
    if (vectors.empty()) return zero(ambient);
    auto echelon = rref(Matrix::from_rows(ambient, vectors));
    Matrix basis(echelon.rank, ambient);
    for (std::size_t i = 0; i < echelon.rank; ++i)
      for (std::size_t j = 0; j < ambient; ++j) basis(i, j) = echelon.reduced(i, j);
    return Subspace(ambient, std::move(basis));
  }

  [[nodiscard]] std::size_t ambient_dim() const { return ambient_; }
  [[nodiscard]] std::size_t dim() const { return basis_.rows(); }
  [[nodiscard]] std::size_t codim() const { return ambient_ - dim(); }
  [[nodiscard]] bool is_zero() const { return dim() == 0; }
  [[nodiscard]] const Matrix& basis() const { return basis_; }
  [[nodiscard]] std::vector<Vector> vectors() const { return basis_.row_vectors(); }

  /// Normal form of v modulo the subspace: v minus the combination of basis
  /// rows that clears every pivot coordinate. Zero iff v is contained.
  [[nodiscard]] Vector reduce(const Vector& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("Subspace::reduce: dimension mismatch");
    Vector residual = v;
    for (std::size_t i = 0; i < dim(); ++i) {
      std::size_t lead = 0;
      while (basis_(i, lead).is_zero()) ++lead;
      if (residual[lead].is_zero()) continue;
      const Rational factor = residual[lead];
      for (std::size_t j = 0; j < ambient_; ++j) residual[j] -= factor * basis_(i, j);
    }
    return residual;
  }

  [[nodiscard]] bool contains(const Vector& v) const { return formclass::is_zero(reduce(v)); }

  [[nodiscard]] bool contains(const Subspace& other) const {
    check_same_ambient(other);
    for (std::size_t i = 0; i < other.dim(); ++i)
      if (!contains(other.basis_.row(i))) return false;
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

  friend std::ostream& operator<<(std::ostream& os, const Subspace& s) {
    return os << "span" << s.basis_ << " in R^" << s.ambient_;
  }

  void check_same_ambient(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw std::invalid_argument("Subspace: ambient dimension mismatch");
  }

 private:
  Subspace(std::size_t ambient, Matrix basis) : ambient_(ambient), basis_(std::move(basis)) {}

  std::size_t ambient_ = 0;
  Matrix basis_;
};

/// Null space {v : m v = 0}.
inline Subspace kernel_basis(const Matrix& m) {
  const auto echelon = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : echelon.pivots) is_pivot[p] = true;
  std::vector<Vector> generators;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < echelon.rank; ++r) v[echelon.pivots[r]] = -echelon.reduced(r, free);
    generators.push_back(std::move(v));
  }
  return Subspace::span(m.cols(), generators);
}

/// Solution set of a linear system: particular + homogeneous.
struct AffineSolution {
  Vector particular;
  Subspace homogeneous;

  /// Equality as affine subspaces, independent of the particular representative.
  [[nodiscard]] bool same_set(const AffineSolution& other) const {
    return homogeneous == other.homogeneous && homogeneous.contains(particular - other.particular);
  }
  [[nodiscard]] bool contains(const Vector& v) const { return homogeneous.contains(v - particular); }
};

/// Solves a x = b. Free variables of the particular solution are zero.
/// Returns nullopt when b is not in the column space of a.
inline std::optional<AffineSolution> solve_affine(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve_affine: rhs length mismatch");
  Matrix augmented(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) augmented(i, j) = a(i, j);
    augmented(i, a.cols()) = b[i];
  }
  const auto echelon = rref(std::move(augmented));
  if (!echelon.pivots.empty() && echelon.pivots.back() == a.cols()) return std::nullopt;
  Vector particular(a.cols());
  for (std::size_t r = 0; r < echelon.rank; ++r) particular[echelon.pivots[r]] = echelon.reduced(r, a.cols());
  return AffineSolution{std::move(particular), kernel_basis(a)};
}

inline Subspace subspace_sum(const Subspace& s, const Subspace& t) {
  s.check_same_ambient(t);
  auto generators = s.vectors();
  for (auto& v : t.vectors()) generators.push_back(std::move(v));
  return Subspace::span(s.ambient_dim(), generators);
}

/// Intersection computed from the relations a.S = b.T between the two bases,
/// without going through sums or annihilators.
inline Subspace subspace_intersect(const Subspace& s, const Subspace& t) {
  s.check_same_ambient(t);
  const std::size_t n = s.ambient_dim();
  if (s.is_zero() || t.is_zero()) return Subspace::zero(n);
  Matrix relations(n, s.dim() + t.dim());
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < s.dim(); ++i) relations(j, i) = s.basis()(i, j);
    for (std::size_t i = 0; i < t.dim(); ++i) relations(j, s.dim() + i) = -t.basis()(i, j);
  }
  std::vector<Vector> generators;
  for (const auto& coeffs : kernel_basis(relations).vectors()) {
    Vector v(n);
    for (std::size_t i = 0; i < s.dim(); ++i)
      for (std::size_t j = 0; j < n; ++j) v[j] += coeffs[i] * s.basis()(i, j);
    generators.push_back(std::move(v));
  }
  return Subspace::span(n, generators);
}

/// {u in dual : u(v) = 0 for all v in s}.
inline Subspace annihilator(const Subspace& s) {
  if (s.is_zero()) return Subspace::full(s.ambient_dim());
  return kernel_basis(s.basis());
}

}  // namespace formclass

#endif  // FORMCLASS_SUBSPACE_HPP
