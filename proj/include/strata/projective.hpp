#pragma once

// Points of P^n in canonical scaling and invertible (n+1)x(n+1) matrices
// acting on them.

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "strata/error.hpp"
#include "strata/field.hpp"

namespace strata {

template <FieldScalar K>
class ProjectivePoint {
 public:
  /// Scale so the first nonzero coordinate is 1.
  static ProjectivePoint normalize(std::vector<K> raw) {
    if (raw.empty()) throw Error(ErrorCode::AllZero, "pt_normalize");
    const FieldSpec spec = raw.front().spec();
    for (const K& c : raw) require_same_field(spec, c.spec(), "pt_normalize");
    auto pivot = std::find_if(raw.begin(), raw.end(),
                              [](const K& c) { return !c.is_zero(); });
    if (pivot == raw.end()) throw Error(ErrorCode::AllZero, "pt_normalize");
    if (!pivot->is_one()) {
      const K inv = pivot->inv();
      for (K& c : raw) c = c * inv;
    }
    return ProjectivePoint(spec, std::move(raw));
  }

  /// The coordinate point e_index of P^n.
  static ProjectivePoint standard(const FieldSpec& spec, std::size_t n,
                                  std::size_t index) {
    std::vector<K> coords(n + 1, K::zero(spec));
    coords.at(index) = K::one(spec);
    return ProjectivePoint(spec, std::move(coords));
  }

  const FieldSpec& spec() const { return spec_; }
  std::size_t dimension() const { return coords_.size() - 1; }
  const std::vector<K>& coords() const { return coords_; }
  const K& operator[](std::size_t i) const { return coords_[i]; }

  /// Index of the first nonzero coordinate (which is 1).
  std::size_t pivot() const {
    std::size_t i = 0;
    while (coords_[i].is_zero()) ++i;
    return i;
  }

  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
    return a.spec_ == b.spec_ && a.coords_ == b.coords_;
  }

 private:
  ProjectivePoint(FieldSpec spec, std::vector<K> coords)
      : spec_(spec), coords_(std::move(coords)) {}

  FieldSpec spec_;
  std::vector<K> coords_;
};

template <FieldScalar K>
using Matrix = std::vector<std::vector<K>>;

/// Fraction-free (Bareiss) elimination; every division is exact.
template <FieldScalar K>
K determinant(Matrix<K> m, const FieldSpec& spec) {
  const std::size_t n = m.size();
  if (n == 0) return K::one(spec);
  bool negate = false;
  K prev = K::one(spec);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return K::zero(spec);
      std::swap(m[k], m[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

template <FieldScalar K>
class ProjLinearMap {
 public:
  static ProjLinearMap from_matrix(const FieldSpec& spec, Matrix<K> matrix) {
    const std::size_t n = matrix.size();
    if (n == 0) throw Error(ErrorCode::DimensionMismatch, "proj_linear_map");
    for (const auto& row : matrix) {
      if (row.size() != n) {
        throw Error(ErrorCode::DimensionMismatch, "proj_linear_map",
                    "matrix is not square");
      }
      for (const K& c : row) require_same_field(spec, c.spec(), "proj_linear_map");
    }
    if (determinant(matrix, spec).is_zero()) {
      throw Error(ErrorCode::SingularMatrix, "proj_linear_map");
    }
    return ProjLinearMap(spec, std::move(matrix));
  }

  static ProjLinearMap identity(const FieldSpec& spec, std::size_t size) {
    Matrix<K> m(size, std::vector<K>(size, K::zero(spec)));
    for (std::size_t i = 0; i < size; ++i) m[i][i] = K::one(spec);
    return ProjLinearMap(spec, std::move(m));
  }

  /// Permutation matrix exchanging coordinates i and j.
  static ProjLinearMap swap(const FieldSpec& spec, std::size_t size,
                            std::size_t i, std::size_t j) {
    auto out = identity(spec, size);
    std::swap(out.matrix_[i], out.matrix_[j]);
    return out;
  }

  const FieldSpec& spec() const { return spec_; }
  std::size_t size() const { return matrix_.size(); }
  const Matrix<K>& matrix() const { return matrix_; }
  const K& operator()(std::size_t i, std::size_t j) const { return matrix_[i][j]; }

  ProjLinearMap inverse() const {
    const std::size_t n = size();
    Matrix<K> a = matrix_;
    Matrix<K> inv = identity(spec_, n).matrix_;
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t piv = col;
      while (a[piv][col].is_zero()) ++piv;
      std::swap(a[piv], a[col]);
      std::swap(inv[piv], inv[col]);
      const K scale_by = a[col][col].inv();
      for (std::size_t j = 0; j < n; ++j) {
        a[col][j] = a[col][j] * scale_by;
        inv[col][j] = inv[col][j] * scale_by;
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (i == col || a[i][col].is_zero()) continue;
        const K factor = a[i][col];
        for (std::size_t j = 0; j < n; ++j) {
          a[i][j] = a[i][j] - factor * a[col][j];
          inv[i][j] = inv[i][j] - factor * inv[col][j];
        }
      }
    }
    return ProjLinearMap(spec_, std::move(inv));
  }

  friend ProjLinearMap operator*(const ProjLinearMap& a, const ProjLinearMap& b) {
    require_same_field(a.spec_, b.spec_, "proj_linear_map");
    if (a.size() != b.size()) {
      throw Error(ErrorCode::DimensionMismatch, "proj_linear_map");
    }
    const std::size_t n = a.size();
    Matrix<K> out(n, std::vector<K>(n, K::zero(a.spec_)));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        if (a.matrix_[i][k].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
          out[i][j] = out[i][j] + a.matrix_[i][k] * b.matrix_[k][j];
        }
      }
    }
    return ProjLinearMap(a.spec_, std::move(out));
  }

  friend bool operator==(const ProjLinearMap& a, const ProjLinearMap& b) {
    return a.spec_ == b.spec_ && a.matrix_ == b.matrix_;
  }

 private:
  ProjLinearMap(FieldSpec spec, Matrix<K> matrix)
      : spec_(spec), matrix_(std::move(matrix)) {}

  FieldSpec spec_;
  Matrix<K> matrix_;
};

template <FieldScalar K>
ProjectivePoint<K> map_apply(const ProjLinearMap<K>& a,
                             const ProjectivePoint<K>& x) {
  require_same_field(a.spec(), x.spec(), "map_apply");
  if (a.size() != x.coords().size()) {
    throw Error(ErrorCode::DimensionMismatch, "map_apply",
                "map on P^" + std::to_string(a.size() - 1) + ", point in P^" +
                    std::to_string(x.dimension()));
  }
  std::vector<K> out(a.size(), K::zero(a.spec()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      out[i] = out[i] + a(i, j) * x[j];
    }
  }
  return ProjectivePoint<K>::normalize(std::move(out));
}

/// The map sending p to (1:0:...:0): swap the pivot coordinate into slot 0,
/// then clear the remaining entries with row operations x_i -= p_i x_0.
template <FieldScalar K>
ProjLinearMap<K> move_to_e0(const ProjectivePoint<K>& p) {
  const FieldSpec& spec = p.spec();
  const std::size_t size = p.coords().size();
  const std::size_t pivot = p.pivot();
  auto perm = ProjLinearMap<K>::swap(spec, size, 0, pivot);
  std::vector<K> moved = p.coords();
  std::swap(moved[0], moved[pivot]);

  Matrix<K> clear = ProjLinearMap<K>::identity(spec, size).matrix();
  for (std::size_t i = 1; i < size; ++i) clear[i][0] = -moved[i];
  return ProjLinearMap<K>::from_matrix(spec, std::move(clear)) * perm;
}

}  // namespace strata
