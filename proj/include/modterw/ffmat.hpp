// Copyright 2026 The modterw Authors
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

// Dense linear algebra over a prime field GF(p).
//
// Matrices and vectors hold residues in [0, p) but do not carry the modulus;
// every operation that does arithmetic takes the FieldCtx explicitly.
// Subspaces are always kept in reduced row-echelon form so that equality is
// a plain comparison of bases.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "modterw/error.hpp"

namespace modterw {

using Residue = std::uint32_t;
using Vec     = std::vector<Residue>;

class FieldCtx {
 public:
  /// Throws NotPrime for composite p and InvalidParameter for p < 2 or
  /// p >= 2^31.
  explicit FieldCtx(std::uint64_t p);

  [[nodiscard]] Residue p() const noexcept { return p_; }

  [[nodiscard]] Residue reduce(std::int64_t v) const noexcept {
    auto r = v % static_cast<std::int64_t>(p_);
    return static_cast<Residue>(r < 0 ? r + p_ : r);
  }
  [[nodiscard]] Residue add(Residue a, Residue b) const noexcept {
    Residue s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  [[nodiscard]] Residue sub(Residue a, Residue b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
  }
  [[nodiscard]] Residue neg(Residue a) const noexcept {
    return a == 0 ? 0 : p_ - a;
  }
  [[nodiscard]] Residue mul(Residue a, Residue b) const noexcept {
    return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % p_);
  }
  /// Throws InvalidParameter on zero.
  [[nodiscard]] Residue inv(Residue a) const;
  [[nodiscard]] Residue pow(Residue a, std::uint64_t e) const noexcept;

  friend bool operator==(const FieldCtx&, const FieldCtx&) = default;

 private:
  Residue p_;
};

FieldCtx field_ctx(std::uint64_t p);
bool     is_prime(std::uint64_t n) noexcept;

class GfpMatrix {
 public:
  GfpMatrix() = default;
  GfpMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  /// `entries` is row-major and must already be reduced.
  GfpMatrix(std::size_t rows, std::size_t cols, std::vector<Residue> entries);

  static GfpMatrix identity(std::size_t n);
  static GfpMatrix from_integers(std::size_t                     rows,
                                 std::size_t                     cols,
                                 std::span<const std::int64_t>   values,
                                 const FieldCtx&                 f);
  /// Interprets a flattened n*n vector as an n x n matrix.
  static GfpMatrix from_flat(std::size_t n, const Vec& flat);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

  Residue& operator()(std::size_t r, std::size_t c) noexcept {
    return data_[r * cols_ + c];
  }
  Residue operator()(std::size_t r, std::size_t c) const noexcept {
    return data_[r * cols_ + c];
  }

  [[nodiscard]] std::span<const Residue> row(std::size_t r) const noexcept {
    return {data_.data() + r * cols_, cols_};
  }
  [[nodiscard]] const std::vector<Residue>& entries() const noexcept {
    return data_;
  }
  [[nodiscard]] bool is_zero() const noexcept;
  [[nodiscard]] GfpMatrix transpose() const;
  /// Column vector of the given index.
  [[nodiscard]] Vec column(std::size_t c) const;

  friend bool operator==(const GfpMatrix&, const GfpMatrix&) = default;

 private:
  std::size_t          rows_ = 0;
  std::size_t          cols_ = 0;
  std::vector<Residue> data_;
};

GfpMatrix multiply(const GfpMatrix& a, const GfpMatrix& b, const FieldCtx& f);
Vec       apply(const GfpMatrix& a, const Vec& v, const FieldCtx& f);
GfpMatrix add(const GfpMatrix& a, const GfpMatrix& b, const FieldCtx& f);
GfpMatrix subtract(const GfpMatrix& a, const GfpMatrix& b, const FieldCtx& f);
GfpMatrix scale(const GfpMatrix& a, Residue s, const FieldCtx& f);
Residue   trace(const GfpMatrix& a, const FieldCtx& f);

/// Stacks the given vectors as the rows of a matrix.
GfpMatrix rows_to_matrix(std::span<const Vec> rows, std::size_t cols);

struct RrefResult {
  GfpMatrix                form;
  std::size_t              rank = 0;
  std::vector<std::size_t> pivots;
};

RrefResult  rref(const GfpMatrix& m, const FieldCtx& f);
std::size_t rank(const GfpMatrix& m, const FieldCtx& f);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<GfpMatrix> inverse(const GfpMatrix& m, const FieldCtx& f);

class Subspace {
 public:
  Subspace() = default;
  /// The zero subspace of GF(p)^ambient.
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

  static Subspace span(std::size_t          ambient,
                       std::span<const Vec> vectors,
                       const FieldCtx&      f);
  static Subspace full(std::size_t ambient);

  [[nodiscard]] std::size_t ambient_dim() const noexcept { return ambient_; }
  [[nodiscard]] std::size_t dim() const noexcept { return basis_.size(); }
  [[nodiscard]] bool        is_zero() const noexcept { return basis_.empty(); }
  [[nodiscard]] const std::vector<Vec>& basis() const noexcept {
    return basis_;
  }
  [[nodiscard]] const std::vector<std::size_t>& pivots() const noexcept {
    return pivots_;
  }

  /// Coordinates of v with respect to basis(), or nullopt if v is outside.
  [[nodiscard]] std::optional<Vec> coordinates(const Vec&      v,
                                               const FieldCtx& f) const;
  [[nodiscard]] bool contains(const Vec& v, const FieldCtx& f) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  friend class EchelonBuilder;

  std::size_t              ambient_ = 0;
  std::vector<Vec>         basis_;
  std::vector<std::size_t> pivots_;
};

Subspace kernel(const GfpMatrix& m, const FieldCtx& f);
bool     member(const Subspace& s, const Vec& v, const FieldCtx& f);
Subspace sum(const Subspace& a, const Subspace& b, const FieldCtx& f);
Subspace intersect(const Subspace& a, const Subspace& b, const FieldCtx& f);
bool     equal(const Subspace& a, const Subspace& b);
/// True when every basis vector of a lies in b.
bool is_subspace_of(const Subspace& a, const Subspace& b, const FieldCtx& f);

/// Incrementally maintained reduced row-echelon basis.
class EchelonBuilder {
 public:
  EchelonBuilder(std::size_t ambient, const FieldCtx& f)
      : ambient_(ambient), f_(f), pivot_row_(ambient, kNone) {}

  /// Adds v to the span; returns true when the dimension grew.
  bool insert(Vec v);
  /// v minus its projection onto the current span along the pivots.
  [[nodiscard]] Vec  residual(Vec v) const;
  [[nodiscard]] bool contains(const Vec& v) const;

  [[nodiscard]] std::size_t dim() const noexcept { return rows_.size(); }
  [[nodiscard]] std::size_t ambient_dim() const noexcept { return ambient_; }
  [[nodiscard]] Subspace    finish() const;

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  std::size_t              ambient_;
  FieldCtx                 f_;
  std::vector<Vec>         rows_;
  std::vector<std::size_t> pivot_of_row_;
  std::vector<std::size_t> pivot_row_;
};

// Helpers for vectors.
bool is_zero(const Vec& v) noexcept;
Vec  axpy(const Vec& x, Residue a, const Vec& y, const FieldCtx& f);  // x + a*y
Vec  combine(std::span<const Vec> vectors,
             std::span<const Residue> coeffs,
             std::size_t              ambient,
             const FieldCtx&          f);

}  // namespace modterw
