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

#include "modterw/ffmat.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace modterw {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::Malformed: return "Malformed";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::AxiomI: return "AxiomI";
    case Errc::AxiomII: return "AxiomII";
    case Errc::AxiomIII: return "AxiomIII";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::InvalidParameter: return "InvalidParameter";
    case Errc::BasePointOutOfRange: return "BasePointOutOfRange";
    case Errc::NotPPrimeValenced: return "NotPPrimeValenced";
    case Errc::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) {
    return false;
  }
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      return false;
    }
  }
  return true;
}

FieldCtx::FieldCtx(std::uint64_t p) : p_(0) {
  if (p < 2 || p >= (std::uint64_t{1} << 31)) {
    throw Error(Errc::InvalidParameter,
                "modulus must lie in [2, 2^31), got " + std::to_string(p));
  }
  if (!is_prime(p)) {
    throw Error(Errc::NotPrime, std::to_string(p) + " is composite");
  }
  p_ = static_cast<Residue>(p);
}

FieldCtx field_ctx(std::uint64_t p) {
  return FieldCtx(p);
}

Residue FieldCtx::pow(Residue a, std::uint64_t e) const noexcept {
  Residue result = 1 % p_;
  Residue base   = a;
  while (e > 0) {
    if (e & 1U) {
      result = mul(result, base);
    }
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

Residue FieldCtx::inv(Residue a) const {
  if (a % p_ == 0) {
    throw Error(Errc::InvalidParameter, "inverse of zero");
  }
  return pow(a, p_ - 2);
}

// ---------------------------------------------------------------------------
// GfpMatrix
// ---------------------------------------------------------------------------

GfpMatrix::GfpMatrix(std::size_t rows, std::size_t cols,
                     std::vector<Residue> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) {
    throw Error(Errc::DimensionMismatch,
                "entry count " + std::to_string(data_.size()) + " != "
                    + std::to_string(rows) + "x" + std::to_string(cols));
  }
}

GfpMatrix GfpMatrix::identity(std::size_t n) {
  GfpMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = 1;
  }
  return m;
}

GfpMatrix GfpMatrix::from_integers(std::size_t rows, std::size_t cols,
                                   std::span<const std::int64_t> values,
                                   const FieldCtx&               f) {
  std::vector<Residue> e(values.size());
  std::transform(values.begin(), values.end(), e.begin(),
                 [&f](std::int64_t v) { return f.reduce(v); });
  return GfpMatrix(rows, cols, std::move(e));
}

GfpMatrix GfpMatrix::from_flat(std::size_t n, const Vec& flat) {
  return GfpMatrix(n, n, flat);
}

bool GfpMatrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(),
                     [](Residue r) { return r == 0; });
}

GfpMatrix GfpMatrix::transpose() const {
  GfpMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      t(c, r) = (*this)(r, c);
    }
  }
  return t;
}

Vec GfpMatrix::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    v[r] = (*this)(r, c);
  }
  return v;
}

namespace {
void require_same_shape(const GfpMatrix& a, const GfpMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(Errc::DimensionMismatch, "matrix shapes differ");
  }
}
}  // namespace

GfpMatrix multiply(const GfpMatrix& a, const GfpMatrix& b, const FieldCtx& f) {
  if (a.cols() != b.rows()) {
    throw Error(Errc::DimensionMismatch, "inner dimensions differ");
  }
  const std::size_t          n = a.rows(), m = a.cols(), k = b.cols();
  const std::uint64_t        p = f.p();
  std::vector<std::uint64_t> acc(k);
  GfpMatrix                  out(n, k);
  // Accumulate without reduction while the sum provably fits in 64 bits.
  const std::uint64_t max_terms =
      ~std::uint64_t{0} / ((p - 1) * (p - 1) + 1);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    std::size_t pending = 0;
    for (std::size_t t = 0; t < m; ++t) {
      const std::uint64_t x = a(i, t);
      if (x == 0) {
        continue;
      }
      auto brow = b.row(t);
      for (std::size_t j = 0; j < k; ++j) {
        acc[j] += x * brow[j];
      }
      if (++pending + 1 >= max_terms) {
        for (auto& v : acc) {
          v %= p;
        }
        pending = 0;
      }
    }
    for (std::size_t j = 0; j < k; ++j) {
      out(i, j) = static_cast<Residue>(acc[j] % p);
    }
  }
  return out;
}

Vec apply(const GfpMatrix& a, const Vec& v, const FieldCtx& f) {
  if (a.cols() != v.size()) {
    throw Error(Errc::DimensionMismatch, "matrix/vector sizes differ");
  }
  Vec out(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::uint64_t s = 0;
    auto          r = a.row(i);
    for (std::size_t j = 0; j < v.size(); ++j) {
      s = (s + static_cast<std::uint64_t>(r[j]) * v[j]) % f.p();
    }
    out[i] = static_cast<Residue>(s);
  }
  return out;
}

GfpMatrix add(const GfpMatrix& a, const GfpMatrix& b, const FieldCtx& f) {
  require_same_shape(a, b);
  std::vector<Residue> e(a.entries().size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    e[i] = f.add(a.entries()[i], b.entries()[i]);
  }
  return GfpMatrix(a.rows(), a.cols(), std::move(e));
}

GfpMatrix subtract(const GfpMatrix& a, const GfpMatrix& b, const FieldCtx& f) {
  require_same_shape(a, b);
  std::vector<Residue> e(a.entries().size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    e[i] = f.sub(a.entries()[i], b.entries()[i]);
  }
  return GfpMatrix(a.rows(), a.cols(), std::move(e));
}

GfpMatrix scale(const GfpMatrix& a, Residue s, const FieldCtx& f) {
  std::vector<Residue> e(a.entries());
  for (auto& x : e) {
    x = f.mul(x, s);
  }
  return GfpMatrix(a.rows(), a.cols(), std::move(e));
}

Residue trace(const GfpMatrix& a, const FieldCtx& f) {
  Residue t = 0;
  for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) {
    t = f.add(t, a(i, i));
  }
  return t;
}

GfpMatrix rows_to_matrix(std::span<const Vec> rows, std::size_t cols) {
  GfpMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw Error(Errc::DimensionMismatch, "ragged row list");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      m(r, c) = rows[r][c];
    }
  }
  return m;
}

// ---------------------------------------------------------------------------
// Row reduction
// ---------------------------------------------------------------------------

RrefResult rref(const GfpMatrix& m, const FieldCtx& f) {
  RrefResult  res{m, 0, {}};
  GfpMatrix&  a    = res.form;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < a.cols() && lead < a.rows(); ++c) {
    std::size_t piv = lead;
    while (piv < a.rows() && a(piv, c) == 0) {
      ++piv;
    }
    if (piv == a.rows()) {
      continue;
    }
    if (piv != lead) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        std::swap(a(piv, j), a(lead, j));
      }
    }
    const Residue s = f.inv(a(lead, c));
    for (std::size_t j = c; j < a.cols(); ++j) {
      a(lead, j) = f.mul(a(lead, j), s);
    }
    for (std::size_t r = 0; r < a.rows(); ++r) {
      const Residue factor = a(r, c);
      if (r == lead || factor == 0) {
        continue;
      }
      for (std::size_t j = c; j < a.cols(); ++j) {
        a(r, j) = f.sub(a(r, j), f.mul(factor, a(lead, j)));
      }
    }
    res.pivots.push_back(c);
    ++lead;
  }
  res.rank = lead;
  return res;
}

std::size_t rank(const GfpMatrix& m, const FieldCtx& f) {
  return rref(m, f).rank;
}

std::optional<GfpMatrix> inverse(const GfpMatrix& m, const FieldCtx& f) {
  if (m.rows() != m.cols()) {
    throw Error(Errc::DimensionMismatch, "inverse of non-square matrix");
  }
  const std::size_t n = m.rows();
  GfpMatrix         aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      aug(i, j) = m(i, j);
    }
    aug(i, n + i) = 1;
  }
  auto r = rref(aug, f);
  if (r.rank < n || (n > 0 && r.pivots[n - 1] != n - 1)) {
    return std::nullopt;
  }
  GfpMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out(i, j) = r.form(i, n + j);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Vectors
// ---------------------------------------------------------------------------

bool is_zero(const Vec& v) noexcept {
  return std::all_of(v.begin(), v.end(), [](Residue r) { return r == 0; });
}

Vec axpy(const Vec& x, Residue a, const Vec& y, const FieldCtx& f) {
  Vec out(x);
  if (a == 0) {
    return out;
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = f.add(out[i], f.mul(a, y[i]));
  }
  return out;
}

Vec combine(std::span<const Vec> vectors, std::span<const Residue> coeffs,
            std::size_t ambient, const FieldCtx& f) {
  Vec out(ambient, 0);
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    if (coeffs[k] != 0) {
      out = axpy(out, coeffs[k], vectors[k], f);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// EchelonBuilder
// ---------------------------------------------------------------------------

Vec EchelonBuilder::residual(Vec v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Residue c = v[pivot_of_row_[r]];
    if (c != 0) {
      const Vec& row = rows_[r];
      const auto s   = f_.neg(c);
      for (std::size_t j = 0; j < ambient_; ++j) {
        if (row[j] != 0) {
          v[j] = f_.add(v[j], f_.mul(s, row[j]));
        }
      }
    }
  }
  return v;
}

bool EchelonBuilder::contains(const Vec& v) const {
  return is_zero(residual(v));
}

bool EchelonBuilder::insert(Vec v) {
  if (v.size() != ambient_) {
    throw Error(Errc::DimensionMismatch, "vector length differs from ambient");
  }
  v = residual(std::move(v));
  std::size_t piv = 0;
  while (piv < ambient_ && v[piv] == 0) {
    ++piv;
  }
  if (piv == ambient_) {
    return false;
  }
  const Residue s = f_.inv(v[piv]);
  for (auto& x : v) {
    x = f_.mul(x, s);
  }
  for (auto& row : rows_) {
    const Residue c = row[piv];
    if (c != 0) {
      const auto sc = f_.neg(c);
      for (std::size_t j = 0; j < ambient_; ++j) {
        if (v[j] != 0) {
          row[j] = f_.add(row[j], f_.mul(sc, v[j]));
        }
      }
    }
  }
  pivot_row_[piv] = rows_.size();
  pivot_of_row_.push_back(piv);
  rows_.push_back(std::move(v));
  return true;
}

Subspace EchelonBuilder::finish() const {
  Subspace                 s(ambient_);
  std::vector<std::size_t> order(rows_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [this](auto a, auto b) {
    return pivot_of_row_[a] < pivot_of_row_[b];
  });
  for (auto r : order) {
    s.basis_.push_back(rows_[r]);
    s.pivots_.push_back(pivot_of_row_[r]);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Subspace
// ---------------------------------------------------------------------------

Subspace Subspace::span(std::size_t ambient, std::span<const Vec> vectors,
                        const FieldCtx& f) {
  EchelonBuilder b(ambient, f);
  for (const auto& v : vectors) {
    b.insert(v);
  }
  return b.finish();
}

Subspace Subspace::full(std::size_t ambient) {
  Subspace s(ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    Vec e(ambient, 0);
    e[i] = 1;
    s.basis_.push_back(std::move(e));
    s.pivots_.push_back(i);
  }
  return s;
}

std::optional<Vec> Subspace::coordinates(const Vec& v, const FieldCtx& f) const {
  if (v.size() != ambient_) {
    throw Error(Errc::DimensionMismatch, "vector length differs from ambient");
  }
  Vec coords(basis_.size());
  Vec rest(v);
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    coords[k] = v[pivots_[k]];
    rest      = axpy(rest, f.neg(coords[k]), basis_[k], f);
  }
  if (!modterw::is_zero(rest)) {
    return std::nullopt;
  }
  return coords;
}

bool Subspace::contains(const Vec& v, const FieldCtx& f) const {
  return coordinates(v, f).has_value();
}

Subspace kernel(const GfpMatrix& m, const FieldCtx& f) {
  auto                     r = rref(m, f);
  std::vector<bool>        is_pivot(m.cols(), false);
  for (auto c : r.pivots) {
    is_pivot[c] = true;
  }
  std::vector<Vec> vecs;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) {
      continue;
    }
    Vec v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t k = 0; k < r.rank; ++k) {
      v[r.pivots[k]] = f.neg(r.form(k, free));
    }
    vecs.push_back(std::move(v));
  }
  return Subspace::span(m.cols(), vecs, f);
}

bool member(const Subspace& s, const Vec& v, const FieldCtx& f) {
  return s.contains(v, f);
}

namespace {
void require_same_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw Error(Errc::DimensionMismatch,
                "ambient dimensions " + std::to_string(a.ambient_dim())
                    + " and " + std::to_string(b.ambient_dim()));
  }
}
}  // namespace

Subspace sum(const Subspace& a, const Subspace& b, const FieldCtx& f) {
  require_same_ambient(a, b);
  EchelonBuilder e(a.ambient_dim(), f);
  for (const auto& v : a.basis()) {
    e.insert(v);
  }
  for (const auto& v : b.basis()) {
    e.insert(v);
  }
  return e.finish();
}

Subspace intersect(const Subspace& a, const Subspace& b, const FieldCtx& f) {
  require_same_ambient(a, b);
  const std::size_t n = a.ambient_dim(), da = a.dim(), db = b.dim();
  // Columns are the basis vectors of a followed by those of b; a kernel
  // vector (alpha, beta) gives sum alpha_i a_i = -sum beta_j b_j.
  GfpMatrix m(n, da + db);
  for (std::size_t k = 0; k < da; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      m(i, k) = a.basis()[k][i];
    }
  }
  for (std::size_t k = 0; k < db; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      m(i, da + k) = b.basis()[k][i];
    }
  }
  auto             ker = kernel(m, f);
  std::vector<Vec> vecs;
  for (const auto& kv : ker.basis()) {
    std::span<const Residue> alpha(kv.data(), da);
    vecs.push_back(combine(a.basis(), alpha, n, f));
  }
  return Subspace::span(n, vecs, f);
}

bool equal(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  return a == b;
}

bool is_subspace_of(const Subspace& a, const Subspace& b, const FieldCtx& f) {
  require_same_ambient(a, b);
  return std::all_of(a.basis().begin(), a.basis().end(),
                     [&](const Vec& v) { return b.contains(v, f); });
}

}  // namespace modterw
