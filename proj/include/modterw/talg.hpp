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

// The modular Terwilliger algebra T(x) of a scheme over GF(p), and the
// ideals of T(x) that the analysis needs: B0, B1, the Jacobson radical and
// the annihilator of the primary module.

#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "modterw/ffmat.hpp"
#include "modterw/scheme.hpp"

namespace modterw {

Vec       flatten(const GfpMatrix& m);
GfpMatrix unflatten(std::size_t n, const Vec& v);

/// Adjacency matrices A_i and dual idempotents E_i* for one base point.
///
/// Generators are indexed 0..d for A_0..A_d and d+1..2d+1 for
/// E_0*..E_d*; transpose_of() maps a generator to the index of its
/// transpose (A_i -> A_{i'}, E_i* -> E_i*).
class TalgContext {
 public:
  [[nodiscard]] const SchemeData& scheme() const noexcept { return *scheme_; }
  [[nodiscard]] const FieldCtx&   field() const noexcept { return field_; }
  [[nodiscard]] std::size_t       base_point() const noexcept { return x_; }
  [[nodiscard]] std::size_t       n() const noexcept { return scheme_->n(); }
  [[nodiscard]] std::size_t       rank() const noexcept {
    return scheme_->rank();
  }

  [[nodiscard]] const GfpMatrix& A(std::size_t i) const { return A_.at(i); }
  [[nodiscard]] const GfpMatrix& E(std::size_t i) const { return E_.at(i); }
  [[nodiscard]] const GfpMatrix& J() const noexcept { return J_; }
  [[nodiscard]] const Vec&       ones() const noexcept { return ones_; }
  /// E_i* 1, the indicator vector of the i-th subconstituent of x.
  [[nodiscard]] const Vec& shell(std::size_t i) const { return shells_.at(i); }

  [[nodiscard]] std::size_t generator_count() const noexcept {
    return 2 * rank();
  }
  [[nodiscard]] const GfpMatrix& generator(std::size_t g) const;
  [[nodiscard]] std::size_t      transpose_of(std::size_t g) const;

  /// E_i* J E_j*.
  [[nodiscard]] GfpMatrix ejE(std::size_t i, std::size_t j) const;

 private:
  friend TalgContext build_context(const SchemeData&, const FieldCtx&,
                                   std::size_t);

  explicit TalgContext(const FieldCtx& f) : field_(f) {}

  std::shared_ptr<const SchemeData> scheme_;
  FieldCtx                          field_;
  std::size_t                       x_ = 0;
  std::vector<GfpMatrix>            A_;
  std::vector<GfpMatrix>            E_;
  GfpMatrix                         J_;
  Vec                               ones_;
  std::vector<Vec>                  shells_;
};

/// Builds all matrices and asserts the basic identities between them.
/// Throws BasePointOutOfRange.
TalgContext build_context(const SchemeData& s, const FieldCtx& f,
                          std::size_t x);

/// E_i* A_j E_l*. Throws IndexOutOfRange.
GfpMatrix triple_product(const TalgContext& ctx, std::size_t i, std::size_t j,
                         std::size_t l);

/// A subspace of n x n matrices, stored flattened, with the matrices of its
/// echelon basis kept alongside.
struct AlgebraBasis {
  std::size_t            n = 0;
  Subspace               space;
  std::vector<GfpMatrix> elements;
  bool                   closed_under_product = false;
  bool                   contains_identity    = false;

  [[nodiscard]] std::size_t dim() const noexcept { return elements.size(); }
  [[nodiscard]] bool contains(const GfpMatrix& m, const FieldCtx& f) const {
    return space.contains(flatten(m), f);
  }

  /// Span of the given matrices; flags are computed, not assumed.
  static AlgebraBasis from_matrices(std::size_t                n,
                                    std::span<const GfpMatrix> mats,
                                    const FieldCtx&            f);
  static AlgebraBasis from_subspace(std::size_t n, Subspace s,
                                    const FieldCtx& f);
};

/// Smallest unital subalgebra containing all A_i and E_i*.
AlgebraBasis generate_algebra(const TalgContext& ctx);

/// B0 = span{E_i* J E_j*} and B1 = span{E_i* J E_j* : p | k_i k_j}; both
/// are checked to be two-sided ideals of T.
std::pair<AlgebraBasis, AlgebraBasis> b0_b1(const TalgContext&  ctx,
                                            const AlgebraBasis& T);

/// sum_i (k_i mod p)^{-1} E_i* J E_i*, checked to be the identity of B0 and
/// central in T. Throws NotPPrimeValenced when some p | k_i.
GfpMatrix b0_identity(const TalgContext& ctx, const AlgebraBasis& T,
                      const AlgebraBasis& B0);

/// {Z in T : Z E_i* 1 = 0 for all i}.
Subspace annihilator_w0(const TalgContext& ctx, const AlgebraBasis& T);

/// True if every product of an element of `ideal` with an element of
/// `algebra` (on either side) lies in `ideal`.
bool is_two_sided_ideal(const AlgebraBasis& algebra, const Subspace& ideal,
                        const FieldCtx& f);

/// span{a b : a in X, b in Y} for subspaces of n x n matrices.
Subspace product_space(std::size_t n, const Subspace& X, const Subspace& Y,
                       const FieldCtx& f);

// ---------------------------------------------------------------------------
// Jacobson radical
// ---------------------------------------------------------------------------

struct RadicalDiagnostics {
  std::size_t stages          = 0;  // trace-form stages run
  std::size_t nilpotency      = 0;  // least m with Rad^m = 0
  std::size_t graded_levels   = 0;  // length of V > Rad V > ... > 0
  std::size_t quotient_dim    = 0;  // dim A / Rad
};

/// The radical of a matrix algebra closed under product, by the trace-form
/// iteration over successive p-power stages. Every call runs
/// check_radical() on the result.
Subspace radical(const AlgebraBasis& A, const FieldCtx& f,
                 RadicalDiagnostics* diag = nullptr);

/// The iteration alone, without postconditions.
Subspace radical_unchecked(const AlgebraBasis& A, const FieldCtx& f,
                           std::size_t* stages = nullptr);

/// Throws InternalInconsistency unless R is a two-sided ideal of A, is
/// nilpotent, and the algebra induced by A on the graded module
/// V/RV + RV/R^2V + ... has dimension dim A - dim R and zero radical.
void check_radical(const AlgebraBasis& A, const Subspace& R, const FieldCtx& f,
                   RadicalDiagnostics* diag = nullptr);

}  // namespace modterw
