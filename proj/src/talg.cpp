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

#include "modterw/talg.hpp"

#include <deque>
#include <string>

namespace modterw {

Vec flatten(const GfpMatrix& m) {
  return m.entries();
}

GfpMatrix unflatten(std::size_t n, const Vec& v) {
  return GfpMatrix(n, n, v);
}

const GfpMatrix& TalgContext::generator(std::size_t g) const {
  if (g >= generator_count()) {
    throw Error(Errc::IndexOutOfRange, "generator " + std::to_string(g));
  }
  return g < rank() ? A_[g] : E_[g - rank()];
}

std::size_t TalgContext::transpose_of(std::size_t g) const {
  if (g >= generator_count()) {
    throw Error(Errc::IndexOutOfRange, "generator " + std::to_string(g));
  }
  return g < rank() ? scheme_->converse(g) : g;
}

GfpMatrix TalgContext::ejE(std::size_t i, std::size_t j) const {
  // (E_i* J E_j*)(y, z) = 1 iff y in xR_i and z in xR_j.
  GfpMatrix m(n(), n());
  for (std::size_t y = 0; y < n(); ++y) {
    if (shells_.at(i)[y] == 0) {
      continue;
    }
    for (std::size_t z = 0; z < n(); ++z) {
      m(y, z) = shells_.at(j)[z];
    }
  }
  return m;
}

TalgContext build_context(const SchemeData& s, const FieldCtx& f,
                          std::size_t x) {
  if (x >= s.n()) {
    throw Error(Errc::BasePointOutOfRange,
                "base point " + std::to_string(x) + " with n = "
                    + std::to_string(s.n()));
  }
  const std::size_t n = s.n(), r = s.rank();
  TalgContext       ctx(f);
  ctx.scheme_ = std::make_shared<const SchemeData>(s);
  ctx.x_      = x;
  ctx.A_.assign(r, GfpMatrix(n, n));
  ctx.E_.assign(r, GfpMatrix(n, n));
  ctx.shells_.assign(r, Vec(n, 0));
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t z = 0; z < n; ++z) {
      ctx.A_[s.relation(y, z)](y, z) = 1 % f.p();
    }
    const auto i       = s.relation(x, y);
    ctx.E_[i](y, y)    = 1 % f.p();
    ctx.shells_[i][y]  = 1 % f.p();
  }
  ctx.ones_ = Vec(n, 1 % f.p());
  ctx.J_    = GfpMatrix(n, n, std::vector<Residue>(n * n, 1 % f.p()));

  // Identities every later computation relies on.
  const auto I    = GfpMatrix::identity(n);
  GfpMatrix  sumE(n, n), sumA(n, n);
  for (std::size_t i = 0; i < r; ++i) {
    ensure(ctx.A_[i].transpose() == ctx.A_[s.converse(i)], "A_i^t != A_i'");
    ensure(ctx.E_[i].transpose() == ctx.E_[i], "E_i*^t != E_i*");
    sumE = add(sumE, ctx.E_[i], f);
    sumA = add(sumA, ctx.A_[i], f);
    for (std::size_t j = 0; j < r; ++j) {
      const auto prod = multiply(ctx.E_[i], ctx.E_[j], f);
      ensure(prod == (i == j ? ctx.E_[i] : GfpMatrix(n, n)),
             "E_i* E_j* != delta_ij E_i*");
      ensure(!multiply(multiply(ctx.E_[i], ctx.J_, f), ctx.E_[j], f).is_zero(),
             "E_i* J E_j* = O");
    }
    const auto jei = apply(ctx.J_, ctx.shells_[i], f);
    ensure(jei == Vec(n, f.reduce(static_cast<std::int64_t>(s.valency(i)))),
           "J E_i* 1 != k_i 1");
  }
  ensure(ctx.A_[0] == I && sumE == I, "A_0 = I = sum E_i* fails");
  ensure(sumA == ctx.J_, "sum A_i != J");
  return ctx;
}

GfpMatrix triple_product(const TalgContext& ctx, std::size_t i, std::size_t j,
                         std::size_t l) {
  if (i >= ctx.rank() || j >= ctx.rank() || l >= ctx.rank()) {
    throw Error(Errc::IndexOutOfRange, "triple product index");
  }
  const auto& f = ctx.field();
  return multiply(multiply(ctx.E(i), ctx.A(j), f), ctx.E(l), f);
}

// ---------------------------------------------------------------------------
// AlgebraBasis
// ---------------------------------------------------------------------------

namespace {

bool span_closed_under_product(const AlgebraBasis& a, const FieldCtx& f) {
  for (const auto& x : a.elements) {
    for (const auto& y : a.elements) {
      if (!a.contains(multiply(x, y, f), f)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

AlgebraBasis AlgebraBasis::from_subspace(std::size_t n, Subspace s,
                                         const FieldCtx& f) {
  if (s.ambient_dim() != n * n) {
    throw Error(Errc::DimensionMismatch, "subspace is not of n x n matrices");
  }
  AlgebraBasis a;
  a.n     = n;
  a.space = std::move(s);
  for (const auto& v : a.space.basis()) {
    a.elements.push_back(unflatten(n, v));
  }
  a.closed_under_product = span_closed_under_product(a, f);
  a.contains_identity    = a.contains(GfpMatrix::identity(n), f);
  return a;
}

AlgebraBasis AlgebraBasis::from_matrices(std::size_t                n,
                                         std::span<const GfpMatrix> mats,
                                         const FieldCtx&            f) {
  std::vector<Vec> vecs;
  for (const auto& m : mats) {
    vecs.push_back(flatten(m));
  }
  return from_subspace(n, Subspace::span(n * n, vecs, f), f);
}

AlgebraBasis generate_algebra(const TalgContext& ctx) {
  const auto&           f = ctx.field();
  const std::size_t     n = ctx.n();
  EchelonBuilder        b(n * n, f);
  std::deque<GfpMatrix> pending;
  auto push = [&](GfpMatrix m) {
    if (b.insert(flatten(m))) {
      pending.push_back(std::move(m));
    }
  };
  push(GfpMatrix::identity(n));
  for (std::size_t g = 0; g < ctx.generator_count(); ++g) {
    push(ctx.generator(g));
  }
  // Each new basis element is multiplied by every generator on the left,
  // then on the right; the span grows until nothing new appears.
  while (!pending.empty()) {
    GfpMatrix w = std::move(pending.front());
    pending.pop_front();
    for (std::size_t g = 0; g < ctx.generator_count(); ++g) {
      push(multiply(ctx.generator(g), w, f));
    }
    for (std::size_t g = 0; g < ctx.generator_count(); ++g) {
      push(multiply(w, ctx.generator(g), f));
    }
  }
  AlgebraBasis T;
  T.n     = n;
  T.space = b.finish();
  for (const auto& v : T.space.basis()) {
    T.elements.push_back(unflatten(n, v));
  }
  // Closure under the generators on both sides is closure under product.
  for (const auto& e : T.elements) {
    for (std::size_t g = 0; g < ctx.generator_count(); ++g) {
      ensure(T.contains(multiply(ctx.generator(g), e, f), f)
                 && T.contains(multiply(e, ctx.generator(g), f), f),
             "algebra closure incomplete");
    }
  }
  T.closed_under_product = true;
  T.contains_identity    = T.contains(GfpMatrix::identity(n), f);
  ensure(T.contains_identity, "T lacks the identity");
  return T;
}

bool is_two_sided_ideal(const AlgebraBasis& algebra, const Subspace& ideal,
                        const FieldCtx& f) {
  const std::size_t n = algebra.n;
  for (const auto& v : ideal.basis()) {
    const auto z = unflatten(n, v);
    for (const auto& t : algebra.elements) {
      if (!ideal.contains(flatten(multiply(t, z, f)), f)
          || !ideal.contains(flatten(multiply(z, t, f)), f)) {
        return false;
      }
    }
  }
  return true;
}

Subspace product_space(std::size_t n, const Subspace& X, const Subspace& Y,
                       const FieldCtx& f) {
  EchelonBuilder b(n * n, f);
  for (const auto& xv : X.basis()) {
    const auto xm = unflatten(n, xv);
    for (const auto& yv : Y.basis()) {
      b.insert(flatten(multiply(xm, unflatten(n, yv), f)));
    }
  }
  return b.finish();
}

std::pair<AlgebraBasis, AlgebraBasis> b0_b1(const TalgContext&  ctx,
                                            const AlgebraBasis& T) {
  const auto&            f = ctx.field();
  const auto&            s = ctx.scheme();
  std::vector<GfpMatrix> all, divisible;
  for (std::size_t i = 0; i < ctx.rank(); ++i) {
    for (std::size_t j = 0; j < ctx.rank(); ++j) {
      auto m = ctx.ejE(i, j);
      if ((s.valency(i) * s.valency(j)) % f.p() == 0) {
        divisible.push_back(m);
      }
      all.push_back(std::move(m));
    }
  }
  auto B0 = AlgebraBasis::from_matrices(ctx.n(), all, f);
  auto B1 = AlgebraBasis::from_matrices(ctx.n(), divisible, f);
  ensure(B0.dim() == all.size(), "E_i* J E_j* are not independent");
  ensure(B1.dim() == divisible.size(), "B1 spanning set is not independent");
  for (const auto& m : all) {
    ensure(T.contains(m, f), "B0 not inside T");
  }
  ensure(is_two_sided_ideal(T, B0.space, f), "B0 is not an ideal of T");
  ensure(is_two_sided_ideal(T, B1.space, f), "B1 is not an ideal of T");
  return {std::move(B0), std::move(B1)};
}

GfpMatrix b0_identity(const TalgContext& ctx, const AlgebraBasis& T,
                      const AlgebraBasis& B0) {
  const auto& f = ctx.field();
  const auto& s = ctx.scheme();
  GfpMatrix   e(ctx.n(), ctx.n());
  for (std::size_t i = 0; i < ctx.rank(); ++i) {
    const auto k = f.reduce(static_cast<std::int64_t>(s.valency(i)));
    if (k == 0) {
      throw Error(Errc::NotPPrimeValenced,
                  "p = " + std::to_string(f.p()) + " divides k_"
                      + std::to_string(i) + " = "
                      + std::to_string(s.valency(i)));
    }
    e = add(e, scale(ctx.ejE(i, i), f.inv(k), f), f);
  }
  for (const auto& b : B0.elements) {
    ensure(multiply(e, b, f) == b && multiply(b, e, f) == b,
           "e_B0 is not the identity of B0");
  }
  for (const auto& t : T.elements) {
    ensure(multiply(e, t, f) == multiply(t, e, f), "e_B0 is not central in T");
  }
  return e;
}

Subspace annihilator_w0(const TalgContext& ctx, const AlgebraBasis& T) {
  const auto&       f = ctx.field();
  const std::size_t n = ctx.n(), r = ctx.rank();
  // Column k holds (Z_k E_0* 1, ..., Z_d* 1) for the k-th basis element.
  GfpMatrix images(n * r, T.dim());
  for (std::size_t k = 0; k < T.dim(); ++k) {
    for (std::size_t h = 0; h < r; ++h) {
      const auto img = apply(T.elements[k], ctx.shell(h), f);
      for (std::size_t y = 0; y < n; ++y) {
        images(h * n + y, k) = img[y];
      }
    }
  }
  const auto       ker = kernel(images, f);
  std::vector<Vec> vecs;
  for (const auto& c : ker.basis()) {
    vecs.push_back(combine(T.space.basis(), c, n * n, f));
  }
  auto ann = Subspace::span(n * n, vecs, f);
  ensure(is_two_sided_ideal(T, ann, f), "Ann_T(W_0) is not an ideal");
  return ann;
}

}  // namespace modterw
