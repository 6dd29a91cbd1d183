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

#include "modterw/characterize.hpp"

#include <set>
#include <string>
#include <utility>

namespace modterw {

std::optional<GfpMatrix> algebra_identity(const AlgebraBasis& B,
                                          const FieldCtx&     f) {
  const std::size_t n = B.n, m = B.dim(), nn = n * n;
  if (m == 0) {
    return std::nullopt;
  }
  // Unknowns c_0..c_{m-1}; e = sum c_c B_c with e B_k = B_k = B_k e.
  GfpMatrix sys(2 * m * nn, m + 1);
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t c = 0; c < m; ++c) {
      const auto left  = multiply(B.elements[c], B.elements[k], f);
      const auto right = multiply(B.elements[k], B.elements[c], f);
      for (std::size_t t = 0; t < nn; ++t) {
        sys((2 * k) * nn + t, c)     = left.entries()[t];
        sys((2 * k + 1) * nn + t, c) = right.entries()[t];
      }
    }
    for (std::size_t t = 0; t < nn; ++t) {
      sys((2 * k) * nn + t, m)     = B.elements[k].entries()[t];
      sys((2 * k + 1) * nn + t, m) = B.elements[k].entries()[t];
    }
  }
  const auto r = rref(sys, f);
  if (!r.pivots.empty() && r.pivots.back() == m) {
    return std::nullopt;
  }
  // An identity is unique, so every unknown is a pivot.
  ensure(r.rank == m, "identity of an algebra is not unique");
  GfpMatrix e(n, n);
  for (std::size_t row = 0; row < r.rank; ++row) {
    e = add(e, scale(B.elements[r.pivots[row]], r.form(row, m), f), f);
  }
  return e;
}

Subspace two_sided_annihilator(const AlgebraBasis& T, const AlgebraBasis& B,
                               const FieldCtx& f) {
  const std::size_t n = T.n, nn = n * n, m = B.dim();
  GfpMatrix         sys(2 * m * nn, T.dim());
  for (std::size_t c = 0; c < T.dim(); ++c) {
    for (std::size_t k = 0; k < m; ++k) {
      const auto left  = multiply(T.elements[c], B.elements[k], f);
      const auto right = multiply(B.elements[k], T.elements[c], f);
      for (std::size_t t = 0; t < nn; ++t) {
        sys((2 * k) * nn + t, c)     = left.entries()[t];
        sys((2 * k + 1) * nn + t, c) = right.entries()[t];
      }
    }
  }
  const auto       ker = kernel(sys, f);
  std::vector<Vec> vecs;
  for (const auto& c : ker.basis()) {
    vecs.push_back(combine(T.space.basis(), c, nn, f));
  }
  return Subspace::span(nn, vecs, f);
}

Subspace center(const AlgebraBasis& B, const FieldCtx& f) {
  const std::size_t n = B.n, nn = n * n, m = B.dim();
  GfpMatrix         sys(m * nn, m);
  for (std::size_t c = 0; c < m; ++c) {
    for (std::size_t k = 0; k < m; ++k) {
      const auto comm =
          subtract(multiply(B.elements[c], B.elements[k], f),
                   multiply(B.elements[k], B.elements[c], f), f);
      for (std::size_t t = 0; t < nn; ++t) {
        sys(k * nn + t, c) = comm.entries()[t];
      }
    }
  }
  const auto       ker = kernel(sys, f);
  std::vector<Vec> vecs;
  for (const auto& c : ker.basis()) {
    vecs.push_back(combine(B.space.basis(), c, nn, f));
  }
  return Subspace::span(nn, vecs, f);
}

bool thin_kills(const TalgContext& ctx, const Strata& st,
                const Subspace& ideal) {
  const auto& f = ctx.field();
  for (const auto& v : ideal.basis()) {
    const auto Z = unflatten(ctx.n(), v);
    for (auto i : st.thin) {
      if (!multiply(ctx.E(i), Z, f).is_zero()
          || !multiply(Z, ctx.E(i), f).is_zero()) {
        return false;
      }
    }
  }
  return true;
}

namespace {

bool is_central(const GfpMatrix& e, const AlgebraBasis& T, const FieldCtx& f) {
  for (const auto& t : T.elements) {
    if (multiply(e, t, f) != multiply(t, e, f)) {
      return false;
    }
  }
  return true;
}

std::string items_string(const CharReport& c) {
  std::string s;
  for (bool b : c.computed()) {
    s += b ? '1' : '0';
  }
  return s;
}

}  // namespace

CharReport evaluate_items(const PointAnalysis& a) {
  const auto& f = a.ctx.field();
  CharReport  c;
  c.i_pprime = a.st.p_prime_valenced;

  const auto e = algebra_identity(a.B0, f);
  c.ii_b0_unital_central = e.has_value() && is_central(*e, a.T, f);

  const auto N = two_sided_annihilator(a.T, a.B0, f);
  c.iii_complement_ideal = intersect(a.B0.space, N, f).is_zero()
                           && a.B0.dim() + N.dim() == a.T.dim();

  c.iv_b0_simple = e.has_value() && radical(a.B0, f).is_zero()
                   && center(a.B0, f).dim() == 1;

  c.v_ann_thin_kills  = thin_kills(a.ctx, a.st, a.ann);
  c.vi_rad_thin_kills = thin_kills(a.ctx, a.st, a.rad);

  c.viii_w0_irreducible = true;
  for (std::size_t i = 0; i < a.w.rep.dim; ++i) {
    Vec ei(a.w.rep.dim, 0);
    ei[i] = 1 % f.p();
    if (cyclic_submodule(a.w.rep, ei, f).dim() != a.w.rep.dim) {
      c.viii_w0_irreducible = false;
    }
  }

  c.ix_w0_selfcontra = a.w0_dual.verdict == SelfContraVerdict::Yes;
  c.vii_implied = c.x_implied = c.xi_implied = c.i_pprime;
  return c;
}

CharReport check_equivalences(const PointAnalysis& a) {
  const auto& f = a.ctx.field();
  auto        c = evaluate_items(a);
  for (bool b : c.computed()) {
    ensure(b == c.i_pprime,
           "characterization items disagree: " + items_string(c));
  }
  ensure(c.viii_w0_irreducible == a.comp.W[1].is_zero(),
         "W_0 irreducibility disagrees with W_1 = 0");

  const auto e = algebra_identity(a.B0, f);
  ensure(c.iv_b0_simple == (a.B1.dim() == 0 && e.has_value()),
         "B0 simplicity disagrees with dim B1 = 0 and unital");
  ensure(a.e_b0.has_value() == c.i_pprime, "e_B0 formula availability");
  if (a.e_b0.has_value()) {
    ensure(e.has_value() && *e == *a.e_b0,
           "solved identity of B0 differs from the e_B0 formula");
    // The complement of B0 is (I - e) T.
    const auto       ie = subtract(GfpMatrix::identity(a.ctx.n()), *e, f);
    std::vector<Vec> vecs;
    for (const auto& t : a.T.elements) {
      vecs.push_back(flatten(multiply(ie, t, f)));
    }
    const auto D = Subspace::span(a.ctx.n() * a.ctx.n(), vecs, f);
    ensure(D == two_sided_annihilator(a.T, a.B0, f),
           "(I - e) T differs from the annihilator of B0");
  }
  c.consistent = true;
  return c;
}

CorollaryReport check_corollary(const PointAnalysis& a,
                                const CharReport&    chars) {
  CorollaryReport r;
  const auto&     f = a.ctx.field();
  r.b0_simple_unital = algebra_identity(a.B0, f).has_value()
                       && radical(a.B0, f).is_zero()
                       && center(a.B0, f).dim() == 1;
  r.rad_thin_kills = thin_kills(a.ctx, a.st, a.rad);
  r.iii_implied    = chars.i_pprime;
  ensure(r.b0_simple_unital == r.rad_thin_kills
             && r.rad_thin_kills == chars.i_pprime,
         "corollary items disagree with the theorem");
  r.consistent = true;
  return r;
}

std::optional<std::size_t> remark_witness(const TalgContext& ctx) {
  const auto& f = ctx.field();
  for (std::size_t i = 0; i < ctx.rank(); ++i) {
    if (ctx.scheme().valency(i) % f.p() != 0) {
      continue;
    }
    const auto s   = add(ctx.ejE(i, 0), ctx.ejE(0, i), f);
    const auto eie = ctx.ejE(i, i);
    if (multiply(s, s, f) == eie && !eie.is_zero()) {
      return i;
    }
  }
  return std::nullopt;
}

PointAnalysis analyze_point(const SchemeData& s, const FieldCtx& f,
                            std::size_t x) {
  PointAnalysis a{build_context(s, f, x)};
  const auto&   ctx = a.ctx;
  const auto    nn  = ctx.n() * ctx.n();
  a.st              = strata(s, f);
  a.T               = generate_algebra(ctx);
  ensure(a.T.dim() >= ctx.rank() * ctx.rank(), "dim T < (d+1)^2");
  std::tie(a.B0, a.B1) = b0_b1(ctx, a.T);
  a.rad                = radical(a.T, f, &a.rad_diag);
  a.ann                = annihilator_w0(ctx, a.T);
  if (a.st.p_prime_valenced) {
    a.e_b0 = b0_identity(ctx, a.T, a.B0);
  }

  a.w       = build_primary(ctx);
  a.digraph = closure_digraph(s, f);
  a.comp    = composition_factors(a.w, a.st, a.digraph, f);
  a.uniserial = uniserial_check(ctx, a.comp, a.rad);
  a.w0_dual   = selfcontragredient_w0(a.w, a.st, f);

  // Structural facts every scheme satisfies.
  ensure(product_space(ctx.n(), product_space(ctx.n(), a.B1.space,
                                              a.B1.space, f),
                       a.B1.space, f)
             .is_zero(),
         "B1^3 != O");
  ensure(is_subspace_of(a.B1.space, a.rad, f), "B1 not inside Rad(T)");
  if (a.rad.is_zero()) {
    ensure(a.st.p_prime_valenced, "Rad(T) = O but not p'-valenced");
  }
  if (!a.st.p_prime_valenced) {
    ensure(remark_witness(ctx).has_value(), "no square witness for p | k_i");
  }
  if (a.comp.W[1].is_zero()) {
    ensure(is_subspace_of(a.rad, a.ann, f), "Rad(T) not inside Ann(W_0)");
  }
  {
    EchelonBuilder b(ctx.rank(), f);
    for (const auto& z : a.rad.basis()) {
      const auto m = w0_action(ctx, unflatten(ctx.n(), z));
      for (const auto& v : a.comp.W[0].basis()) {
        b.insert(apply(m, v, f));
      }
    }
    ensure(b.finish() == a.comp.W[1], "Rad(T) W_0 != W_1");
  }
  for (std::size_t l = 0; l < ctx.rank(); ++l) {
    ensure(verify_ml_iso(ctx, a.w, l), "M_l is not isomorphic to W_0");
  }
  ensure(verify_b0_decomposition(ctx, a.B0), "B0 != direct sum of M_l");
  std::set<std::pair<unsigned, std::vector<std::size_t>>> seen;
  for (const auto& fac : a.comp.factors) {
    ensure(seen.emplace(fac.level, fac.cls).second, "repeated factor");
    ensure(verify_factor_duality(a.w, s, fac, f),
           "factor is not self-contragredient via diag(q_i)");
  }
  ensure(a.T.dim() <= nn, "dim T exceeds n^2");

  a.chars     = check_equivalences(a);
  a.corollary = check_corollary(a, a.chars);
  return a;
}

}  // namespace modterw
