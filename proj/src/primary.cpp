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

#include "modterw/primary.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <random>
#include <string>

namespace modterw {

// ---------------------------------------------------------------------------
// W_0
// ---------------------------------------------------------------------------

PrimaryModule build_primary(const TalgContext& ctx) {
  const auto&       f = ctx.field();
  const auto&       s = ctx.scheme();
  const std::size_t r = ctx.rank();

  PrimaryModule w;
  for (std::size_t i = 0; i < r; ++i) {
    w.basis.push_back(ctx.shell(i));
  }
  ensure(rank(rows_to_matrix(w.basis, ctx.n()), f) == r,
         "E_i* 1 are not independent");

  w.rep.dim = r;
  for (std::size_t j = 0; j < r; ++j) {
    GfpMatrix m(r, r);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t h = 0; h < r; ++h) {
        m(i, h) = f.reduce(static_cast<std::int64_t>(s.p(h, s.converse(j), i)));
      }
    }
    w.rep.action.push_back(std::move(m));
  }
  for (std::size_t j = 0; j < r; ++j) {
    GfpMatrix m(r, r);
    m(j, j) = 1 % f.p();
    w.rep.action.push_back(std::move(m));
  }
  for (std::size_t g = 0; g < ctx.generator_count(); ++g) {
    w.rep.transpose.push_back(ctx.transpose_of(g));
    ensure(w0_action(ctx, ctx.generator(g)) == w.rep.action[g],
           "tensor action on W_0 differs from matrix action");
  }
  // E_i* A_j E_l* 1 = p_{l j'}^i E_i* 1.
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t l = 0; l < r; ++l) {
        const auto lhs = apply(triple_product(ctx, i, j, l), ctx.ones(), f);
        Vec        rhs(ctx.n(), 0);
        rhs = axpy(rhs,
                   f.reduce(static_cast<std::int64_t>(s.p(l, s.converse(j), i))),
                   ctx.shell(i), f);
        ensure(lhs == rhs, "E_i* A_j E_l* 1 mismatch");
      }
    }
  }
  return w;
}

std::optional<Vec> w0_coordinates(const TalgContext& ctx, const Vec& v) {
  const auto& f = ctx.field();
  // The shells are disjoint and cover all points.
  Vec c(ctx.rank(), 0);
  Vec rebuilt(ctx.n(), 0);
  for (std::size_t i = 0; i < ctx.rank(); ++i) {
    const auto& sh = ctx.shell(i);
    const auto  y  = static_cast<std::size_t>(
        std::find(sh.begin(), sh.end(), 1 % f.p()) - sh.begin());
    c[i]    = v.at(y);
    rebuilt = axpy(rebuilt, c[i], sh, f);
  }
  if (rebuilt != v) {
    return std::nullopt;
  }
  return c;
}

GfpMatrix w0_action(const TalgContext& ctx, const GfpMatrix& Z) {
  const std::size_t r = ctx.rank();
  GfpMatrix         m(r, r);
  for (std::size_t h = 0; h < r; ++h) {
    const auto c = w0_coordinates(ctx, apply(Z, ctx.shell(h), ctx.field()));
    ensure(c.has_value(), "matrix does not preserve W_0");
    for (std::size_t i = 0; i < r; ++i) {
      m(i, h) = (*c)[i];
    }
  }
  return m;
}

bool is_invariant(const ModuleRep& m, const Subspace& s, const FieldCtx& f) {
  for (const auto& a : m.action) {
    for (const auto& v : s.basis()) {
      if (!s.contains(apply(a, v, f), f)) {
        return false;
      }
    }
  }
  return true;
}

Subspace cyclic_submodule(const ModuleRep& m, const Vec& v, const FieldCtx& f) {
  EchelonBuilder  b(m.dim, f);
  std::deque<Vec> pending;
  if (b.insert(v)) {
    pending.push_back(v);
  }
  while (!pending.empty()) {
    const Vec u = std::move(pending.front());
    pending.pop_front();
    for (const auto& a : m.action) {
      auto img = apply(a, u, f);
      if (b.insert(img)) {
        pending.push_back(std::move(img));
      }
    }
  }
  return b.finish();
}

std::vector<Subspace> filtration(const PrimaryModule& w, const Strata& st,
                                 const FieldCtx& f) {
  const std::size_t     r = w.rep.dim;
  std::vector<Subspace> W;
  for (std::size_t n = 0; n <= st.epsilon + 1; ++n) {
    std::vector<Vec> vecs;
    for (std::size_t i = 0; i < r; ++i) {
      if (st.valuation[i] >= n) {
        Vec e(r, 0);
        e[i] = 1 % f.p();
        vecs.push_back(std::move(e));
      }
    }
    W.push_back(Subspace::span(r, vecs, f));
    ensure(is_invariant(w.rep, W.back(), f),
           "W_" + std::to_string(n) + " is not a submodule");
  }
  ensure(W.back().is_zero(), "W_{eps+1} is not zero");
  return W;
}

// ---------------------------------------------------------------------------
// Closure digraph
// ---------------------------------------------------------------------------

bool ClosureDigraph::has_edge(std::size_t i, std::size_t l) const {
  const auto& o = out.at(i);
  return std::find(o.begin(), o.end(), l) != o.end();
}

std::vector<std::size_t> tarjan_scc(
    const std::vector<std::vector<std::size_t>>& out, std::size_t* count) {
  const std::size_t           n     = out.size();
  constexpr std::size_t       kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t>    index(n, kNone), low(n, 0), raw(n, kNone);
  std::vector<bool>           on_stack(n, false);
  std::vector<std::size_t>    stack;
  std::size_t                 next = 0, comps = 0;

  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    index[v] = low[v] = next++;
    stack.push_back(v);
    on_stack[v] = true;
    for (auto w : out[v]) {
      if (index[w] == kNone) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::size_t w = kNone;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        raw[w]      = comps;
      } while (w != v);
      ++comps;
    }
  };
  for (std::size_t v = 0; v < n; ++v) {
    if (index[v] == kNone) {
      visit(v);
    }
  }

  std::vector<std::size_t> renum(comps, kNone), scc(n);
  std::size_t              id = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (renum[raw[v]] == kNone) {
      renum[raw[v]] = id++;
    }
    scc[v] = renum[raw[v]];
  }
  if (count != nullptr) {
    *count = comps;
  }
  return scc;
}

ClosureDigraph closure_digraph(const SchemeData& s, const FieldCtx& f) {
  const std::size_t r = s.rank();
  ClosureDigraph    g;
  g.vertices = r;
  g.out.assign(r, {});
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t l = 0; l < r; ++l) {
      for (std::size_t b = 0; b < r; ++b) {
        if (s.p(l, b, i) % f.p() != 0) {
          g.out[i].push_back(l);
          break;
        }
      }
    }
    ensure(g.has_edge(i, i), "closure digraph lacks a self-loop");
  }
  g.scc = tarjan_scc(g.out, &g.scc_count);
  return g;
}

// ---------------------------------------------------------------------------
// Composition factors
// ---------------------------------------------------------------------------

namespace {

ModuleRep restrict_rep(const ModuleRep& m, const std::vector<std::size_t>& idx) {
  ModuleRep out;
  out.dim       = idx.size();
  out.transpose = m.transpose;
  for (const auto& a : m.action) {
    GfpMatrix b(idx.size(), idx.size());
    for (std::size_t r = 0; r < idx.size(); ++r) {
      for (std::size_t c = 0; c < idx.size(); ++c) {
        b(r, c) = a(idx[r], idx[c]);
      }
    }
    out.action.push_back(std::move(b));
  }
  return out;
}

}  // namespace

ModuleRep factor_rep(const PrimaryModule& w, const Factor& c) {
  return restrict_rep(w.rep, c.cls);
}

CompositionReport composition_factors(const PrimaryModule& w,
                                      const Strata& st, const ClosureDigraph& g,
                                      const FieldCtx& f) {
  CompositionReport rep;
  rep.epsilon = st.epsilon;
  rep.S       = st.sets;
  rep.W       = filtration(w, st, f);
  for (std::size_t n = 0; n <= st.epsilon; ++n) {
    const auto&                      Sn = st.sets[n];
    std::map<std::size_t, std::vector<std::size_t>> by_scc;
    for (auto i : Sn) {
      by_scc[g.scc[i]].push_back(i);
    }
    std::vector<std::vector<std::size_t>> Qn;
    for (auto& [id, cls] : by_scc) {
      std::sort(cls.begin(), cls.end());
      Qn.push_back(cls);
    }
    std::sort(Qn.begin(), Qn.end());

    // In W_n/W_{n+1} with basis indexed by S_n, every submodule is spanned
    // by coordinate vectors (the E_i* act as coordinate projections), so a
    // class is irreducible once each coordinate vector generates it.
    const auto layer = restrict_rep(w.rep, Sn);
    for (const auto& cls : Qn) {
      std::vector<std::size_t> pos;
      for (auto i : cls) {
        pos.push_back(static_cast<std::size_t>(
            std::find(Sn.begin(), Sn.end(), i) - Sn.begin()));
      }
      for (const auto& a : layer.action) {
        for (auto h : pos) {
          for (std::size_t t = 0; t < Sn.size(); ++t) {
            const bool inside = std::find(pos.begin(), pos.end(), t) != pos.end();
            ensure(inside || a(t, h) == 0,
                   "class span is not a submodule of W_n/W_{n+1}");
          }
        }
      }
      const auto sub = restrict_rep(w.rep, cls);
      for (std::size_t k = 0; k < cls.size(); ++k) {
        Vec e(cls.size(), 0);
        e[k] = 1 % f.p();
        ensure(cyclic_submodule(sub, e, f).dim() == cls.size(),
               "factor is not generated by a basis vector");
      }
      rep.factors.push_back(Factor{static_cast<unsigned>(n), cls});
    }
    ensure(rep.W[n].dim() - rep.W[n + 1].dim() == Sn.size(),
           "dim W_n/W_{n+1} != |S_n|");
    rep.Q.push_back(std::move(Qn));
  }
  rep.length = rep.factors.size();
  if (!st.sets[0].empty()) {
    ensure(rep.Q[0].size() == 1, "Q_0 is not a single class");
  }
  return rep;
}

bool uniserial_check(const TalgContext& ctx, const CompositionReport& rep,
                     const Subspace& rad) {
  const auto&            f = ctx.field();
  std::vector<GfpMatrix> rad_action;
  for (const auto& z : rad.basis()) {
    rad_action.push_back(w0_action(ctx, unflatten(ctx.n(), z)));
  }
  for (std::size_t n = 0; n + 1 < rep.W.size(); ++n) {
    if (rep.W[n].dim() == rep.W[n + 1].dim()) {
      continue;
    }
    if (rep.Q[n].size() != 1) {
      return false;
    }
    EchelonBuilder b(ctx.rank(), f);
    for (const auto& z : rad_action) {
      for (const auto& v : rep.W[n].basis()) {
        b.insert(apply(z, v, f));
      }
    }
    if (b.finish() != rep.W[n + 1]) {
      return false;
    }
  }
  return true;
}

bool verify_ml_iso(const TalgContext& ctx, const PrimaryModule& w,
                   std::size_t l) {
  if (l >= ctx.rank()) {
    throw Error(Errc::IndexOutOfRange, "M_l index " + std::to_string(l));
  }
  const auto&            f = ctx.field();
  const std::size_t      r = ctx.rank();
  std::vector<GfpMatrix> image;
  for (std::size_t i = 0; i < r; ++i) {
    image.push_back(ctx.ejE(i, l));
  }
  std::vector<Vec> flat;
  for (const auto& m : image) {
    flat.push_back(flatten(m));
  }
  if (Subspace::span(ctx.n() * ctx.n(), flat, f).dim() != r) {
    return false;
  }
  for (std::size_t g = 0; g < ctx.generator_count(); ++g) {
    const auto& rho = w.rep.action[g];
    for (std::size_t h = 0; h < r; ++h) {
      GfpMatrix lhs(ctx.n(), ctx.n());
      for (std::size_t i = 0; i < r; ++i) {
        if (rho(i, h) != 0) {
          lhs = add(lhs, scale(image[i], rho(i, h), f), f);
        }
      }
      if (lhs != multiply(ctx.generator(g), image[h], f)) {
        return false;
      }
    }
  }
  return true;
}

bool verify_b0_decomposition(const TalgContext& ctx, const AlgebraBasis& B0) {
  const auto& f    = ctx.field();
  std::size_t dims = 0;
  Subspace    total(ctx.n() * ctx.n());
  for (std::size_t l = 0; l < ctx.rank(); ++l) {
    std::vector<Vec> flat;
    for (std::size_t i = 0; i < ctx.rank(); ++i) {
      flat.push_back(flatten(ctx.ejE(i, l)));
    }
    const auto Ml = Subspace::span(ctx.n() * ctx.n(), flat, f);
    dims += Ml.dim();
    total = sum(total, Ml, f);
  }
  return dims == total.dim() && total == B0.space;
}

// ---------------------------------------------------------------------------
// Duality
// ---------------------------------------------------------------------------

ModuleRep contragredient(const ModuleRep& m) {
  ModuleRep out;
  out.dim       = m.dim;
  out.transpose = m.transpose;
  for (std::size_t g = 0; g < m.action.size(); ++g) {
    out.action.push_back(m.action.at(m.transpose.at(g)).transpose());
  }
  return out;
}

Subspace hom_space(const ModuleRep& a, const ModuleRep& b, const FieldCtx& f) {
  if (a.action.size() != b.action.size()) {
    throw Error(Errc::DimensionMismatch, "modules over different generators");
  }
  // Unknown Phi is dim_b x dim_a, flattened row-major. For each generator,
  // (Phi rho_a(g) - rho_b(g) Phi)(r, c) = 0.
  const std::size_t da = a.dim, db = b.dim, vars = da * db;
  GfpMatrix         sys(a.action.size() * vars, vars);
  std::size_t       row = 0;
  for (std::size_t g = 0; g < a.action.size(); ++g) {
    const auto& ra = a.action[g];
    const auto& rb = b.action[g];
    for (std::size_t r = 0; r < db; ++r) {
      for (std::size_t c = 0; c < da; ++c, ++row) {
        for (std::size_t k = 0; k < da; ++k) {
          auto& e = sys(row, r * da + k);
          e       = f.add(e, ra(k, c));
        }
        for (std::size_t k = 0; k < db; ++k) {
          auto& e = sys(row, k * da + c);
          e       = f.sub(e, rb(r, k));
        }
      }
    }
  }
  return kernel(sys, f);
}

SelfContraResult is_selfcontragredient(const ModuleRep& m, const FieldCtx& f,
                                       std::uint64_t seed) {
  const auto       H = hom_space(m, contragredient(m), f);
  SelfContraResult res;
  res.hom_dim = H.dim();
  if (m.dim == 0) {
    res.verdict = SelfContraVerdict::Yes;
    res.witness = GfpMatrix(0, 0);
    return res;
  }
  auto try_coeffs = [&](const Vec& c) {
    const auto phi = unflatten(m.dim, combine(H.basis(), c, m.dim * m.dim, f));
    if (inverse(phi, f).has_value()) {
      res.verdict = SelfContraVerdict::Yes;
      res.witness = phi;
      return true;
    }
    return false;
  };
  const std::size_t h = H.dim();
  if (h == 0) {
    return res;
  }

  // Number of projective points (p^h - 1)/(p - 1), capped.
  std::uint64_t points = 0, pw = 1;
  for (std::size_t k = 0; k < h && points <= kProjectiveEnumerationLimit; ++k) {
    points += pw;
    pw *= f.p();
  }
  if (points <= kProjectiveEnumerationLimit) {
    // Representatives with leading nonzero coordinate 1.
    for (std::size_t lead = 0; lead < h; ++lead) {
      Vec c(h, 0);
      c[lead] = 1 % f.p();
      while (true) {
        if (try_coeffs(c)) {
          return res;
        }
        std::size_t k = lead + 1;
        while (k < h && c[k] == f.p() - 1) {
          c[k++] = 0;
        }
        if (k == h) {
          break;
        }
        ++c[k];
      }
    }
    return res;
  }

  res.exhaustive = false;
  std::mt19937_64                        rng(seed);
  std::uniform_int_distribution<Residue> dist(0, f.p() - 1);
  for (std::size_t t = 0; t < kRandomSamples; ++t) {
    Vec c(h);
    for (auto& x : c) {
      x = dist(rng);
    }
    if (try_coeffs(c)) {
      return res;
    }
  }
  res.verdict = SelfContraVerdict::ProbablyNot;
  return res;
}

SelfContraResult selfcontragredient_w0(const PrimaryModule& w,
                                       const Strata& st, const FieldCtx& f) {
  auto       res = is_selfcontragredient(w.rep, f);
  const bool yes = res.verdict == SelfContraVerdict::Yes;
  ensure(yes == st.p_prime_valenced,
         "self-contragredient verdict for W_0 disagrees with p'-valenced flag");
  return res;
}

bool verify_factor_duality(const PrimaryModule& w, const SchemeData& s,
                           const Factor& c, const FieldCtx& f) {
  const auto rho  = factor_rep(w, c);
  const auto dual = contragredient(rho);
  GfpMatrix  phi(c.dim(), c.dim());
  for (std::size_t t = 0; t < c.dim(); ++t) {
    std::uint64_t q = s.valency(c.cls[t]);
    for (unsigned e = 0; e < c.level; ++e) {
      if (q % f.p() != 0) {
        return false;
      }
      q /= f.p();
    }
    phi(t, t) = f.reduce(static_cast<std::int64_t>(q));
  }
  if (!inverse(phi, f).has_value()) {
    return false;
  }
  for (std::size_t g = 0; g < rho.action.size(); ++g) {
    if (multiply(phi, rho.action[g], f) != multiply(dual.action[g], phi, f)) {
      return false;
    }
  }
  return true;
}

}  // namespace modterw
