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

#include "modterw/oracle.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace modterw {

BruteAxioms brute_force_axioms(const RelationTable& t) {
  BruteAxioms       res;
  const std::size_t n = t.n();
  std::size_t       r = 0;
  for (auto v : t.entries()) {
    r = std::max<std::size_t>(r, v + 1);
  }
  std::vector<bool> used(r, false);
  for (auto v : t.entries()) {
    used[v] = true;
  }
  if (n == 0 || std::count(used.begin(), used.end(), false) != 0) {
    return res;
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if ((t(x, y) == 0) != (x == y)) {
        return res;
      }
    }
  }
  std::vector<std::size_t> conv(r, r);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      auto& c = conv[t(x, y)];
      if (c == r) {
        c = t(y, x);
      } else if (c != t(y, x)) {
        return res;
      }
    }
  }

  // cnt[(x * n + y) * r * r + i * r + j] = #{z : r(x,z) = i, r(z,y) = j}.
  std::vector<std::uint32_t> cnt(n * n * r * r, 0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t z = 0; z < n; ++z) {
      const std::size_t i = t(x, z);
      for (std::size_t y = 0; y < n; ++y) {
        ++cnt[(x * n + y) * r * r + i * r + t(z, y)];
      }
    }
  }
  std::vector<std::size_t> rep(r, n * n);
  for (std::size_t xy = 0; xy < n * n; ++xy) {
    const std::size_t l = t.entries()[xy];
    if (rep[l] == n * n) {
      rep[l] = xy;
      continue;
    }
    if (!std::equal(cnt.begin() + xy * r * r, cnt.begin() + (xy + 1) * r * r,
                    cnt.begin() + rep[l] * r * r)) {
      return res;
    }
  }
  res.tensor.assign(r * r * r, 0);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t l = 0; l < r; ++l) {
        res.tensor[(i * r + j) * r + l] = cnt[rep[l] * r * r + i * r + j];
      }
    }
  }
  res.valencies.assign(r, 0);
  for (std::size_t y = 0; y < n; ++y) {
    ++res.valencies[t(0, y)];
  }
  res.ok = true;
  return res;
}

std::size_t word_closure_dim(const TalgContext& ctx) {
  const auto&           f = ctx.field();
  const std::size_t     n = ctx.n();
  EchelonBuilder        span(n * n, f);
  std::deque<GfpMatrix> frontier;
  const auto            I = GfpMatrix::identity(n);
  span.insert(flatten(I));
  frontier.push_back(I);
  while (!frontier.empty()) {
    const auto w = std::move(frontier.front());
    frontier.pop_front();
    for (std::size_t g = 0; g < ctx.generator_count(); ++g) {
      auto next = multiply(ctx.generator(g), w, f);
      if (span.insert(flatten(next))) {
        frontier.push_back(std::move(next));
      }
    }
  }
  return span.dim();
}

std::uint64_t subspace_count(std::size_t m, std::uint64_t p,
                             std::uint64_t cap) {
  // Gaussian binomials via the recurrence G(m, k) = G(m-1, k-1) + p^k G(m-1, k).
  std::vector<std::uint64_t> row{1};
  auto sat = [cap](std::uint64_t a) { return std::min(a, cap + 1); };
  for (std::size_t mm = 1; mm <= m; ++mm) {
    std::vector<std::uint64_t> next(mm + 1, 0);
    std::uint64_t              pk = 1;
    for (std::size_t k = 0; k <= mm; ++k) {
      const std::uint64_t a = k > 0 ? row[k - 1] : 0;
      const std::uint64_t b = k < mm ? row[k] : 0;
      const std::uint64_t prod =
          (b != 0 && pk > (cap + 1) / b) ? cap + 1 : pk * b;
      next[k] = sat(a + sat(prod));
      pk      = sat(pk * p);
    }
    row = std::move(next);
  }
  std::uint64_t total = 0;
  for (auto v : row) {
    total = sat(total + v);
  }
  return total;
}

LatticeSummary submodule_lattice(const ModuleRep& m, const FieldCtx& f) {
  const std::size_t     dim = m.dim;
  std::vector<Subspace> subs;

  // Every subspace has exactly one reduced echelon basis: choose the pivot
  // columns, then every entry right of a pivot in a non-pivot column.
  std::vector<std::size_t> pivots;
  std::function<void(std::size_t)> choose = [&](std::size_t start) {
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t t = 0; t < pivots.size(); ++t) {
      for (std::size_t c = pivots[t] + 1; c < dim; ++c) {
        if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) {
          free.emplace_back(t, c);
        }
      }
    }
    std::vector<Residue> vals(free.size(), 0);
    while (true) {
      std::vector<Vec> basis(pivots.size(), Vec(dim, 0));
      for (std::size_t t = 0; t < pivots.size(); ++t) {
        basis[t][pivots[t]] = 1 % f.p();
      }
      for (std::size_t k = 0; k < free.size(); ++k) {
        basis[free[k].first][free[k].second] = vals[k];
      }
      auto s = Subspace::span(dim, basis, f);
      if (is_invariant(m, s, f)) {
        subs.push_back(std::move(s));
      }
      std::size_t k = 0;
      while (k < vals.size() && vals[k] == f.p() - 1) {
        vals[k++] = 0;
      }
      if (k == vals.size()) {
        break;
      }
      ++vals[k];
    }
    for (std::size_t c = start; c < dim; ++c) {
      pivots.push_back(c);
      choose(c + 1);
      pivots.pop_back();
    }
  };
  choose(0);

  LatticeSummary out;
  out.submodules = subs.size();
  out.uniserial  = true;
  for (std::size_t a = 0; a < subs.size(); ++a) {
    for (std::size_t b = a + 1; b < subs.size(); ++b) {
      if (!is_subspace_of(subs[a], subs[b], f)
          && !is_subspace_of(subs[b], subs[a], f)) {
        out.uniserial = false;
      }
    }
  }
  // A largest proper submodule is maximal, so the greedy descent is a
  // composition series.
  Subspace current = Subspace::full(dim);
  while (!current.is_zero()) {
    const Subspace* best = nullptr;
    for (const auto& s : subs) {
      if (s.dim() < current.dim() && is_subspace_of(s, current, f)
          && (best == nullptr || s.dim() > best->dim())) {
        best = &s;
      }
    }
    out.factor_dims.push_back(current.dim() - best->dim());
    current = *best;
    ++out.length;
  }
  std::sort(out.factor_dims.begin(), out.factor_dims.end());
  return out;
}

bool is_nilpotent(const GfpMatrix& m, const FieldCtx& f) {
  GfpMatrix   pw = m;
  std::size_t e  = 1;
  while (e < m.rows()) {
    pw = multiply(pw, pw, f);
    e *= 2;
  }
  return pw.is_zero();
}

std::optional<std::size_t> brute_radical_dim(const AlgebraBasis& A,
                                             const FieldCtx&     f,
                                             std::uint64_t max_pairs) {
  const std::size_t m     = A.dim();
  std::uint64_t     total = 1;
  for (std::size_t k = 0; k < 2 * m; ++k) {
    total *= f.p();
    if (total > max_pairs) {
      return std::nullopt;
    }
  }
  std::vector<GfpMatrix> elems;
  Vec                    c(m, 0);
  while (true) {
    elems.push_back(unflatten(A.n, combine(A.space.basis(), c, A.n * A.n, f)));
    std::size_t k = 0;
    while (k < m && c[k] == f.p() - 1) {
      c[k++] = 0;
    }
    if (k == m) {
      break;
    }
    ++c[k];
  }
  std::uint64_t members = 0;
  for (const auto& a : elems) {
    bool in = true;
    for (const auto& b : elems) {
      if (!is_nilpotent(multiply(a, b, f), f)) {
        in = false;
        break;
      }
    }
    members += in ? 1 : 0;
  }
  std::size_t dim = 0;
  while (members > 1) {
    ensure(members % f.p() == 0, "radical oracle found a non-subspace");
    members /= f.p();
    ++dim;
  }
  return dim;
}

}  // namespace modterw
