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

#include <cstdint>
#include <string>
#include <vector>

#include "modterw/talg.hpp"

namespace modterw {

namespace {

using IntMat = std::vector<std::uint64_t>;  // n x n, row-major

IntMat int_mul(const IntMat& a, const IntMat& b, std::size_t n,
               std::uint64_t mod) {
  IntMat c(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const auto aik = a[i * n + k];
      if (aik == 0) {
        continue;
      }
      for (std::size_t j = 0; j < n; ++j) {
        c[i * n + j] = (c[i * n + j] + aik * b[k * n + j]) % mod;
      }
    }
  }
  return c;
}

IntMat int_pow(IntMat base, std::uint64_t e, std::size_t n, std::uint64_t mod) {
  IntMat result(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    result[i * n + i] = 1 % mod;
  }
  while (e > 0) {
    if (e & 1U) {
      result = int_mul(result, base, n, mod);
    }
    e >>= 1U;
    if (e > 0) {
      base = int_mul(base, base, n, mod);
    }
  }
  return result;
}

// Trace of a*b over GF(p) without forming the product.
Residue trace_of_product(const GfpMatrix& a, const GfpMatrix& b,
                         const FieldCtx& f) {
  const std::size_t n   = a.rows();
  std::uint64_t     acc = 0;
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t z = 0; z < n; ++z) {
      acc = (acc + static_cast<std::uint64_t>(a(y, z)) * b(z, y)) % f.p();
    }
  }
  return static_cast<Residue>(acc);
}

// (Tr(X~^{p^i}) mod p^{i+1}) / p^i for the integer lift X~ of X.
Residue stage_functional(const GfpMatrix& X, std::size_t stage,
                         const FieldCtx& f) {
  const std::size_t n  = X.rows();
  std::uint64_t     pi = 1;
  for (std::size_t s = 0; s < stage; ++s) {
    pi *= f.p();
  }
  const std::uint64_t mod = pi * f.p();
  IntMat              lift(X.entries().begin(), X.entries().end());
  const IntMat        pw = int_pow(std::move(lift), pi, n, mod);
  std::uint64_t       tr = 0;
  for (std::size_t y = 0; y < n; ++y) {
    tr = (tr + pw[y * n + y]) % mod;
  }
  ensure(tr % pi == 0, "trace of p^i-th power not divisible by p^i");
  return static_cast<Residue>(tr / pi);
}

std::size_t stage_count(std::size_t n, Residue p) {
  // Stages i = 0 .. floor(log_p n).
  std::size_t   count = 1;
  std::uint64_t pw    = p;
  while (pw <= n) {
    ++count;
    pw *= p;
  }
  return count;
}

}  // namespace

Subspace radical_unchecked(const AlgebraBasis& A, const FieldCtx& f,
                           std::size_t* stages) {
  const std::size_t n       = A.n;
  const std::size_t nstages = stage_count(n, f.p());
  std::vector<Vec>  current = A.space.basis();
  std::size_t       run     = 0;
  for (std::size_t stage = 0; stage < nstages && !current.empty(); ++stage) {
    ++run;
    GfpMatrix values(A.dim(), current.size());
    for (std::size_t k = 0; k < current.size(); ++k) {
      const auto a = unflatten(n, current[k]);
      for (std::size_t l = 0; l < A.dim(); ++l) {
        values(l, k) = stage == 0
                           ? trace_of_product(a, A.elements[l], f)
                           : stage_functional(multiply(a, A.elements[l], f),
                                              stage, f);
      }
    }
    const auto       ker = kernel(values, f);
    std::vector<Vec> next;
    for (const auto& c : ker.basis()) {
      next.push_back(combine(current, c, n * n, f));
    }
    current = Subspace::span(n * n, next, f).basis();
  }
  if (stages != nullptr) {
    *stages = run;
  }
  return Subspace::span(n * n, current, f);
}

void check_radical(const AlgebraBasis& A, const Subspace& R, const FieldCtx& f,
                   RadicalDiagnostics* diag) {
  const std::size_t n = A.n;
  ensure(is_subspace_of(R, A.space, f), "radical not inside the algebra");
  ensure(is_two_sided_ideal(A, R, f), "radical is not a two-sided ideal");

  // Nilpotency: R^m = 0 for some m <= dim A + 1.
  std::size_t nil   = 1;
  Subspace    power = R;
  while (!power.is_zero()) {
    ensure(nil <= A.dim() + 1, "radical is not nilpotent");
    power = product_space(n, power, R, f);
    ++nil;
  }

  // Graded module V > RV > R^2 V > ... > 0 with A acting on each layer.
  std::vector<Subspace> levels{Subspace::full(n)};
  while (!levels.back().is_zero()) {
    EchelonBuilder next(n, f);
    for (const auto& r : R.basis()) {
      const auto rm = unflatten(n, r);
      for (const auto& v : levels.back().basis()) {
        next.insert(apply(rm, v, f));
      }
    }
    auto s = next.finish();
    ensure(s.dim() < levels.back().dim(), "R V_k does not shrink");
    levels.push_back(std::move(s));
  }

  // For each layer, a complement basis of V_{k+1} in V_k and a change of
  // basis from the echelon coordinates of V_k.
  struct Layer {
    std::vector<Vec> complement;
    GfpMatrix        to_adapted;  // echelon coords -> adapted coords
    std::size_t      offset = 0;
  };
  std::vector<Layer> layers;
  std::size_t        offset = 0;
  for (std::size_t k = 0; k + 1 < levels.size(); ++k) {
    const auto&    Vk = levels[k];
    const auto&    Vn = levels[k + 1];
    EchelonBuilder b(n, f);
    for (const auto& v : Vn.basis()) {
      b.insert(v);
    }
    Layer layer;
    for (const auto& v : Vk.basis()) {
      if (b.insert(v)) {
        layer.complement.push_back(v);
      }
    }
    std::vector<Vec> adapted;
    for (const auto& v : layer.complement) {
      adapted.push_back(*Vk.coordinates(v, f));
    }
    for (const auto& v : Vn.basis()) {
      adapted.push_back(*Vk.coordinates(v, f));
    }
    // Rows of `basis` are the adapted vectors in echelon coordinates; a row
    // vector c in echelon coordinates has adapted coordinates c * basis^-1.
    const auto basis = rows_to_matrix(adapted, Vk.dim());
    const auto inv   = inverse(basis, f);
    ensure(inv.has_value(), "adapted basis is singular");
    layer.to_adapted = *inv;
    layer.offset     = offset;
    offset += layer.complement.size();
    layers.push_back(std::move(layer));
  }
  ensure(offset == n, "graded layers do not add up to n");

  std::vector<GfpMatrix> image;
  for (const auto& a : A.elements) {
    GfpMatrix rho(n, n);
    for (std::size_t k = 0; k < layers.size(); ++k) {
      const auto& layer = layers[k];
      for (std::size_t c = 0; c < layer.complement.size(); ++c) {
        const auto w = apply(a, layer.complement[c], f);
        const auto e = levels[k].coordinates(w, f);
        ensure(e.has_value(), "V_k is not invariant");
        // Adapted coordinates of w: e * to_adapted.
        for (std::size_t t = 0; t < layer.complement.size(); ++t) {
          std::uint64_t acc = 0;
          for (std::size_t s = 0; s < e->size(); ++s) {
            acc = (acc + static_cast<std::uint64_t>((*e)[s])
                             * layer.to_adapted(s, t))
                  % f.p();
          }
          rho(layer.offset + t, layer.offset + c) = static_cast<Residue>(acc);
        }
      }
    }
    image.push_back(std::move(rho));
  }
  const auto img = AlgebraBasis::from_matrices(n, image, f);
  ensure(img.dim() + R.dim() == A.dim(),
         "kernel on the graded module differs from the radical: dim A = "
             + std::to_string(A.dim()) + ", dim R = " + std::to_string(R.dim())
             + ", dim image = " + std::to_string(img.dim()));
  ensure(radical_unchecked(img, f).is_zero(), "A / R is not semisimple");

  if (diag != nullptr) {
    diag->nilpotency    = nil;
    diag->graded_levels = layers.size();
    diag->quotient_dim  = img.dim();
  }
}

Subspace radical(const AlgebraBasis& A, const FieldCtx& f,
                 RadicalDiagnostics* diag) {
  ensure(A.closed_under_product, "radical needs an algebra");
  std::size_t stages = 0;
  auto        R      = radical_unchecked(A, f, &stages);
  check_radical(A, R, f, diag);
  if (diag != nullptr) {
    diag->stages = stages;
  }
  return R;
}

}  // namespace modterw
