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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "modterw/ffmat.hpp"
#include "support.hpp"

using namespace modterw;
using modterw::test::random_matrix;

namespace {

// Laplace expansion along the first row.
Residue det_laplace(const std::vector<std::vector<Residue>>& m,
                    const FieldCtx&                          f) {
  const std::size_t k = m.size();
  if (k == 0) {
    return 1;
  }
  Residue acc = 0;
  for (std::size_t c = 0; c < k; ++c) {
    std::vector<std::vector<Residue>> minor;
    for (std::size_t r = 1; r < k; ++r) {
      std::vector<Residue> row;
      for (std::size_t cc = 0; cc < k; ++cc) {
        if (cc != c) {
          row.push_back(m[r][cc]);
        }
      }
      minor.push_back(row);
    }
    const Residue term = f.mul(m[0][c], det_laplace(minor, f));
    acc                = c % 2 == 0 ? f.add(acc, term) : f.sub(acc, term);
  }
  return acc;
}

void subsets(std::size_t n, std::size_t k, std::size_t start,
             std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Largest k with a nonzero k x k minor.
std::size_t minor_rank(const GfpMatrix& m, const FieldCtx& f) {
  for (std::size_t k = std::min(m.rows(), m.cols()); k > 0; --k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t>              cur;
    subsets(m.rows(), k, 0, cur, rs);
    subsets(m.cols(), k, 0, cur, cs);
    for (const auto& r : rs) {
      for (const auto& c : cs) {
        std::vector<std::vector<Residue>> sub(k, std::vector<Residue>(k));
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < k; ++j) {
            sub[i][j] = m(r[i], c[j]);
          }
        }
        if (det_laplace(sub, f) != 0) {
          return k;
        }
      }
    }
  }
  return 0;
}

// All elements of a subspace, by enumerating coefficient vectors.
std::set<Vec> elements(const Subspace& s, const FieldCtx& f) {
  std::set<Vec> out;
  Vec           c(s.dim(), 0);
  while (true) {
    out.insert(combine(s.basis(), c, s.ambient_dim(), f));
    std::size_t k = 0;
    while (k < c.size() && c[k] == f.p() - 1) {
      c[k++] = 0;
    }
    if (k == c.size()) {
      break;
    }
    ++c[k];
  }
  return out;
}

Subspace random_subspace(std::size_t ambient, std::size_t gens,
                         const FieldCtx& f, std::mt19937_64& rng) {
  const auto       m = random_matrix(gens, ambient, f, rng);
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < gens; ++r) {
    rows.emplace_back(m.row(r).begin(), m.row(r).end());
  }
  return Subspace::span(ambient, rows, f);
}

}  // namespace

TEST_SUITE("field") {
  TEST_CASE("field_ctx accepts primes and rejects composites") {
    CHECK(field_ctx(5).p() == 5);
    CHECK(field_ctx(2).p() == 2);
    CHECK_THROWS_AS(field_ctx(4), Error);
    try {
      field_ctx(4);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::NotPrime);
    }
    try {
      field_ctx(1);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::InvalidParameter);
    }
  }

  TEST_CASE("inverses and powers") {
    for (std::uint64_t p : {2, 3, 5, 7, 101}) {
      const FieldCtx f(p);
      for (Residue a = 1; a < f.p(); ++a) {
        CHECK(f.mul(a, f.inv(a)) == 1);
        CHECK(f.pow(a, p - 1) == 1);
      }
      CHECK_THROWS_AS((void)f.inv(0), Error);
    }
  }
}

TEST_SUITE("rref") {
  TEST_CASE("identity is its own echelon form") {
    const FieldCtx f(2);
    const auto     r = rref(GfpMatrix::identity(3), f);
    CHECK(r.form == GfpMatrix::identity(3));
    CHECK(r.rank == 3);
  }

  TEST_CASE("all-ones 2x2 over GF(2)") {
    const FieldCtx  f(2);
    const GfpMatrix m(2, 2, {1, 1, 1, 1});
    const auto      r = rref(m, f);
    CHECK(r.form == GfpMatrix(2, 2, {1, 1, 0, 0}));
    CHECK(r.rank == 1);
    CHECK(r.pivots == std::vector<std::size_t>{0});
  }

  TEST_CASE("rank agrees with the minor-rank oracle on random 6x6 over GF(3)") {
    const FieldCtx  f(3);
    std::mt19937_64 rng(7);
    for (int t = 0; t < 40; ++t) {
      auto m = random_matrix(6, 6, f, rng);
      // Force low rank in some trials.
      if (t % 3 == 0) {
        for (std::size_t c = 0; c < 6; ++c) {
          m(5, c) = f.add(m(0, c), m(1, c));
          m(4, c) = m(2, c);
        }
      }
      CHECK(rank(m, f) == minor_rank(m, f));
    }
  }

  TEST_CASE("rref is idempotent and rank is transpose invariant") {
    std::mt19937_64 rng(11);
    for (std::uint64_t p : {2, 3, 5}) {
      const FieldCtx f(p);
      for (int t = 0; t < 30; ++t) {
        const auto m  = random_matrix(1 + t % 5, 1 + (t * 7) % 6, f, rng);
        const auto r1 = rref(m, f);
        const auto r2 = rref(r1.form, f);
        CHECK(r1.form == r2.form);
        CHECK(r1.rank == rank(m.transpose(), f));
      }
    }
  }

  TEST_CASE("inverse") {
    const FieldCtx  f(5);
    std::mt19937_64 rng(3);
    int             invertible = 0;
    for (int t = 0; t < 30; ++t) {
      const auto m   = random_matrix(4, 4, f, rng);
      const auto inv = inverse(m, f);
      CHECK(inv.has_value() == (rank(m, f) == 4));
      if (inv) {
        ++invertible;
        CHECK(multiply(m, *inv, f) == GfpMatrix::identity(4));
      }
    }
    CHECK(invertible > 0);
  }
}

TEST_SUITE("kernel") {
  TEST_CASE("identity has zero kernel") {
    CHECK(kernel(GfpMatrix::identity(4), FieldCtx(3)).is_zero());
  }

  TEST_CASE("zero 2x3 matrix has full kernel") {
    const auto k = kernel(GfpMatrix(2, 3), FieldCtx(2));
    CHECK(k.dim() == 3);
    CHECK(k == Subspace::full(3));
  }

  TEST_CASE("parity check over GF(2)") {
    const FieldCtx f(2);
    const auto     k = kernel(GfpMatrix(1, 2, {1, 1}), f);
    CHECK(k.dim() == 1);
    CHECK(k.basis().front() == Vec{1, 1});
  }

  TEST_CASE("kernel dimension and membership on random matrices") {
    std::mt19937_64 rng(5);
    for (std::uint64_t p : {2, 3, 7}) {
      const FieldCtx f(p);
      for (int t = 0; t < 30; ++t) {
        const auto m = random_matrix(1 + t % 4, 2 + t % 5, f, rng);
        const auto k = kernel(m, f);
        CHECK(k.dim() == m.cols() - rank(m, f));
        for (const auto& v : k.basis()) {
          CHECK(is_zero(apply(m, v, f)));
        }
      }
    }
  }
}

TEST_SUITE("subspace") {
  TEST_CASE("intersection is idempotent and coordinate axes meet in zero") {
    const FieldCtx  f(3);
    std::mt19937_64 rng(9);
    const auto      s = random_subspace(5, 3, f, rng);
    CHECK(intersect(s, s, f) == s);
    const FieldCtx f2(2);
    const auto     e1 = Subspace::span(2, std::vector<Vec>{{1, 0}}, f2);
    const auto     e2 = Subspace::span(2, std::vector<Vec>{{0, 1}}, f2);
    CHECK(intersect(e1, e2, f2).is_zero());
    CHECK(sum(e1, e2, f2) == Subspace::full(2));
  }

  TEST_CASE("mismatched ambient dimensions are rejected") {
    const FieldCtx f(2);
    try {
      (void)intersect(Subspace(2), Subspace(3), f);
      FAIL("expected DimensionMismatch");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::DimensionMismatch);
    }
  }

  TEST_CASE("Grassmann identity against exhaustive enumeration over GF(3)") {
    const FieldCtx  f(3);
    std::mt19937_64 rng(13);
    for (int t = 0; t < 25; ++t) {
      const std::size_t amb = 2 + t % 5;  // <= 6
      const auto        a   = random_subspace(amb, 1 + t % 3, f, rng);
      const auto        b   = random_subspace(amb, 1 + (t / 2) % 3, f, rng);
      const auto        s   = sum(a, b, f);
      const auto        i   = intersect(a, b, f);
      CHECK(s.dim() + i.dim() == a.dim() + b.dim());

      const auto    ea = elements(a, f);
      const auto    eb = elements(b, f);
      std::set<Vec> both, sums;
      for (const auto& x : ea) {
        if (eb.count(x) != 0) {
          both.insert(x);
        }
        for (const auto& y : eb) {
          sums.insert(axpy(x, 1, y, f));
        }
      }
      CHECK(both == elements(i, f));
      CHECK(sums == elements(s, f));
    }
  }

  TEST_CASE("every basis vector is a member and echelon invariants hold") {
    std::mt19937_64 rng(17);
    for (std::uint64_t p : {2, 5}) {
      const FieldCtx f(p);
      for (int t = 0; t < 20; ++t) {
        const auto s = random_subspace(6, 1 + t % 6, f, rng);
        for (std::size_t k = 0; k < s.dim(); ++k) {
          CHECK(member(s, s.basis()[k], f));
          CHECK(s.basis()[k][s.pivots()[k]] == 1);
          for (std::size_t j = 0; j < s.dim(); ++j) {
            if (j != k) {
              CHECK(s.basis()[j][s.pivots()[k]] == 0);
            }
          }
          if (k > 0) {
            CHECK(s.pivots()[k] > s.pivots()[k - 1]);
          }
        }
        CHECK(equal(s, Subspace::span(6, s.basis(), f)));
      }
    }
  }

  TEST_CASE("coordinates reconstruct the vector") {
    const FieldCtx  f(7);
    std::mt19937_64 rng(19);
    const auto      s = random_subspace(6, 3, f, rng);
    const Vec       c{2, 5, 1};
    const auto      v = combine(s.basis(), std::span<const Residue>(c.data(), s.dim()),
                                6, f);
    const auto      back = s.coordinates(v, f);
    REQUIRE(back.has_value());
    CHECK(combine(s.basis(), *back, 6, f) == v);
  }
}
