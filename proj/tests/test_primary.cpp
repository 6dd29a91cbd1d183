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

#include <algorithm>
#include <random>

#include "modterw/oracle.hpp"
#include "modterw/primary.hpp"
#include "support.hpp"

using namespace modterw;
using modterw::test::fixture_ids;
using modterw::test::load;

namespace {

struct Setup {
  SchemeData        s;
  FieldCtx          f;
  TalgContext       ctx;
  Strata            st;
  PrimaryModule     w;
  ClosureDigraph    g;
  CompositionReport comp;

  Setup(const std::string& id, std::uint64_t p, std::size_t x = 0)
      : s(load(id)),
        f(p),
        ctx(build_context(s, f, x)),
        st(strata(s, f)),
        w(build_primary(ctx)),
        g(closure_digraph(s, f)),
        comp(composition_factors(w, st, g, f)) {}
};

// Mutual reachability from Floyd-Warshall on the adjacency relation.
std::vector<std::vector<bool>> reach(
    const std::vector<std::vector<std::size_t>>& out) {
  const std::size_t              n = out.size();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (std::size_t v = 0; v < n; ++v) {
    r[v][v] = true;
    for (auto u : out[v]) {
      r[v][u] = true;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (r[i][k] && r[k][j]) {
          r[i][j] = true;
        }
      }
    }
  }
  return r;
}

std::vector<std::size_t> factor_dims(const CompositionReport& c) {
  std::vector<std::size_t> d;
  for (const auto& fac : c.factors) {
    d.push_back(fac.dim());
  }
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

TEST_SUITE("primary module") {
  TEST_CASE("dimension, J action and basis independence on every fixture") {
    for (const auto& id : fixture_ids()) {
      for (std::uint64_t p : {2, 3, 5}) {
        const Setup t(id, p);
        CHECK(t.w.rep.dim == t.s.rank());
        CHECK(t.w.basis.size() == t.s.rank());
        CHECK(Subspace::span(t.s.n(), t.w.basis, t.f).dim() == t.s.rank());
        for (std::size_t i = 0; i < t.s.rank(); ++i) {
          const auto k = t.f.reduce(static_cast<std::int64_t>(t.s.valency(i)));
          Vec        expect(t.s.n(), k);
          CHECK(apply(t.ctx.J(), t.ctx.shell(i), t.f) == expect);
        }
      }
    }
  }

  TEST_CASE("one-point scheme gives the trivial 1-dimensional module") {
    const Setup t("one-point", 5);
    CHECK(t.w.rep.dim == 1);
    for (const auto& a : t.w.rep.action) {
      CHECK(a == GfpMatrix::identity(1));
    }
  }

  TEST_CASE("E_i* A_j E_l* acts by a scaled matrix unit") {
    const Setup t("as12-21", 3);
    const auto  r = t.s.rank();
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) {
        for (std::size_t l = 0; l < r; ++l) {
          const auto m = w0_action(t.ctx, triple_product(t.ctx, i, j, l));
          GfpMatrix  expect(r, r);
          expect(i, l) = t.f.reduce(
              static_cast<std::int64_t>(t.s.p(l, t.s.converse(j), i)));
          CHECK(m == expect);
        }
      }
    }
  }

  TEST_CASE("w0_coordinates rejects vectors outside W_0") {
    const Setup t("z5", 2);
    Vec         v(5, 0);
    v[1] = 1;  // a single point of the shell
    CHECK_FALSE(w0_coordinates(t.ctx, v).has_value());
    const auto c = w0_coordinates(t.ctx, t.ctx.ones());
    REQUIRE(c.has_value());
    CHECK(*c == Vec{1, 1, 1});
  }
}

TEST_SUITE("filtration") {
  TEST_CASE("order-12 fixture at p = 2 has dims (5,3,2,0)") {
    const Setup t("as12-21", 2);
    const auto  W = filtration(t.w, t.st, t.f);
    REQUIRE(W.size() == 4);
    CHECK(W[0].dim() == 5);
    CHECK(W[1].dim() == 3);
    CHECK(W[2].dim() == 2);
    CHECK(W[3].dim() == 0);
  }

  TEST_CASE("chain, invariance and layer dimensions on every fixture") {
    for (const auto& id : fixture_ids()) {
      for (std::uint64_t p : {2, 3, 5, 7}) {
        CAPTURE(id);
        CAPTURE(p);
        const Setup t(id, p);
        const auto  W = filtration(t.w, t.st, t.f);
        REQUIRE(W.size() == t.st.epsilon + 2);
        CHECK(W.back().is_zero());
        CHECK(W.front().dim() == t.s.rank());
        for (std::size_t n = 0; n + 1 < W.size(); ++n) {
          CHECK(is_subspace_of(W[n + 1], W[n], t.f));
          CHECK(W[n].dim() - W[n + 1].dim() == t.st.sets[n].size());
          CHECK(is_invariant(t.w.rep, W[n], t.f));
        }
        if (t.st.p_prime_valenced) {
          CHECK(W[1].is_zero());
        }
      }
    }
  }

  TEST_CASE("Rad(T) W_0 = W_1 and W_1 is the unique maximal submodule") {
    for (const auto& id : fixture_ids()) {
      for (std::uint64_t p : {2, 3}) {
        CAPTURE(id);
        CAPTURE(p);
        const Setup t(id, p);
        const auto  R = radical(generate_algebra(t.ctx), t.f);
        EchelonBuilder b(t.s.rank(), t.f);
        for (const auto& z : R.basis()) {
          const auto m = w0_action(t.ctx, unflatten(t.s.n(), z));
          for (const auto& v : t.comp.W[0].basis()) {
            b.insert(apply(m, v, t.f));
          }
        }
        CHECK(b.finish() == t.comp.W[1]);
        // Any vector outside W_1 generates W_0.
        for (std::size_t i : t.st.sets[0]) {
          Vec e(t.s.rank(), 0);
          e[i] = 1;
          CHECK(cyclic_submodule(t.w.rep, e, t.f).dim() == t.s.rank());
        }
      }
    }
  }
}

TEST_SUITE("digraph") {
  TEST_CASE("self-loops and the order-12 fixture at p = 2 and p = 3") {
    const auto s = load("as12-21");
    for (std::uint64_t p : {2, 3, 5}) {
      const auto g = closure_digraph(s, FieldCtx(p));
      for (std::size_t i = 0; i < s.rank(); ++i) {
        CHECK(g.has_edge(i, i));
        CHECK(g.related(i, i));
      }
    }
    CHECK(closure_digraph(s, FieldCtx(3)).related(3, 4));
    CHECK_FALSE(closure_digraph(s, FieldCtx(2)).related(3, 4));
  }

  TEST_CASE("edges follow the intersection numbers") {
    for (const auto& id : {"as12-21", "petersen", "z6"}) {
      const auto s = load(id);
      for (std::uint64_t p : {2, 3}) {
        const auto g = closure_digraph(s, FieldCtx(p));
        for (std::size_t i = 0; i < s.rank(); ++i) {
          for (std::size_t l = 0; l < s.rank(); ++l) {
            bool e = false;
            for (std::size_t b = 0; b < s.rank(); ++b) {
              e = e || s.p(l, b, i) % p != 0;
            }
            CHECK(g.has_edge(i, l) == e);
          }
        }
      }
    }
  }

  TEST_CASE("Tarjan agrees with mutual reachability on random digraphs") {
    std::mt19937_64 rng(123);
    for (int t = 0; t < 200; ++t) {
      const std::size_t                     n = 1 + t % 12;
      std::vector<std::vector<std::size_t>> out(n);
      const auto density = 1 + t % 4;
      for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t u = 0; u < n; ++u) {
          if (rng() % (2 * n) < density) {
            out[v].push_back(u);
          }
        }
      }
      std::size_t count = 0;
      const auto  scc   = tarjan_scc(out, &count);
      const auto  r     = reach(out);
      std::vector<std::size_t> first;
      for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t u = 0; u < n; ++u) {
          CHECK((scc[v] == scc[u]) == (r[v][u] && r[u][v]));
        }
        if (std::find(first.begin(), first.end(), scc[v]) == first.end()) {
          first.push_back(scc[v]);
        }
      }
      CHECK(first.size() == count);
      // Ids appear in order of least vertex: 0, 1, 2, ...
      for (std::size_t k = 0; k < first.size(); ++k) {
        CHECK(first[k] == k);
      }
    }
  }
}

TEST_SUITE("composition") {
  TEST_CASE("order-12 fixture at p = 2") {
    const Setup t("as12-21", 2);
    using Classes = std::vector<std::vector<std::size_t>>;
    CHECK(t.comp.epsilon == 2);
    REQUIRE(t.comp.Q.size() == 3);
    CHECK(t.comp.Q[0] == Classes{{0, 1}});
    CHECK(t.comp.Q[1] == Classes{{2}});
    CHECK(t.comp.Q[2] == Classes{{3}, {4}});
    CHECK(t.comp.length == 4);
    std::vector<std::size_t> dims;
    for (const auto& fac : t.comp.factors) {
      dims.push_back(fac.dim());
    }
    CHECK(dims == std::vector<std::size_t>{2, 1, 1, 1});
  }

  TEST_CASE("p'-valenced schemes have a single factor") {
    for (const auto& [id, p] : std::vector<std::pair<std::string, std::uint64_t>>{
             {"z5", 3}, {"as12-21", 5}, {"petersen", 7}, {"thin-klein", 2}}) {
      const Setup t(id, p);
      REQUIRE(t.st.p_prime_valenced);
      CHECK(t.comp.length == 1);
      REQUIRE(t.comp.Q.size() == 1);
      CHECK(t.comp.Q[0].size() == 1);
      CHECK(t.comp.Q[0][0] == t.st.sets[0]);
    }
  }

  TEST_CASE("cyclic 5 at p = 2 matches the lattice oracle") {
    const Setup t("z5", 2);
    using Classes = std::vector<std::vector<std::size_t>>;
    CHECK(t.comp.Q[0] == Classes{{0}});
    CHECK(t.comp.Q[1] == Classes{{1, 2}});
    const auto lat = submodule_lattice(t.w.rep, t.f);
    CHECK(lat.length == t.comp.length);
    CHECK(lat.factor_dims == factor_dims(t.comp));
    CHECK(lat.submodules == 3);
  }

  TEST_CASE("Q_n partitions S_n and Q_0 is a single class") {
    for (const auto& id : fixture_ids()) {
      for (std::uint64_t p : {2, 3, 5, 7}) {
        const Setup t(id, p);
        CHECK(t.comp.Q[0].size() == 1);
        std::size_t total = 0;
        for (std::size_t n = 0; n < t.comp.Q.size(); ++n) {
          std::vector<std::size_t> joined;
          for (const auto& c : t.comp.Q[n]) {
            joined.insert(joined.end(), c.begin(), c.end());
            for (auto i : c) {
              CHECK(t.g.related(i, c.front()));
            }
          }
          std::sort(joined.begin(), joined.end());
          CHECK(joined == t.st.sets[n]);
          total += t.comp.Q[n].size();
        }
        CHECK(total == t.comp.length);
      }
    }
  }

  TEST_CASE("lattice oracle agrees for d <= 3 and p in {2, 3}") {
    for (const auto& id : fixture_ids()) {
      for (std::uint64_t p : {2, 3}) {
        const Setup t(id, p);
        if (t.s.d() > 3) {
          continue;
        }
        CAPTURE(id);
        CAPTURE(p);
        const auto lat = submodule_lattice(t.w.rep, t.f);
        const auto R   = radical(generate_algebra(t.ctx), t.f);
        CHECK(lat.length == t.comp.length);
        CHECK(lat.factor_dims == factor_dims(t.comp));
        CHECK(lat.uniserial == uniserial_check(t.ctx, t.comp, R));
      }
    }
  }

  TEST_CASE("no factor repeats and every factor rep is irreducible") {
    for (const auto& id : fixture_ids()) {
      for (std::uint64_t p : {2, 3}) {
        const Setup t(id, p);
        for (std::size_t a = 0; a < t.comp.factors.size(); ++a) {
          for (std::size_t b = a + 1; b < t.comp.factors.size(); ++b) {
            CHECK_FALSE(t.comp.factors[a] == t.comp.factors[b]);
          }
          const auto rep = factor_rep(t.w, t.comp.factors[a]);
          CHECK(rep.dim == t.comp.factors[a].dim());
          if (rep.dim <= 4) {
            CHECK(submodule_lattice(rep, t.f).submodules == 2);
          }
        }
      }
    }
  }
}

TEST_SUITE("uniserial") {
  TEST_CASE("d = 1 and thin schemes are uniserial") {
    for (const auto& id : {"thin-z2", "z3", "z4", "thin-klein", "thin-z3"}) {
      for (std::uint64_t p : {2, 3}) {
        const Setup t(id, p);
        const auto  R = radical(generate_algebra(t.ctx), t.f);
        CHECK(uniserial_check(t.ctx, t.comp, R));
      }
    }
  }

  TEST_CASE("order-12 fixture at p = 2 is not uniserial") {
    const Setup t("as12-21", 2);
    const auto  R = radical(generate_algebra(t.ctx), t.f);
    CHECK_FALSE(uniserial_check(t.ctx, t.comp, R));
  }
}

TEST_SUITE("isomorphisms") {
  TEST_CASE("M_l is isomorphic to W_0 and B0 decomposes") {
    for (const auto& id : {"z5", "as12-21", "hamming-2-2", "one-point"}) {
      for (std::uint64_t p : {2, 3}) {
        const Setup t(id, p);
        for (std::size_t l = 0; l < t.s.rank(); ++l) {
          CHECK(verify_ml_iso(t.ctx, t.w, l));
        }
        const auto T = generate_algebra(t.ctx);
        CHECK(verify_b0_decomposition(t.ctx, b0_b1(t.ctx, T).first));
      }
    }
    const Setup t("z5", 2);
    try {
      (void)verify_ml_iso(t.ctx, t.w, 3);
      FAIL("expected IndexOutOfRange");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::IndexOutOfRange);
    }
  }
}

TEST_SUITE("duality") {
  TEST_CASE("contragredient of the identity generator is the identity") {
    const Setup t("as12-21", 2);
    const auto  c = contragredient(t.w.rep);
    CHECK(c.dim == t.w.rep.dim);
    CHECK(c.action[0] == GfpMatrix::identity(t.w.rep.dim));
  }

  TEST_CASE("double contragredient is the original module") {
    for (const auto& id : {"as12-21", "z6", "hamming-2-3"}) {
      const Setup t(id, 3);
      const auto  cc = contragredient(contragredient(t.w.rep));
      CHECK(cc.action == t.w.rep.action);
    }
  }

  TEST_CASE("trivial 1-dimensional module is self-contragredient") {
    const FieldCtx  f(5);
    const ModuleRep m{1, {GfpMatrix::identity(1)}, {0}};
    CHECK(is_selfcontragredient(m, f).verdict == SelfContraVerdict::Yes);
  }

  TEST_CASE("a module whose dual swaps two generators is not self-dual") {
    const FieldCtx  f(3);
    GfpMatrix       N(2, 2);
    N(0, 1) = 1;
    const ModuleRep m{2, {N, GfpMatrix(2, 2)}, {1, 0}};
    const auto      r = is_selfcontragredient(m, f);
    CHECK(r.verdict == SelfContraVerdict::No);
    CHECK(r.exhaustive);
  }

  TEST_CASE("hom space of a module to itself contains the identity") {
    const Setup t("petersen", 2);
    const auto  H = hom_space(t.w.rep, t.w.rep, t.f);
    CHECK(H.contains(flatten(GfpMatrix::identity(t.w.rep.dim)), t.f));
  }

  TEST_CASE("W_0 is self-contragredient iff p'-valenced") {
    for (const auto& id : fixture_ids()) {
      for (std::uint64_t p : {2, 3, 5, 7}) {
        CAPTURE(id);
        CAPTURE(p);
        const Setup t(id, p);
        const auto  r = is_selfcontragredient(t.w.rep, t.f);
        CHECK((r.verdict == SelfContraVerdict::Yes) == t.st.p_prime_valenced);
        CHECK(r.exhaustive);
        if (r.witness) {
          const auto dual = contragredient(t.w.rep);
          for (std::size_t g = 0; g < t.w.rep.action.size(); ++g) {
            CHECK(multiply(*r.witness, t.w.rep.action[g], t.f)
                  == multiply(dual.action[g], *r.witness, t.f));
          }
        }
      }
    }
    const Setup h("hamming-2-2", 2);
    CHECK(selfcontragredient_w0(h.w, h.st, h.f).verdict == SelfContraVerdict::No);
    const Setup z("z5", 3);
    CHECK(selfcontragredient_w0(z.w, z.st, z.f).verdict == SelfContraVerdict::Yes);
  }

  TEST_CASE("every factor is self-dual via the valency diagonal") {
    for (const auto& id : fixture_ids()) {
      for (std::uint64_t p : {2, 3, 5, 7}) {
        const Setup t(id, p);
        for (const auto& fac : t.comp.factors) {
          CHECK(verify_factor_duality(t.w, t.s, fac, t.f));
          CHECK(is_selfcontragredient(factor_rep(t.w, fac), t.f).verdict
                == SelfContraVerdict::Yes);
        }
      }
    }
  }
}
