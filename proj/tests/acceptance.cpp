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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "modterw/characterize.hpp"
#include "modterw/oracle.hpp"
#include "support.hpp"

using namespace modterw;
using modterw::test::fixture_ids;
using modterw::test::load;

namespace {

constexpr std::uint64_t kPrimes[] = {2, 3, 5, 7};

// Wall-clock bounds in seconds.
constexpr double kAc1Limit = 2.0;
constexpr double kAc2Limit = 1.0;
constexpr double kAc3Limit = 1.0;
constexpr double kAc4Limit = 30.0;
constexpr double kAc5Limit = 60.0;
constexpr double kNoLimit  = 0.0;

// Each body returns an empty string on success, otherwise the first failure.
struct Criterion {
  int                          id;
  std::string                  name;
  double                       limit;
  std::function<std::string()> body;
};

#define EXPECT(cond, msg)                 \
  do {                                    \
    if (!(cond)) {                        \
      std::ostringstream o_;              \
      o_ << msg;                          \
      return o_.str();                    \
    }                                     \
  } while (0)

using Classes = std::vector<std::vector<std::size_t>>;

std::string ac1() {
  const auto s = load("as12-21");
  const auto a = analyze_point(s, FieldCtx(2), 0);
  EXPECT(a.st.sets == (Classes{{0, 1}, {2}, {3, 4}}), "strata differ");
  EXPECT(a.st.epsilon == 2, "epsilon " << a.st.epsilon);
  EXPECT(a.comp.Q.size() == 3, "|Q| " << a.comp.Q.size());
  EXPECT(a.comp.Q[0] == (Classes{{0, 1}}), "Q_0 differs");
  EXPECT(a.comp.Q[1] == (Classes{{2}}), "Q_1 differs");
  EXPECT(a.comp.Q[2] == (Classes{{3}, {4}}), "Q_2 differs");
  EXPECT(a.comp.length == 4, "length " << a.comp.length);
  std::vector<std::size_t> dims;
  for (const auto& f : a.comp.factors) {
    dims.push_back(f.dim());
  }
  EXPECT(dims == (std::vector<std::size_t>{2, 1, 1, 1}), "factor dims differ");
  return {};
}

std::string ac2() {
  const auto s = load("as12-21");
  EXPECT(s.valencies() == (std::vector<std::uint64_t>{1, 1, 2, 4, 4}),
         "valencies differ");
  EXPECT(s.converse(3) == 4, "3' = " << s.converse(3));
  EXPECT(intersection_numbers(s, 4, 4, 3) == 4, "p_44^3 != 4");
  EXPECT(intersection_numbers(s, 3, 3, 4) == 4, "p_33^4 != 4");
  const auto g = closure_digraph(s, FieldCtx(3));
  EXPECT(g.related(3, 4), "3 and 4 in different components at p = 3");
  return {};
}

std::string ac3() {
  const auto     s = validate_axioms(gen_cyclic(5));
  const FieldCtx f(3);
  const auto     ctx = build_context(s, f, 0);
  const auto     T   = generate_algebra(ctx);
  const auto     z   = subtract(triple_product(ctx, 1, 1, 2),
                                triple_product(ctx, 1, 2, 2), f);
  EXPECT(!z.is_zero(), "E1*A1E2* - E1*A2E2* is zero");
  EXPECT(T.contains(z, f), "element not in T");
  const auto ann = annihilator_w0(ctx, T);
  EXPECT(ann.contains(flatten(z), f), "element not in Ann(W_0)");
  const auto rad = radical(T, f);
  EXPECT(rad.is_zero(), "dim Rad = " << rad.dim());
  EXPECT(ann.dim() > rad.dim(), "dim Ann <= dim Rad");
  return {};
}

std::string ac4() {
  for (const auto& id : fixture_ids()) {
    const auto s = load(id);
    const auto r = s.rank();
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) {
        for (std::size_t l = 0; l < r; ++l) {
          const auto a = s.valency(l) * s.p(i, j, l);
          EXPECT(a == s.valency(i) * s.p(l, s.converse(j), i)
                     && a == s.valency(j) * s.p(s.converse(i), l, j),
                 id << ": triangle identity at " << i << j << l);
        }
      }
    }
    for (auto p : kPrimes) {
      const FieldCtx f(p);
      const auto     ctx = build_context(s, f, 0);
      const auto     T   = generate_algebra(ctx);
      const auto [B0, B1] = b0_b1(ctx, T);
      EXPECT(B0.dim() == r * r, id << " p=" << p << ": dim B0 " << B0.dim());
      const auto w  = build_primary(ctx);
      const auto st = strata(s, f);
      EXPECT(w.rep.dim == r, id << " p=" << p << ": dim W_0 " << w.rep.dim);
      const auto W = filtration(w, st, f);
      for (std::size_t n = 0; n < st.sets.size(); ++n) {
        EXPECT(W[n].dim() - W[n + 1].dim() == st.sets[n].size(),
               id << " p=" << p << ": layer " << n);
      }
      const auto B1sq = product_space(s.n(), B1.space, B1.space, f);
      EXPECT(product_space(s.n(), B1sq, B1.space, f).is_zero(),
             id << " p=" << p << ": B1^3 != O");
      EXPECT(is_subspace_of(B1.space, radical(T, f), f),
             id << " p=" << p << ": B1 not in Rad");
    }
  }
  return {};
}

std::string ac5() {
  std::size_t points = 0;
  for (const auto& id : fixture_ids()) {
    const auto s = load(id);
    for (auto p : kPrimes) {
      for (std::size_t x = 0; x < s.n(); ++x) {
        const auto a = analyze_point(s, FieldCtx(p), x);
        // Recomputed without the cross-checks of analyze_point.
        const auto items = evaluate_items(a).computed();
        for (bool b : items) {
          EXPECT(b == a.st.p_prime_valenced,
                 id << " p=" << p << " x=" << x << ": items disagree");
        }
        ++points;
      }
    }
  }
  EXPECT(points > 0, "no points analysed");
  return {};
}

std::string ac6() {
  auto unit = [](std::size_t r, std::size_t c) {
    GfpMatrix m(2, 2);
    m(r, c) = 1;
    return m;
  };
  for (auto p : kPrimes) {
    const FieldCtx f(p);
    const auto     upper = AlgebraBasis::from_matrices(
        2, std::vector<GfpMatrix>{unit(0, 0), unit(0, 1), unit(1, 1)}, f);
    const auto ru = radical(upper, f);
    EXPECT(ru.dim() == 1, "upper triangular p=" << p << ": " << ru.dim());
    check_radical(upper, ru, f);
    const auto full = AlgebraBasis::from_matrices(
        2,
        std::vector<GfpMatrix>{unit(0, 0), unit(0, 1), unit(1, 0), unit(1, 1)},
        f);
    const auto rf = radical(full, f);
    EXPECT(rf.is_zero(), "M_2 p=" << p << ": " << rf.dim());
    check_radical(full, rf, f);
  }
  const FieldCtx f(2);
  const auto     ctx = build_context(validate_axioms(gen_thin(cyclic_group_table(2))),
                                     f, 0);
  const auto     A = AlgebraBasis::from_matrices(
      2, std::vector<GfpMatrix>{ctx.A(0), ctx.A(1)}, f);
  EXPECT(A.closed_under_product, "span{I, A_1} not closed");
  const auto R = radical(A, f);
  EXPECT(R.dim() == 1, "C_2 over GF(2): " << R.dim());
  check_radical(A, R, f);
  return {};
}

std::string ac7() {
  std::size_t compared = 0;
  for (const auto& id : fixture_ids()) {
    const auto s = load(id);
    if (s.d() > 3) {
      continue;
    }
    for (std::uint64_t p : {2, 3}) {
      const FieldCtx f(p);
      const auto     a   = analyze_point(s, f, 0);
      const auto     lat = submodule_lattice(a.w.rep, f);
      std::vector<std::size_t> dims;
      for (const auto& fac : a.comp.factors) {
        dims.push_back(fac.dim());
      }
      std::sort(dims.begin(), dims.end());
      EXPECT(lat.length == a.comp.length, id << " p=" << p << ": length");
      EXPECT(lat.factor_dims == dims, id << " p=" << p << ": factor dims");
      EXPECT(lat.uniserial == a.uniserial, id << " p=" << p << ": uniserial");
      ++compared;
    }
  }
  EXPECT(compared > 0, "no fixture with d <= 3");
  return {};
}

std::string ac8() {
  for (const auto& id : fixture_ids()) {
    const auto s = load(id);
    for (auto p : kPrimes) {
      const FieldCtx f(p);
      const auto     ctx = build_context(s, f, 0);
      const auto     st  = strata(s, f);
      const auto     w   = build_primary(ctx);
      const auto     r   = is_selfcontragredient(w.rep, f);
      EXPECT((r.verdict == SelfContraVerdict::Yes) == st.p_prime_valenced,
             id << " p=" << p << ": W_0 verdict");
      const auto comp = composition_factors(w, st, closure_digraph(s, f), f);
      for (const auto& fac : comp.factors) {
        EXPECT(verify_factor_duality(w, s, fac, f),
               id << " p=" << p << ": factor duality at level " << fac.level);
      }
    }
  }
  return {};
}

std::string ac9() {
  std::size_t witnessed = 0;
  for (const auto& id : fixture_ids()) {
    const auto s = load(id);
    for (auto p : kPrimes) {
      const FieldCtx f(p);
      const auto     ctx = build_context(s, f, 0);
      const auto     st  = strata(s, f);
      if (!st.p_prime_valenced) {
        const auto i = remark_witness(ctx);
        EXPECT(i.has_value(), id << " p=" << p << ": no square witness");
        EXPECT(s.valency(*i) % p == 0, id << " p=" << p << ": p does not divide k");
        const auto e = ctx.ejE(*i, *i);
        const auto q = add(ctx.ejE(*i, 0), ctx.ejE(0, *i), f);
        EXPECT(multiply(q, q, f) == e && !e.is_zero(),
               id << " p=" << p << ": witness fails");
        ++witnessed;
      }
      if (radical(generate_algebra(ctx), f).is_zero()) {
        EXPECT(st.p_prime_valenced, id << " p=" << p << ": Rad = O");
      }
    }
  }
  EXPECT(witnessed > 0, "no non-p'-valenced case in the corpus");
  return {};
}

std::string ac10() {
  const std::vector<std::string> args{"batch", "--dir",
                                      modterw::test::fixture_dir(), "--primes",
                                      "2,3,5,7"};
  std::ostringstream o1, e1, o2, e2;
  const int          c1 = cli::run_cli(args, o1, e1);
  const int          c2 = cli::run_cli(args, o2, e2);
  EXPECT(c1 == cli::kOk && c2 == cli::kOk, "batch exit " << c1 << "/" << c2);
  EXPECT(!o1.str().empty(), "empty batch output");
  EXPECT(o1.str() == o2.str(), "batch outputs differ");
  return {};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "order-12 example at p=2", kAc1Limit, ac1},
      {2, "order-12 example at p=3", kAc2Limit, ac2},
      {3, "cyclic 5 example at p=3", kAc3Limit, ac3},
      {4, "structural constants sweep", kAc4Limit, ac4},
      {5, "theorem consistency sweep", kAc5Limit, ac5},
      {6, "radical oracle battery", kNoLimit, ac6},
      {7, "submodule lattice equivalence", kNoLimit, ac7},
      {8, "self-contragredient suite", kNoLimit, ac8},
      {9, "square witness and Rad = O", kNoLimit, ac9},
      {10, "batch determinism", kNoLimit, ac10},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto  start = std::chrono::steady_clock::now();
    std::string detail;
    try {
      detail = c.body();
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    if (detail.empty() && c.limit > 0 && secs > c.limit) {
      std::ostringstream o;
      o << "took longer than " << c.limit << " s";
      detail = o.str();
    }
    const bool ok = detail.empty();
    failed += ok ? 0 : 1;
    std::printf("AC%-2d %s  %-32s %8.3f s%s%s\n", c.id, ok ? "PASS" : "FAIL",
                c.name.c_str(), secs, ok ? "" : "  ", detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
