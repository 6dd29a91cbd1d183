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

// Slow, direct recomputations used to cross-check the fast paths.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "modterw/primary.hpp"
#include "modterw/scheme.hpp"
#include "modterw/talg.hpp"

namespace modterw {

struct BruteAxioms {
  bool                       ok = false;
  std::vector<std::uint64_t> valencies;
  std::vector<std::uint64_t> tensor;  // (i * r + j) * r + l
};

/// Counts, for every pair (x, y) and every (i, j), the z with r(x,z) = i and
/// r(z,y) = j, then checks the three axioms from those counts.
BruteAxioms brute_force_axioms(const RelationTable& t);

/// Span of all generator words, grown by left multiplication only.
std::size_t word_closure_dim(const TalgContext& ctx);

struct LatticeSummary {
  std::size_t              submodules = 0;
  std::size_t              length     = 0;
  std::vector<std::size_t> factor_dims;  // sorted
  bool                     uniserial = false;
};

/// Number of subspaces of GF(p)^m, saturating at `cap`.
std::uint64_t subspace_count(std::size_t m, std::uint64_t p, std::uint64_t cap);

/// Enumerates every subspace of GF(p)^dim and keeps the invariant ones.
LatticeSummary submodule_lattice(const ModuleRep& m, const FieldCtx& f);

/// True iff M^k = O for some k.
bool is_nilpotent(const GfpMatrix& m, const FieldCtx& f);

/// dim Rad(A) from {a : a b nilpotent for every b in A}, enumerating all
/// pairs; nullopt when p^(2 dim A) exceeds `max_pairs`.
std::optional<std::size_t> brute_radical_dim(const AlgebraBasis& A,
                                             const FieldCtx&     f,
                                             std::uint64_t max_pairs);

}  // namespace modterw
