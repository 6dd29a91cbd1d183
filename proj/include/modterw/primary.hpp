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

// The primary module W_0 = span{E_i* 1}, its filtration, composition
// factors and duality.
//
// W_0 is handled in the coordinates of its basis E_0* 1, ..., E_d* 1, so
// every module here is a ModuleRep: one small action matrix per generator
// of T(x), in the generator order of TalgContext.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "modterw/ffmat.hpp"
#include "modterw/scheme.hpp"
#include "modterw/talg.hpp"

namespace modterw {

struct ModuleRep {
  std::size_t              dim = 0;
  std::vector<GfpMatrix>   action;     // per generator, dim x dim
  std::vector<std::size_t> transpose;  // generator -> generator of g^t
};

struct PrimaryModule {
  ModuleRep        rep;
  std::vector<Vec> basis;  // E_i* 1 in GF(p)^n
};

/// Action of A_j is p_{h j'}^i mod p at (i, h); E_j* acts as the coordinate
/// projection. Both are checked against the n x n matrices.
PrimaryModule build_primary(const TalgContext& ctx);

/// Coordinates of v in the basis E_i* 1, or nullopt if v is not in W_0.
std::optional<Vec> w0_coordinates(const TalgContext& ctx, const Vec& v);

/// Matrix of Z acting on W_0. Throws InternalInconsistency if Z does not
/// preserve W_0.
GfpMatrix w0_action(const TalgContext& ctx, const GfpMatrix& Z);

bool is_invariant(const ModuleRep& m, const Subspace& s, const FieldCtx& f);

/// Smallest submodule containing v.
Subspace cyclic_submodule(const ModuleRep& m, const Vec& v, const FieldCtx& f);

/// W_n = span{E_i* 1 : p^n | k_i} for n = 0 .. epsilon + 1, in W_0
/// coordinates; each is checked to be a submodule.
std::vector<Subspace> filtration(const PrimaryModule& w, const Strata& st,
                                 const FieldCtx& f);

/// Edge i -> l iff p does not divide p_{l b}^i for some b.
struct ClosureDigraph {
  std::size_t                           vertices = 0;
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t>              scc;  // numbered by least member
  std::size_t                           scc_count = 0;

  [[nodiscard]] bool has_edge(std::size_t i, std::size_t l) const;
  [[nodiscard]] bool related(std::size_t i, std::size_t j) const {
    return scc.at(i) == scc.at(j);
  }
};

ClosureDigraph closure_digraph(const SchemeData& s, const FieldCtx& f);

/// Strongly connected components by Tarjan's algorithm; ids are assigned
/// in order of the least vertex of each component.
std::vector<std::size_t> tarjan_scc(
    const std::vector<std::vector<std::size_t>>& out, std::size_t* count);

struct Factor {
  unsigned                 level = 0;  // n
  std::vector<std::size_t> cls;        // C, sorted
  [[nodiscard]] std::size_t dim() const noexcept { return cls.size(); }
  friend bool operator==(const Factor&, const Factor&) = default;
};

struct CompositionReport {
  std::size_t                                         epsilon = 0;
  std::vector<std::vector<std::size_t>>               S;  // S_0 .. S_eps
  std::vector<Subspace>                               W;  // W_0 .. W_{eps+1}
  std::vector<std::vector<std::vector<std::size_t>>> Q;  // Q_0 .. Q_eps
  std::vector<Factor>                                 factors;
  std::size_t                                         length = 0;
};

/// Q_n is the restriction of the global SCC partition to S_n. Each class
/// is checked to span a submodule of W_n/W_{n+1} generated by any one of
/// its basis vectors.
CompositionReport composition_factors(const PrimaryModule& w,
                                      const Strata& st, const ClosureDigraph& g,
                                      const FieldCtx& f);

/// The action of the factor Irr_n(C) in the basis E_i* 1 + W_{n+1}, i in C.
ModuleRep factor_rep(const PrimaryModule& w, const Factor& c);

/// True iff every nonzero layer W_n/W_{n+1} has one class and
/// Rad(T) W_n = W_{n+1}. `rad` is a subspace of flattened n x n matrices.
bool uniserial_check(const TalgContext& ctx, const CompositionReport& rep,
                     const Subspace& rad);

/// E_i* 1 -> E_i* J E_l* intertwines every generator. Throws
/// IndexOutOfRange.
bool verify_ml_iso(const TalgContext& ctx, const PrimaryModule& w,
                   std::size_t l);

/// B0 is the direct sum of M_l = span{E_i* J E_l* : i} over l.
bool verify_b0_decomposition(const TalgContext& ctx, const AlgebraBasis& B0);

/// rho°(g) = rho(g^t)^T.
ModuleRep contragredient(const ModuleRep& m);

/// {Phi : Phi rho(g) = rho'(g) Phi for all g}, as flattened dim x dim
/// matrices.
Subspace hom_space(const ModuleRep& a, const ModuleRep& b, const FieldCtx& f);

enum class SelfContraVerdict { Yes, No, ProbablyNot };

struct SelfContraResult {
  SelfContraVerdict        verdict    = SelfContraVerdict::No;
  std::size_t              hom_dim    = 0;
  bool                     exhaustive = true;
  std::optional<GfpMatrix> witness;
};

inline constexpr std::uint64_t kProjectiveEnumerationLimit = 100000;
inline constexpr std::size_t   kRandomSamples              = 256;

/// Looks for an invertible element of hom_space(m, m°): exhaustively over
/// projective points when there are at most kProjectiveEnumerationLimit of
/// them, otherwise by kRandomSamples seeded samples.
SelfContraResult is_selfcontragredient(const ModuleRep& m, const FieldCtx& f,
                                       std::uint64_t seed = 0);

/// is_selfcontragredient on W_0, cross-checked against the p'-valenced flag.
SelfContraResult selfcontragredient_w0(const PrimaryModule& w,
                                       const Strata& st, const FieldCtx& f);

/// Phi = diag(q_i mod p) with k_i = p^n q_i; true iff it is an invertible
/// intertwiner from Irr_n(C) to its contragredient.
bool verify_factor_duality(const PrimaryModule& w, const SchemeData& s,
                           const Factor& c, const FieldCtx& f);

}  // namespace modterw
