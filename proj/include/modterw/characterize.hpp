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

// The p'-valenced characterizations, each evaluated by its own computation,
// and the full per-base-point analysis pipeline.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "modterw/primary.hpp"
#include "modterw/talg.hpp"

namespace modterw {

inline constexpr const char* kImpliedProvenance = "by theorem equivalence";

struct CharReport {
  bool i_pprime             = false;
  bool ii_b0_unital_central = false;
  bool iii_complement_ideal = false;
  bool iv_b0_simple         = false;
  bool v_ann_thin_kills     = false;
  bool vi_rad_thin_kills    = false;
  bool viii_w0_irreducible  = false;
  bool ix_w0_selfcontra     = false;
  // Not computed; copied from i_pprime.
  bool vii_implied = false;
  bool x_implied   = false;
  bool xi_implied  = false;
  bool consistent  = false;

  [[nodiscard]] std::vector<bool> computed() const {
    return {i_pprime,          ii_b0_unital_central, iii_complement_ideal,
            iv_b0_simple,      v_ann_thin_kills,     vi_rad_thin_kills,
            viii_w0_irreducible, ix_w0_selfcontra};
  }
};

struct CorollaryReport {
  bool b0_simple_unital = false;
  bool rad_thin_kills   = false;
  bool iii_implied      = false;
  bool consistent       = false;
};

/// Everything computed for one (scheme, p, base point).
struct PointAnalysis {
  TalgContext              ctx;
  Strata                   st{};
  AlgebraBasis             T{};
  AlgebraBasis             B0{};
  AlgebraBasis             B1{};
  Subspace                 rad{};
  RadicalDiagnostics       rad_diag{};
  Subspace                 ann{};
  std::optional<GfpMatrix> e_b0{};
  PrimaryModule            w{};
  ClosureDigraph           digraph{};
  CompositionReport        comp{};
  bool                     uniserial = false;
  SelfContraResult         w0_dual{};
  CharReport               chars{};
  CorollaryReport          corollary{};
};

/// Identity element of span(B), or nullopt if the span has none.
std::optional<GfpMatrix> algebra_identity(const AlgebraBasis& B,
                                          const FieldCtx&     f);

/// {t in T : t b = b t = O for all b in B}.
Subspace two_sided_annihilator(const AlgebraBasis& T, const AlgebraBasis& B,
                               const FieldCtx& f);

/// Center of span(B) as a subspace of flattened matrices.
Subspace center(const AlgebraBasis& B, const FieldCtx& f);

/// Every basis element Z of `ideal` satisfies E_i* Z = Z E_i* = O for all
/// thin i.
bool thin_kills(const TalgContext& ctx, const Strata& st,
                const Subspace& ideal);

/// Evaluates each item from its own computation without comparing them.
CharReport evaluate_items(const PointAnalysis& a);

/// evaluate_items plus the cross-checks; throws InternalInconsistency when
/// any two computed items disagree.
CharReport check_equivalences(const PointAnalysis& a);

/// Throws InternalInconsistency on disagreement with `chars`.
CorollaryReport check_corollary(const PointAnalysis& a,
                                const CharReport&    chars);

/// Some i with p | k_i and (E_i*JE_0* + E_0*JE_i*)^2 = E_i*JE_i* != O, or
/// nullopt when there is none.
std::optional<std::size_t> remark_witness(const TalgContext& ctx);

/// Runs every stage for base point x and all their consistency checks.
PointAnalysis analyze_point(const SchemeData& s, const FieldCtx& f,
                            std::size_t x);

}  // namespace modterw
