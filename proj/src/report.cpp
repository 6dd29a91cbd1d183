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

#include "modterw/report.hpp"

#include <sstream>

namespace modterw {

using nlohmann::json;

std::string verdict_name(SelfContraVerdict v) {
  switch (v) {
    case SelfContraVerdict::Yes:
      return "yes";
    case SelfContraVerdict::No:
      return "no";
    case SelfContraVerdict::ProbablyNot:
      return "probably not";
  }
  return "unknown";
}

namespace {

json implied(bool v) {
  return json{{"value", v}, {"provenance", kImpliedProvenance}};
}

json char_json(const CharReport& c) {
  return json{
      {"i_pprime", c.i_pprime},
      {"ii_b0_unital_central", c.ii_b0_unital_central},
      {"iii_complement_ideal", c.iii_complement_ideal},
      {"iv_b0_simple", c.iv_b0_simple},
      {"v_ann_thin_kills", c.v_ann_thin_kills},
      {"vi_rad_thin_kills", c.vi_rad_thin_kills},
      {"vii", implied(c.vii_implied)},
      {"viii_w0_irreducible", c.viii_w0_irreducible},
      {"ix_w0_selfcontra", c.ix_w0_selfcontra},
      {"x", implied(c.x_implied)},
      {"xi", implied(c.xi_implied)},
      {"consistent", c.consistent},
  };
}

}  // namespace

json analysis_report(const std::string& scheme_id, const SchemeData& s,
                     std::span<const PointAnalysis> points) {
  ensure(!points.empty(), "report needs at least one base point");
  const auto& a = points.front();
  json        r;
  r["schema"]     = kReportSchema;
  r["scheme_id"]  = scheme_id;
  r["n"]          = s.n();
  r["d"]          = s.d();
  r["valencies"]  = s.valencies();
  r["prime"]      = a.ctx.field().p();
  r["dim_B0"]     = a.B0.dim();
  r["dim_B1"]     = a.B1.dim();
  r["strata"]     = json{{"sets", a.st.sets},
                         {"epsilon", a.st.epsilon},
                         {"thin", a.st.thin},
                         {"p_prime_valenced", a.st.p_prime_valenced}};
  json dims = json::array();
  for (const auto& W : a.comp.W) {
    dims.push_back(W.dim());
  }
  r["filtration_dims"] = dims;
  r["Q"]               = a.comp.Q;
  json comp            = json::array();
  for (const auto& fac : a.comp.factors) {
    comp.push_back(json{{"n", fac.level}, {"class", fac.cls}, {"dim", fac.dim()}});
  }
  r["composition"]            = comp;
  r["composition_length"]     = a.comp.length;
  r["uniserial"]              = a.uniserial;
  r["self_contragredient_W0"] = json{{"verdict", verdict_name(a.w0_dual.verdict)},
                                     {"hom_dim", a.w0_dual.hom_dim},
                                     {"exhaustive", a.w0_dual.exhaustive}};
  r["characterization"]       = char_json(a.chars);
  r["corollary"] = json{{"b0_simple_unital", a.corollary.b0_simple_unital},
                        {"rad_thin_kills", a.corollary.rad_thin_kills},
                        {"iii", implied(a.corollary.iii_implied)},
                        {"consistent", a.corollary.consistent}};

  json bps = json::array();
  for (const auto& pt : points) {
    ensure(pt.chars.computed() == a.chars.computed(),
           "characterization differs between base points");
    ensure(pt.comp.length == a.comp.length,
           "composition length differs between base points");
    bps.push_back(json{{"x", pt.ctx.base_point()},
                       {"dim_T", pt.T.dim()},
                       {"dim_rad", pt.rad.dim()},
                       {"dim_ann", pt.ann.dim()},
                       {"rad_nilpotency", pt.rad_diag.nilpotency},
                       {"radical_stages", pt.rad_diag.stages},
                       {"uniserial", pt.uniserial}});
  }
  r["base_points"] = bps;
  r["warnings"]    = json::array({"computed over GF(p) only"});
  if (a.w0_dual.verdict == SelfContraVerdict::ProbablyNot) {
    r["warnings"].push_back(
        "self-contragredient search was randomized and found no isomorphism");
  }
  return r;
}

std::string text_summary(const json& r) {
  std::ostringstream o;
  o << r["scheme_id"].get<std::string>() << "  n=" << r["n"] << " d=" << r["d"]
    << " p=" << r["prime"] << "\n";
  o << "  valencies           " << r["valencies"].dump() << "\n";
  o << "  strata              " << r["strata"]["sets"].dump()
    << " epsilon=" << r["strata"]["epsilon"] << "\n";
  o << "  Q                   " << r["Q"].dump() << "\n";
  o << "  composition length  " << r["composition_length"] << "\n";
  o << "  uniserial           " << r["uniserial"] << "\n";
  o << "  dim B0, B1          " << r["dim_B0"] << ", " << r["dim_B1"] << "\n";
  for (const auto& bp : r["base_points"]) {
    o << "  x=" << bp["x"] << "  dim T=" << bp["dim_T"]
      << "  dim Rad=" << bp["dim_rad"] << "  dim Ann=" << bp["dim_ann"] << "\n";
  }
  o << "  p'-valenced         " << r["characterization"]["i_pprime"]
    << " (consistent=" << r["characterization"]["consistent"] << ")\n";
  o << "  self-contragredient " << r["self_contragredient_W0"]["verdict"]
           .get<std::string>()
    << "\n";
  return o.str();
}

}  // namespace modterw
