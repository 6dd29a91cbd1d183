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

// JSON analysis reports. Objects use nlohmann::json's std::map storage, so
// keys are always emitted in sorted order.

#pragma once

#include <span>
#include <string>

#include <json.hpp>

#include "modterw/characterize.hpp"

namespace modterw {

inline constexpr int kReportSchema = 1;

/// One report for a scheme and prime over the analysed base points. The
/// scheme-level fields come from the first base point; the others are
/// checked to agree with it.
nlohmann::json analysis_report(const std::string&             scheme_id,
                               const SchemeData&              s,
                               std::span<const PointAnalysis> points);

std::string verdict_name(SelfContraVerdict v);

/// Short human-readable summary.
std::string text_summary(const nlohmann::json& report);

}  // namespace modterw
