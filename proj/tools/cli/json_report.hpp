// Copyright 2026 The zsgame Authors.
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

#ifndef ZSG_TOOLS_JSON_REPORT_HPP_
#define ZSG_TOOLS_JSON_REPORT_HPP_

#include <vector>

#include "json.hpp"
#include "zsg/diagnose.hpp"
#include "zsg/parametric.hpp"
#include "zsg/solver.hpp"

namespace zsg::cli {

using nlohmann::ordered_json;

// Finite values are numbers; infinities and Undefined are the strings
// "+inf", "-inf" and "undefined".
ordered_json ToJson(const ExtendedValue& v);
ordered_json ToJson(double v);
ordered_json ToJson(const ValidityRecord& v);
ordered_json ToJson(const FiniteSupportMeasure& mu);
ordered_json ToJson(const Extremum& e);
ordered_json ToJson(const AssumptionCheck& c);
ordered_json ToJson(const PureValueGap& g);
ordered_json ToJson(const DiagnoseReport& d);
ordered_json ToJson(const GameSolution& s);
ordered_json ToJson(const SweepRecord& r);
ordered_json ToJson(const ContinuityReport& r);
ordered_json ToJson(const UscReport& r);
ordered_json ToJson(const CanonicalSelection& s);

}  // namespace zsg::cli

#endif  // ZSG_TOOLS_JSON_REPORT_HPP_
