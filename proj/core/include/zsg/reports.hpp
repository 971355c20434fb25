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

#ifndef ZSG_REPORTS_HPP_
#define ZSG_REPORTS_HPP_

#include <string>
#include <vector>

#include "zsg/parametric.hpp"
#include "zsg/solver.hpp"

namespace zsg {

// 9 significant digits; "inf", "-inf" and "nan" for non-finite values.
std::string CsvNumber(double v);

// round,R,h,grid_value,cert_lower,cert_upper,gap,boundary_mass_a,boundary_mass_b
std::string TraceCsv(const GameSolution& solution);

// x,value,cert_lower,cert_upper,support_a,support_b,strategy_a,strategy_b,
// converged,failure
std::string SweepCsv(const std::vector<SweepRecord>& records);

// x,value,lower,upper
std::string PlotDataCsv(const std::vector<SweepRecord>& records);

}  // namespace zsg

#endif  // ZSG_REPORTS_HPP_
