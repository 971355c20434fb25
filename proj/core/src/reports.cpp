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

#include "zsg/reports.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace zsg {
namespace {

// Atom lists are written as weight:point pairs separated by spaces so the
// CSV needs no quoting.
std::string Atoms(const FiniteSupportMeasure& mu) {
  std::string s;
  for (const Atom& a : mu.atoms()) {
    if (!s.empty()) s += ' ';
    s += CsvNumber(a.weight) + ":" + CsvNumber(a.point);
  }
  return s;
}

std::string Sanitize(std::string s) {
  for (char& c : s) {
    if (c == ',' || c == '\n') c = ';';
  }
  return s;
}

}  // namespace

std::string CsvNumber(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v == 0.0 ? 0.0 : v);
  return buf;
}

std::string TraceCsv(const GameSolution& solution) {
  std::ostringstream out;
  out << "round,R,h,grid_value,cert_lower,cert_upper,gap,boundary_mass_a,"
         "boundary_mass_b\n";
  for (const RoundRecord& r : solution.refinement_trace) {
    out << r.round << ',' << CsvNumber(r.R) << ',' << CsvNumber(r.h) << ','
        << CsvNumber(r.grid_value) << ',' << CsvNumber(r.cert_lower) << ','
        << CsvNumber(r.cert_upper) << ',' << CsvNumber(r.gap) << ','
        << CsvNumber(r.boundary_mass_a) << ',' << CsvNumber(r.boundary_mass_b)
        << '\n';
  }
  return out.str();
}

std::string SweepCsv(const std::vector<SweepRecord>& records) {
  std::ostringstream out;
  out << "x,value,cert_lower,cert_upper,support_a,support_b,strategy_a,"
         "strategy_b,converged,failure\n";
  for (const SweepRecord& r : records) {
    out << CsvNumber(r.x) << ',';
    if (r.ok) {
      const GameSolution& s = r.solution;
      out << CsvNumber(s.value_estimate) << ',' << CsvNumber(s.certified_lower)
          << ',' << CsvNumber(s.certified_upper) << ',' << s.strategy_a.size()
          << ',' << s.strategy_b.size() << ',' << Atoms(s.strategy_a) << ','
          << Atoms(s.strategy_b) << ',' << (s.converged ? 1 : 0) << ",\n";
    } else {
      out << "nan,nan,nan,0,0,,,0," << Sanitize(r.failure) << '\n';
    }
  }
  return out.str();
}

std::string PlotDataCsv(const std::vector<SweepRecord>& records) {
  std::ostringstream out;
  out << "x,value,lower,upper\n";
  for (const SweepRecord& r : records) {
    if (!r.ok) continue;
    out << CsvNumber(r.x) << ',' << CsvNumber(r.solution.value_estimate) << ','
        << CsvNumber(r.solution.certified_lower) << ','
        << CsvNumber(r.solution.certified_upper) << '\n';
  }
  return out.str();
}

}  // namespace zsg
