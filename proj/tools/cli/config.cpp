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

#include "config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "zsg/error.hpp"

namespace zsg::cli {
namespace {

struct Entry {
  std::string value;
  int line = 0;
};

[[noreturn]] void Fail(int line, const std::string& msg) {
  throw Error(ErrorCategory::kConfig,
              line > 0 ? "line " + std::to_string(line) + ": " + msg : msg);
}

std::vector<std::string_view> Split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double ParseNumber(std::string_view s, int line, const std::string& what) {
  double v = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && s.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (s.empty() || ec != std::errc() || ptr != last || !std::isfinite(v)) {
    Fail(line, "invalid number '" + std::string(s) + "' in " + what);
  }
  return v;
}

std::vector<double> NumberList(std::string_view s, int line,
                               const std::string& what) {
  std::vector<double> out;
  for (std::string_view part : Split(s, ',')) {
    out.push_back(ParseNumber(part, line, what));
  }
  return out;
}

Polynomial ParsePolynomial(std::string_view s, int line, const std::string& key) {
  if (s.empty()) Fail(line, "empty coefficient list for " + key);
  return Polynomial(NumberList(s, line, key));
}

std::string FormatPolynomial(const Polynomial& p) {
  std::string s;
  for (double c : p.coefficients()) {
    if (!s.empty()) s += ',';
    s += FormatNumber(c);
  }
  return s;
}

ActionSet ParseActionSet(std::string_view s, int line) {
  const std::vector<std::string_view> parts = Split(s, ':');
  try {
    if (parts[0] == "fullline" && parts.size() == 1) return ActionSet::FullLine();
    if (parts[0] == "halfline" && parts.size() == 2) {
      return ActionSet::HalfLine(ParseNumber(parts[1], line, "action set"));
    }
    if (parts[0] == "interval" && parts.size() == 3) {
      return ActionSet::Interval(ParseNumber(parts[1], line, "action set"),
                                 ParseNumber(parts[2], line, "action set"));
    }
  } catch (const DomainError& e) {
    Fail(line, e.what());
  }
  Fail(line, "invalid action set '" + std::string(s) +
                 "' (halfline:<lo>, fullline or interval:<lo>:<hi>)");
}

std::string FormatActionSet(const ActionSet& set) {
  switch (set.kind()) {
    case ActionSet::Kind::kHalfLine:
      return "halfline:" + FormatNumber(set.lower());
    case ActionSet::Kind::kFullLine:
      return "fullline";
    case ActionSet::Kind::kInterval:
      return "interval:" + FormatNumber(set.lower()) + ":" +
             FormatNumber(set.upper());
    case ActionSet::Kind::kFinite:
      return "finite:" + std::to_string(set.count());
  }
  return "";
}

Matrix ParseMatrix(std::string_view s, int line) {
  std::vector<std::vector<double>> rows;
  for (std::string_view row : Split(s, ';')) {
    if (row.empty()) Fail(line, "empty matrix row");
    rows.push_back(NumberList(row, line, "matrix"));
  }
  for (const auto& r : rows) {
    if (r.size() != rows.front().size()) {
      Fail(line, "inconsistent matrix dimensions: rows of length " +
                     std::to_string(rows.front().size()) + " and " +
                     std::to_string(r.size()));
    }
  }
  return Matrix::FromRows(rows);
}

std::string FormatMatrix(const Matrix& m) {
  std::string s;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) s += ';';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) s += ',';
      s += FormatNumber(m(i, j));
    }
  }
  return s;
}

ParameterFunction ParsePsi(std::string_view s, int line) {
  if (s == "sin") return ParameterFunction::Sine();
  const std::vector<std::string_view> parts = Split(s, ':');
  try {
    if (parts[0] == "step") {
      if (parts.size() != 3) Fail(line, "psi step needs step:<at>:<height>");
      return ParameterFunction::Step(ParseNumber(parts[1], line, "psi"),
                                     ParseNumber(parts[2], line, "psi"));
    }
    if (parts[0] == "table") {
      if (parts.size() != 4) {
        Fail(line, "psi table needs table:<start>:<step>:<values>");
      }
      return ParameterFunction::Tabulated(ParseNumber(parts[1], line, "psi"),
                                          ParseNumber(parts[2], line, "psi"),
                                          NumberList(parts[3], line, "psi"));
    }
  } catch (const DomainError& e) {
    Fail(line, e.what());
  }
  return ParameterFunction::FromPolynomial(ParsePolynomial(s, line, "psi"));
}

const std::vector<std::string> kSolverKeys = {
    "tol", "R0", "R_growth", "h0", "h_shrink", "max_rounds", "boundary_mass_eps"};

const std::set<std::string> kGameKeys = {
    "form", "action_set_a", "action_set_b", "phi", "phi_a", "phi_b", "shift",
    "matrix", "tol", "R0", "R_growth", "h0", "h_shrink", "max_rounds",
    "boundary_mass_eps"};
const std::set<std::string> kFamilyKeys = {
    "form", "action_set_a", "action_set_b", "phi", "phi_a", "phi_b", "phi_x",
    "psi", "x_grid", "lip", "tol", "R0", "R_growth", "h0", "h_shrink",
    "max_rounds", "boundary_mass_eps"};

// Keys each form uses besides action sets and solver settings.
const std::map<std::string, std::set<std::string>> kFormKeys = {
    {"difference", {"phi"}},
    {"separable", {"phi_a", "phi_b", "shift"}},
    {"quadratic", {}},
    {"matrix", {"matrix"}},
    {"shifted_difference", {"psi", "phi", "x_grid", "lip"}},
    {"separable_family", {"phi_x", "phi_a", "phi_b", "x_grid", "lip"}},
};

class Document {
 public:
  Document(std::map<std::string, Entry> entries, int section_line)
      : entries_(std::move(entries)), section_line_(section_line) {}

  bool has(const std::string& key) const { return entries_.count(key) > 0; }
  const Entry& get(const std::string& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) Fail(section_line_, "missing key '" + key + "'");
    return it->second;
  }
  int line(const std::string& key) const {
    return has(key) ? entries_.at(key).line : section_line_;
  }
  const std::map<std::string, Entry>& entries() const { return entries_; }

 private:
  std::map<std::string, Entry> entries_;
  int section_line_;
};

void ApplySolverKeys(const Document& doc, ParsedConfig& out,
                     std::ostringstream& norm) {
  SolverConfig& s = out.solver;
  for (const std::string& key : kSolverKeys) {
    if (!doc.has(key)) continue;
    const Entry& e = doc.get(key);
    const double v = ParseNumber(e.value, e.line, key);
    if (key == "tol") s.tol = v;
    if (key == "R0") s.R0 = v;
    if (key == "R_growth") s.R_growth = v;
    if (key == "h0") s.h0 = v;
    if (key == "h_shrink") s.h_shrink = v;
    if (key == "boundary_mass_eps") s.boundary_mass_eps = v;
    if (key == "max_rounds") {
      if (v != std::floor(v) || v < 1 || v > 1000) {
        Fail(e.line, "max_rounds must be an integer in [1, 1000]");
      }
      s.max_rounds = static_cast<int>(v);
    }
    norm << key << '=' << FormatNumber(v) << '\n';
  }
  try {
    s.Validate();
  } catch (const DomainError& e) {
    Fail(0, e.what());
  }
}

}  // namespace

std::string FormatNumber(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of negative zero
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

std::vector<double> ParseNumberList(std::string_view text) {
  return NumberList(text, 0, "number list");
}

FiniteSupportMeasure ParseStrategy(std::string_view text) {
  std::vector<Atom> atoms;
  for (std::string_view part : Split(text, ',')) {
    const auto colon = part.find(':');
    if (colon == std::string_view::npos) {
      Fail(0, "strategy atoms are written weight:point");
    }
    atoms.push_back({ParseNumber(part.substr(colon + 1), 0, "strategy"),
                     ParseNumber(part.substr(0, colon), 0, "strategy")});
  }
  try {
    return FiniteSupportMeasure(std::move(atoms));
  } catch (const DomainError& e) {
    Fail(0, std::string("strategy: ") + e.what());
  }
}

ParsedConfig ParseConfig(std::string_view text) {
  std::string section;
  int section_line = 0;
  std::map<std::string, Entry> entries;

  int line_no = 0;
  for (std::string_view raw : Split(text, '\n')) {
    ++line_no;
    const std::size_t hash = raw.find('#');
    std::istringstream tokens{std::string(raw.substr(0, hash))};
    std::string tok;
    while (tokens >> tok) {
      if (tok.front() == '[') {
        if (tok != "[game]" && tok != "[family]") {
          Fail(line_no, "unknown section " + tok);
        }
        if (!section.empty()) Fail(line_no, "only one section is allowed");
        section = tok.substr(1, tok.size() - 2);
        section_line = line_no;
        continue;
      }
      if (section.empty()) Fail(line_no, "key before any [game] or [family] section");
      const std::size_t eq = tok.find('=');
      if (eq == std::string::npos || eq == 0) {
        Fail(line_no, "expected key=value, got '" + tok + "'");
      }
      const std::string key = tok.substr(0, eq);
      const auto& allowed = section == "game" ? kGameKeys : kFamilyKeys;
      if (!allowed.count(key)) {
        Fail(line_no, "unknown key '" + key + "' in [" + section + "]");
      }
      if (entries.count(key)) Fail(line_no, "duplicate key '" + key + "'");
      entries[key] = {tok.substr(eq + 1), line_no};
    }
  }
  if (section.empty()) Fail(0, "no [game] or [family] section");

  const Document doc(std::move(entries), section_line);
  ParsedConfig out;
  out.is_family = section == "family";
  const Entry& form_entry = doc.get("form");
  const std::string& form = form_entry.value;
  auto form_it = kFormKeys.find(form);
  const bool form_ok = form_it != kFormKeys.end() &&
                       (out.is_family == (form == "shifted_difference" ||
                                          form == "separable_family"));
  if (!form_ok) {
    Fail(form_entry.line, "unknown form '" + form + "' in [" + section + "]");
  }
  for (const auto& [key, entry] : doc.entries()) {
    const bool generic = key == "form" || key == "action_set_a" ||
                         key == "action_set_b" ||
                         std::find(kSolverKeys.begin(), kSolverKeys.end(), key) !=
                             kSolverKeys.end();
    if (form == "matrix" && (key == "action_set_a" || key == "action_set_b")) {
      Fail(entry.line, "matrix games take their action sets from the matrix");
    }
    if (!generic && !form_it->second.count(key)) {
      Fail(entry.line, "key '" + key + "' does not apply to form " + form);
    }
  }

  std::ostringstream norm;
  norm << '[' << section << "]\nform=" << form << '\n';

  if (form == "matrix") {
    const Entry& e = doc.get("matrix");
    out.game = Game::FromMatrix(ParseMatrix(e.value, e.line));
    norm << "matrix=" << FormatMatrix(std::get<MatrixForm>(out.game->payoff()).entries)
         << '\n';
    ApplySolverKeys(doc, out, norm);
    out.normalized = norm.str();
    return out;
  }

  const bool difference = form == "difference" || form == "shifted_difference";
  const std::string default_set = difference ? "halfline:0" : "fullline";
  auto set_value = [&](const std::string& key) {
    return doc.has(key) ? doc.get(key).value : default_set;
  };
  const ActionSet set_a = ParseActionSet(set_value("action_set_a"), doc.line("action_set_a"));
  const ActionSet set_b = ParseActionSet(set_value("action_set_b"), doc.line("action_set_b"));
  norm << "action_set_a=" << FormatActionSet(set_a) << '\n'
       << "action_set_b=" << FormatActionSet(set_b) << '\n';

  auto poly = [&](const std::string& key) {
    const Entry& e = doc.get(key);
    Polynomial p = ParsePolynomial(e.value, e.line, key);
    norm << key << '=' << FormatPolynomial(p) << '\n';
    return p;
  };

  if (form == "difference") {
    out.game = Game(set_a, set_b, DifferenceForm{poly("phi")});
  } else if (form == "separable") {
    Polynomial pa = poly("phi_a");
    Polynomial pb = poly("phi_b");
    const double shift =
        doc.has("shift") ? ParseNumber(doc.get("shift").value, doc.line("shift"), "shift")
                         : 0.0;
    norm << "shift=" << FormatNumber(shift) << '\n';
    out.game = Game(set_a, set_b, SeparableForm{pa, pb, shift});
  } else if (form == "quadratic") {
    out.game = Game(set_a, set_b, QuadraticDifference{});
  } else {
    GameFamily family;
    family.action_a = set_a;
    family.action_b = set_b;
    if (form == "shifted_difference") {
      const Entry& e = doc.get("psi");
      ParameterFunction psi = ParsePsi(e.value, e.line);
      norm << "psi=" << psi.to_string() << '\n';
      family.form = ShiftedDifference{psi, poly("phi")};
    } else {
      Polynomial px = poly("phi_x");
      Polynomial pa = poly("phi_a");
      Polynomial pb = poly("phi_b");
      family.form = SeparableFamily{px, pa, pb};
    }
    const Entry& g = doc.get("x_grid");
    const std::vector<double> grid_args = NumberList(g.value, g.line, "x_grid");
    if (grid_args.size() != 3 || grid_args[2] != std::floor(grid_args[2]) || grid_args[2] < 1 ||
        grid_args[2] > 100000) {
      Fail(g.line, "x_grid needs <start>,<stop>,<count> with count in [1, 100000]");
    }
    out.x_grid = LinearGrid(grid_args[0], grid_args[1], static_cast<std::size_t>(grid_args[2]));
    norm << "x_grid=" << FormatNumber(grid_args[0]) << ',' << FormatNumber(grid_args[1])
         << ',' << FormatNumber(grid_args[2]) << '\n';
    out.family = std::move(family);
  }
  ApplySolverKeys(doc, out, norm);
  if (doc.has("lip")) {
    out.lip = ParseNumber(doc.get("lip").value, doc.line("lip"), "lip");
    if (!(out.lip >= 0)) Fail(doc.line("lip"), "lip must be nonnegative");
    norm << "lip=" << FormatNumber(out.lip) << '\n';
  }
  out.normalized = norm.str();
  return out;
}

}  // namespace zsg::cli
