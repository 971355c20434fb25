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

#include "json_report.hpp"

#include <cmath>

namespace zsg::cli {

ordered_json ToJson(const ExtendedValue& v) {
  if (v.is_finite()) return v.value();
  if (v.is_plus_infinity()) return "+inf";
  if (v.is_minus_infinity()) return "-inf";
  return "undefined";
}

ordered_json ToJson(double v) {
  if (std::isnan(v)) return "undefined";
  if (std::isinf(v)) return v > 0 ? "+inf" : "-inf";
  return v;
}

ordered_json ToJson(const ValidityRecord& v) {
  return {{"valid", v.valid()},
          {"bounded_below_in_a", v.bounded_below_in_a},
          {"bounded_above_in_b", v.bounded_above_in_b},
          {"reasons", v.reasons}};
}

ordered_json ToJson(const FiniteSupportMeasure& mu) {
  ordered_json atoms = ordered_json::array();
  for (const Atom& a : mu.atoms()) {
    atoms.push_back({{"point", a.point}, {"weight", a.weight}});
  }
  return atoms;
}

ordered_json ToJson(const Extremum& e) {
  ordered_json j{{"value", ToJson(e.value)}, {"attained", e.attained}};
  j["argpoint"] = e.argpoint ? ordered_json(*e.argpoint) : ordered_json(nullptr);
  return j;
}

ordered_json ToJson(const AssumptionCheck& c) {
  ordered_json j{{"verdict", VerdictName(c.verdict)}, {"detail", c.detail}};
  if (c.witness) {
    const AssumptionWitness& w = *c.witness;
    j["witness"] = {{"side", w.side == AssumptionSide::kMa ? "Ma" : "Mb"},
                    {"gamma", w.gamma},
                    {"L", w.L},
                    {"anchor", w.anchor},
                    {"verified_radius", w.verified_radius},
                    {"asymptotic_proof", w.asymptotic_proof},
                    {"construction", w.construction}};
  } else {
    j["witness"] = nullptr;
  }
  j["counterexample"] =
      c.counterexample ? ordered_json(*c.counterexample) : ordered_json(nullptr);
  return j;
}

ordered_json ToJson(const PureValueGap& g) {
  ordered_json j{{"lower", ToJson(g.lower)}, {"upper", ToJson(g.upper)}};
  if (g.saddle) {
    j["saddle"] = {{"a", g.saddle->first}, {"b", g.saddle->second}};
  } else {
    j["saddle"] = nullptr;
  }
  return j;
}

ordered_json ToJson(const DiagnoseReport& d) {
  ordered_json j;
  j["form"] = d.form;
  j["validity"] = ToJson(d.validity);
  if (d.tails) {
    j["tails"] = {{"minus_infinity", ToJson(d.tails->first)},
                  {"plus_infinity", ToJson(d.tails->second)}};
  } else {
    j["tails"] = nullptr;
  }
  if (d.decomposition) {
    j["decomposition"] = {{"backtrack_depth", d.decomposition->backtrack_depth()},
                          {"epsilon", d.decomposition->epsilon()},
                          {"bound", d.decomposition->bound()}};
  } else {
    j["decomposition"] = nullptr;
  }
  j["witnesses"] = {{"Ma", ToJson(d.ma)}, {"Mb", ToJson(d.mb)}};
  if (d.obstruction) {
    j["obstruction"] = {{"s_star", d.obstruction->s_star},
                        {"s_upper", d.obstruction->s_upper},
                        {"gap", d.obstruction->gap}};
  } else {
    j["obstruction"] = nullptr;
  }
  j["pure_value_gap"] = d.pure_gap ? ToJson(*d.pure_gap) : ordered_json(nullptr);
  const TheoremFlags& t = d.theorems;
  j["theorems_applicable"] = {
      {"inf_compact_a", t.inf_compact_a},
      {"sup_compact_b", t.sup_compact_b},
      {"envelope_duality", t.envelope_duality},
      {"value_exists", t.value_exists},
      {"value_exists_symmetric", t.value_exists_symmetric},
      {"solution_exists", t.solution_exists},
      {"pure_solution", PureSolutionName(d.pure)}};
  j["notes"] = d.notes;
  return j;
}

ordered_json ToJson(const GameSolution& s) {
  ordered_json trace = ordered_json::array();
  for (const RoundRecord& r : s.refinement_trace) {
    trace.push_back({{"round", r.round},
                     {"R", r.R},
                     {"h", r.h},
                     {"grid_value", r.grid_value},
                     {"cert_lower", ToJson(r.cert_lower)},
                     {"cert_upper", ToJson(r.cert_upper)},
                     {"gap", ToJson(r.gap)},
                     {"boundary_mass_a", r.boundary_mass_a},
                     {"boundary_mass_b", r.boundary_mass_b}});
  }
  return {{"value_estimate", s.value_estimate},
          {"certified_lower", ToJson(s.certified_lower)},
          {"certified_upper", ToJson(s.certified_upper)},
          {"certified_gap", ToJson(s.certified_gap())},
          {"converged", s.converged},
          {"strategy_a", ToJson(s.strategy_a)},
          {"strategy_b", ToJson(s.strategy_b)},
          {"refinement_trace", trace},
          {"notes", s.notes}};
}

ordered_json ToJson(const SweepRecord& r) {
  ordered_json j{{"x", r.x}, {"ok", r.ok}};
  if (!r.ok) {
    j["failure"] = r.failure;
    return j;
  }
  j["value_estimate"] = r.solution.value_estimate;
  j["certified_lower"] = ToJson(r.solution.certified_lower);
  j["certified_upper"] = ToJson(r.solution.certified_upper);
  j["converged"] = r.solution.converged;
  j["pure_solution"] = PureSolutionName(r.pure);
  return j;
}

ordered_json ToJson(const ContinuityReport& r) {
  ordered_json flags = ordered_json::array();
  for (const ContinuityFlag& f : r.flags) {
    flags.push_back({{"index", f.index}, {"jump", f.jump}, {"threshold", f.threshold}});
  }
  ordered_json jumps = ordered_json::array();
  ordered_json moduli = ordered_json::array();
  for (double v : r.jumps) jumps.push_back(ToJson(v));
  for (double v : r.moduli) moduli.push_back(ToJson(v));
  return {{"note", "empirical check; flags mark suspected discontinuities"},
          {"lipschitz", r.lipschitz},
          {"max_jump", r.max_jump},
          {"max_gap", ToJson(r.max_gap)},
          {"jumps", jumps},
          {"moduli", moduli},
          {"flags", flags}};
}

ordered_json ToJson(const UscReport& r) {
  ordered_json pairs = ordered_json::array();
  for (const UscPair& p : r.pairs) {
    pairs.push_back({{"index", p.index},
                     {"support_deviation_a", p.support_deviation_a},
                     {"support_deviation_b", p.support_deviation_b},
                     {"cdf_distance_a", p.cdf_distance_a},
                     {"cdf_distance_b", p.cdf_distance_b},
                     {"support_flag", p.support_flag},
                     {"value_flag", p.value_flag}});
  }
  return {{"header", r.header},
          {"support_flags", r.support_flags},
          {"value_flags", r.value_flags},
          {"pairs", pairs}};
}

ordered_json ToJson(const CanonicalSelection& s) {
  ordered_json sel = ordered_json::array();
  for (const Selection& x : s.selections) {
    ordered_json j{{"x", x.x},
                   {"strategy_a", ToJson(x.strategy_a)},
                   {"strategy_b", ToJson(x.strategy_b)}};
    if (x.pure) {
      j["pure"] = {{"a", x.pure->first}, {"b", x.pure->second}};
    }
    sel.push_back(j);
  }
  return {{"selections", sel}, {"omitted", s.omitted}};
}

}  // namespace zsg::cli
