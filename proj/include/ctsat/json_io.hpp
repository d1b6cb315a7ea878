#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "ctsat/couple_structures.hpp"
#include "ctsat/decomposition.hpp"
#include "ctsat/formula.hpp"
#include "ctsat/oracle.hpp"
#include "ctsat/triplet_structures.hpp"
#include "ctsat/zero_distribution.hpp"

namespace ctsat {

using nlohmann::json;

// All external JSON is 1-based: variables, tier indices.

inline json to_json(const TabularFormula& f) {
  json lines = json::array();
  for (const Line& l : f.lines()) {
    json cells = json::array();
    for (const Cell& c : l.cells)
      cells.push_back({{"col", c.col + 1}, {"bit", c.bit}});
    lines.push_back(cells);
  }
  return {{"n", f.var_count()}, {"m", f.line_count()}, {"lines", lines}};
}

inline TabularFormula tabular_from_json(const json& j) {
  std::vector<Line> lines;
  for (const json& cells : j.at("lines")) {
    Line l;
    for (int i = 0; i < 3; ++i)
      l.cells[i] = {cells.at(i).at("col").get<int>() - 1,
                    cells.at(i).at("bit").get<uint8_t>()};
    lines.push_back(l);
  }
  return TabularFormula(j.at("n").get<int>(), std::move(lines));
}

inline json perm_to_json(const Permutation& p) {
  json a = json::array();
  for (int v : p.order()) a.push_back(v + 1);
  return a;
}

inline Permutation perm_from_json(const json& j) {
  std::vector<int> order;
  for (const json& v : j) order.push_back(v.get<int>() - 1);
  return Permutation(std::move(order));
}

inline json to_json(const CtFormula& part) {
  json tiers = json::array();
  for (int t = 0; t < part.tier_count(); ++t) {
    json tier = json::array();
    for (int v = 0; v < 8; ++v)
      if (part.tier_mask[t] >> v & 1) tier.push_back(triplet_string(v));
    tiers.push_back(tier);
  }
  return {{"permutation", perm_to_json(part.perm)}, {"tiers", tiers}};
}

inline json to_json(const Decomposition& d) {
  json parts = json::array();
  for (const CtFormula& p : d.parts) parts.push_back(to_json(p));
  return {{"group_count", d.group_count}, {"parts", parts}};
}

inline CtFormula ctf_from_json(const json& j) {
  CtFormula part;
  part.perm = perm_from_json(j.at("permutation"));
  for (const json& tier : j.at("tiers")) {
    uint8_t mask = 0;
    for (const json& s : tier) {
      const std::string& t = s.get_ref<const std::string&>();
      mask |= 1 << ((t[0] - '0') << 2 | (t[1] - '0') << 1 | (t[2] - '0'));
    }
    part.tier_mask.push_back(mask);
  }
  part.source_lines.assign(part.tier_mask.size(), {});
  return part;
}

inline json to_json(const Cts& s) {
  json tiers = json::array();
  for (int t = 0; t < s.tier_count(); ++t) {
    json tier = json::array();
    for (int v = 0; v < 8; ++v)
      if (s.has(t, v)) tier.push_back(triplet_string(v));
    tiers.push_back(tier);
  }
  json j = {{"permutation", perm_to_json(s.perm)}, {"tiers", tiers}};
  if (s.empty_flag) j["empty"] = true;
  return j;
}

inline Cts cts_from_json(const json& j) {
  CtFormula tmp = ctf_from_json(j);  // same shape
  Cts s;
  s.perm = std::move(tmp.perm);
  s.tier_mask = std::move(tmp.tier_mask);
  s.empty_flag = j.value("empty", false);
  return s;
}

inline json to_json(const Ccs& g) {
  json tiers = json::array();
  for (int t = 0; t < g.tier_count(); ++t) {
    json tier = json::array();
    for (int c = 0; c < 4; ++c)
      if (g.has(t, c)) tier.push_back(couple_string(c));
    tiers.push_back(tier);
  }
  json pairs = json::array();
  for (int j = 0; j + 1 < g.tier_count(); ++j)
    for (int c1 = 0; c1 < 4; ++c1)
      for (int c2 = 0; c2 < 4; ++c2)
        if (g.pair_forbidden(j, c1, c2))
          pairs.push_back({j + 1, couple_string(c1), couple_string(c2)});
  return {{"permutation", perm_to_json(g.perm)},
          {"tiers", tiers},
          {"forbidden_pairs", pairs}};
}

inline Ccs ccs_from_json(const json& j) {
  Ccs g;
  g.perm = perm_from_json(j.at("permutation"));
  for (const json& tier : j.at("tiers")) {
    uint8_t mask = 0;
    for (const json& s : tier) {
      const std::string& t = s.get_ref<const std::string&>();
      mask |= 1 << ((t[0] - '0') << 1 | (t[1] - '0'));
    }
    g.tier_mask.push_back(mask);
  }
  g.forbidden.assign(g.tier_mask.empty() ? 0 : g.tier_mask.size() - 1, 0);
  for (const json& p : j.at("forbidden_pairs")) {
    int boundary = p.at(0).get<int>() - 1;
    const std::string& a = p.at(1).get_ref<const std::string&>();
    const std::string& b = p.at(2).get_ref<const std::string&>();
    int c1 = (a[0] - '0') << 1 | (a[1] - '0');
    int c2 = (b[0] - '0') << 1 | (b[1] - '0');
    g.forbidden[boundary] |= 1 << (c1 * 4 + c2);
  }
  return g;
}

inline CtsSystem cts_system_from_json(const json& j) {
  CtsSystem sys;
  for (const json& s : j.at("structures"))
    sys.structures.push_back(cts_from_json(s));
  if (!sys.structures.empty()) sys.var_count = sys.structures[0].perm.size();
  return sys;
}

inline CcsSystem ccs_system_from_json(const json& j) {
  CcsSystem sys;
  for (const json& s : j.at("structures"))
    sys.structures.push_back(ccs_from_json(s));
  if (!sys.structures.empty()) sys.var_count = sys.structures[0].perm.size();
  return sys;
}

inline json to_json(const TraceEvent& e) {
  switch (e.kind) {
    case TraceEvent::kInvert:
      return {{"event", "invert"}, {"var", e.var + 1}};
    case TraceEvent::kImply:
      return {{"event", "imply"},
              {"from", {e.from_var + 1, e.from_inverted}},
              {"to", {e.var + 1, e.to_inverted}}};
    case TraceEvent::kResidue:
      return {{"event", "residue"}, {"var", e.var + 1}, {"value", e.value}};
    case TraceEvent::kBacktrack:
      return {{"event", "backtrack"}, {"var", e.var + 1}, {"value", e.value}};
    case TraceEvent::kStar:
      return {{"event", "star"}, {"var", e.var + 1}};
    case TraceEvent::kVerdict:
      return {{"event", "verdict"}, {"result", e.text}};
  }
  return {};
}

inline std::string trace_json_lines(const std::vector<TraceEvent>& trace) {
  std::string out;
  for (const TraceEvent& e : trace) out += to_json(e).dump() + "\n";
  return out;
}

inline json to_json(const DiffReport& r) {
  json j = {{"seed", r.seed},
            {"n", r.n},
            {"m", r.m},
            {"pipeline", r.pipeline_verdict},
            {"oracle", r.oracle_verdict},
            {"oracle_count", r.oracle_count},
            {"agreement", r.agreement},
            {"sound", r.sound}};
  if (!r.witness.empty()) j["witness"] = r.witness;
  if (!r.defect.empty()) j["defect"] = r.defect;
  if (!r.dimacs.empty()) j["dimacs"] = r.dimacs;
  return j;
}

inline json to_json(const FuzzSummary& s) {
  json dis = json::array();
  for (const DiffReport& r : s.disagreements) dis.push_back(to_json(r));
  return {{"total", s.total},
          {"agree", s.agree},
          {"sound", s.sound},
          {"disagreements", dis}};
}

}  // namespace ctsat
