#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ctsat/couple_structures.hpp"
#include "ctsat/decomposition.hpp"
#include "ctsat/formula.hpp"
#include "ctsat/triplet_structures.hpp"
#include "ctsat/zero_distribution.hpp"

namespace ctsat {

// Plain-text staircase tables in the style of the worked examples: one
// header row of variable names, one row per line, blank cells where a
// column is not part of the window.

namespace detail {

class TableWriter {
 public:
  TableWriter(const std::vector<std::string>& names, int label_width = 0)
      : names_(names), label_(label_width) {
    for (const std::string& s : names_) width_ = std::max(width_, s.size());
  }

  std::string header() const {
    std::string row(label_, ' ');
    for (const std::string& s : names_) row += ' ' + pad(s);
    return row + '\n';
  }

  std::string row(const std::string& label,
                  const std::map<int, char>& cells,
                  const std::string& suffix = "") const {
    std::string out = label;
    out.resize(label_, ' ');
    for (size_t i = 0; i < names_.size(); ++i) {
      auto it = cells.find(static_cast<int>(i));
      out += ' ' + pad(it == cells.end() ? std::string()
                                         : std::string(1, it->second));
    }
    if (!suffix.empty()) out += ' ' + suffix;
    while (!out.empty() && out.back() == ' ') out.pop_back();
    return out + '\n';
  }

 private:
  std::string pad(std::string s) const {
    s.resize(width_, ' ');
    return s;
  }
  const std::vector<std::string>& names_;
  size_t width_ = 1;
  int label_;
};

}  // namespace detail

inline std::string render_tabular(const TabularFormula& f,
                                  const std::vector<std::string>& names) {
  detail::TableWriter w(names);
  std::string out = w.header();
  for (const Line& l : f.lines()) {
    std::map<int, char> cells;
    for (const Cell& c : l.cells) cells[c.col] = char('0' + c.bit);
    out += w.row("", cells);
  }
  return out;
}

namespace detail {

inline std::string render_triplet_rows(const Permutation& perm,
                                       const std::vector<uint8_t>& tiers,
                                       const std::vector<std::string>& names,
                                       const std::vector<uint8_t>* marks) {
  TableWriter w(names);
  std::string out = w.header();
  for (size_t t = 0; t < tiers.size(); ++t)
    for (int v = 0; v < 8; ++v) {
      if (!(tiers[t] >> v & 1)) continue;
      std::map<int, char> cells;
      for (int i = 0; i < 3; ++i)
        cells[perm.at(static_cast<int>(t) + i)] = char('0' + (v >> (2 - i) & 1));
      bool marked = marks && ((*marks)[t] >> v & 1);
      out += w.row("", cells, marked ? "-" : "");
    }
  return out;
}

}  // namespace detail

inline std::string render_ctf(const CtFormula& part,
                              const std::vector<std::string>& names) {
  return detail::render_triplet_rows(part.perm, part.tier_mask, names, nullptr);
}

// marks: optional per-tier mask of lines to flag with a trailing "-"
// (used to show the non-compatible lines a clearing pass removes).
inline std::string render_cts(const Cts& s,
                              const std::vector<std::string>& names,
                              const std::vector<uint8_t>* marks = nullptr) {
  if (s.empty_flag) return "(empty structure)\n";
  return detail::render_triplet_rows(s.perm, s.tier_mask, names, marks);
}

// Twins labels are re-derived for display: pairs get letters v, w, ... in
// (tier, couple, couple) order and the letter is printed in the leading
// column of both member rows.
inline std::string render_ccs(const Ccs& g,
                              const std::vector<std::string>& names) {
  std::map<std::pair<int, int>, std::string> row_labels;
  int label_idx = 0;
  for (int j = 0; j + 1 < g.tier_count(); ++j)
    for (int c1 = 0; c1 < 4; ++c1)
      for (int c2 = 0; c2 < 4; ++c2) {
        if (!g.pair_forbidden(j, c1, c2)) continue;
        std::string letter = label_idx < 5
                                 ? std::string(1, char('v' + label_idx))
                                 : "v" + std::to_string(label_idx);
        ++label_idx;
        row_labels[{j, c1}] += letter;
        row_labels[{j + 1, c2}] += letter;
      }
  int label_width = 0;
  for (const auto& [k, s] : row_labels)
    label_width = std::max(label_width, static_cast<int>(s.size()));
  detail::TableWriter w(names, label_width);
  std::string out = w.header();
  for (int t = 0; t < g.tier_count(); ++t)
    for (int c = 0; c < 4; ++c) {
      if (!g.has(t, c)) continue;
      std::map<int, char> cells;
      cells[g.perm.at(t)] = char('0' + (c >> 1));
      cells[g.perm.at(t + 1)] = char('0' + (c & 1));
      auto it = row_labels.find({t, c});
      out += w.row(it == row_labels.end() ? "" : it->second, cells);
    }
  return out;
}

}  // namespace ctsat
