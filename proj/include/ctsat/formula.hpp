#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ctsat {

// Truth values / vector components in base variable order. Variables are
// 0-based internally; all external I/O is 1-based DIMACS.
using Assignment = std::vector<uint8_t>;

inline std::string to_bitstring(const Assignment& a) {
  std::string s(a.size(), '0');
  for (size_t i = 0; i < a.size(); ++i) s[i] = a[i] ? '1' : '0';
  return s;
}

inline Assignment from_bitstring(const std::string& s) {
  Assignment a(s.size());
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '0' && s[i] != '1')
      throw std::invalid_argument("bad bitstring: " + s);
    a[i] = s[i] == '1';
  }
  return a;
}

struct Literal {
  int var;       // 0-based
  bool negated;

  friend bool operator==(const Literal&, const Literal&) = default;
};

struct Clause3 {
  std::array<Literal, 3> lits;
};

struct ParseError : std::runtime_error {
  int line_no;
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_no(line) {}
};

struct DimacsProblem {
  int var_count = 0;
  std::vector<Clause3> clauses;
};

// One cell of a tabular line: the falsifying value of a variable.
// bit 0 marks a positive occurrence, bit 1 a negated one.
struct Cell {
  int col;
  uint8_t bit;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

// A line of the table: exactly three cells on distinct columns, kept
// sorted by column.
struct Line {
  std::array<Cell, 3> cells;

  friend auto operator<=>(const Line&, const Line&) = default;
};

class TabularFormula {
 public:
  TabularFormula() = default;

  // Duplicate lines are collapsed; first occurrence order is kept.
  TabularFormula(int n, std::vector<Line> lines) : n_(n) {
    std::set<Line> seen;
    for (Line& l : lines) {
      std::sort(l.cells.begin(), l.cells.end());
      if (l.cells[0].col == l.cells[1].col || l.cells[1].col == l.cells[2].col)
        throw std::invalid_argument("tabular line with repeated column");
      for (const Cell& c : l.cells)
        if (c.col < 0 || c.col >= n)
          throw std::invalid_argument("tabular line column out of range");
      if (seen.insert(l).second) lines_.push_back(l);
    }
  }

  int var_count() const { return n_; }
  int line_count() const { return static_cast<int>(lines_.size()); }
  const std::vector<Line>& lines() const { return lines_; }

 private:
  int n_ = 0;
  std::vector<Line> lines_;
};

inline DimacsProblem parse_dimacs(std::istream& in) {
  DimacsProblem p;
  bool have_header = false;
  std::string text;
  int line_no = 0;
  while (std::getline(in, text)) {
    ++line_no;
    if (text.empty() || text[0] == 'c' || text[0] == '%') continue;
    std::istringstream ls(text);
    if (text[0] == 'p') {
      std::string tag, fmt;
      int m = 0;
      if (!(ls >> tag >> fmt >> p.var_count >> m) || fmt != "cnf" ||
          p.var_count < 0 || m < 0)
        throw ParseError(line_no, "malformed DIMACS header");
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(line_no, "clause before header");
    int lit;
    std::vector<int> cur;
    while (ls >> lit) {
      if (lit == 0) break;
      cur.push_back(lit);
    }
    if (cur.empty()) continue;
    if (cur.size() != 3)
      throw ParseError(line_no, "clause with " + std::to_string(cur.size()) +
                                    " literals; exactly 3 required");
    Clause3 c;
    for (int i = 0; i < 3; ++i) {
      int v = std::abs(cur[i]);
      if (v < 1 || v > p.var_count)
        throw ParseError(line_no, "variable out of range");
      c.lits[i] = {v - 1, cur[i] < 0};
    }
    if (c.lits[0].var == c.lits[1].var || c.lits[0].var == c.lits[2].var ||
        c.lits[1].var == c.lits[2].var)
      throw ParseError(line_no, "duplicate variable in clause");
    p.clauses.push_back(c);
  }
  if (!have_header) throw ParseError(line_no, "missing DIMACS header");
  return p;
}

inline DimacsProblem parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs(in);
}

inline TabularFormula to_tabular(const std::vector<Clause3>& clauses, int n) {
  std::vector<Line> lines;
  lines.reserve(clauses.size());
  for (const Clause3& c : clauses) {
    Line l;
    for (int i = 0; i < 3; ++i)
      l.cells[i] = {c.lits[i].var, static_cast<uint8_t>(c.lits[i].negated)};
    lines.push_back(l);
  }
  return TabularFormula(n, std::move(lines));
}

inline TabularFormula to_tabular(const DimacsProblem& p) {
  return to_tabular(p.clauses, p.var_count);
}

// Decode back to clauses (inverse of to_tabular up to literal order).
inline std::vector<Clause3> to_clauses(const TabularFormula& f) {
  std::vector<Clause3> out;
  for (const Line& l : f.lines()) {
    Clause3 c;
    for (int i = 0; i < 3; ++i) c.lits[i] = {l.cells[i].col, l.cells[i].bit != 0};
    out.push_back(c);
  }
  return out;
}

// CNF semantics: true iff every clause has a true literal.
inline bool eval_cnf(const std::vector<Clause3>& clauses, const Assignment& a) {
  for (const Clause3& c : clauses) {
    bool sat = false;
    for (const Literal& l : c.lits)
      if ((a[l.var] != 0) != l.negated) {
        sat = true;
        break;
      }
    if (!sat) return false;
  }
  return true;
}

inline bool eval_cnf(const DimacsProblem& p, const Assignment& a) {
  return eval_cnf(p.clauses, a);
}

// Subset-test semantics: true iff no tabular line matches the assignment
// on all three of its columns.
inline bool eval_subset(const TabularFormula& f, const Assignment& a) {
  for (const Line& l : f.lines()) {
    bool match = true;
    for (const Cell& c : l.cells)
      if (a[c.col] != c.bit) {
        match = false;
        break;
      }
    if (match) return false;
  }
  return true;
}

}  // namespace ctsat
