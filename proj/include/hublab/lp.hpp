#pragma once

// Dense-tableau simplex over exact rationals.
//
// Two phases, Bland's rule for both entering and leaving variables. A
// presolve pass drops constraint rows that are implied by another row: with
// nonnegative variables, a.x <= b follows from a'.x <= b' whenever a <= a'
// componentwise and b' <= b (mirrored for >=). Set-cover style programs
// generate many such rows. The returned assignment is always re-checked
// against every original constraint.

#include <algorithm>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hublab {

using Rational = boost::multiprecision::cpp_rational;

enum class Sense { maximize, minimize };
enum class Relation { less_equal, greater_equal, equal };

class LPError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LinearConstraint {
  std::vector<Rational> coefficients;
  Relation relation = Relation::less_equal;
  Rational rhs;
  std::string name;
};

struct RationalLP {
  Sense sense = Sense::maximize;
  std::vector<std::string> variable_names;
  std::vector<Rational> objective;
  std::vector<bool> nonnegative;
  std::vector<LinearConstraint> constraints;

  std::size_t variable_count() const { return objective.size(); }

  std::size_t add_variable(std::string name, Rational cost, bool nonneg = true) {
    variable_names.push_back(std::move(name));
    objective.push_back(std::move(cost));
    nonnegative.push_back(nonneg);
    for (auto& c : constraints) c.coefficients.emplace_back(0);
    return objective.size() - 1;
  }

  void add_constraint(std::vector<Rational> coefficients, Relation rel, Rational rhs,
                      std::string name = {}) {
    if (coefficients.size() != variable_count()) {
      throw LPError("constraint " + name + " has " + std::to_string(coefficients.size()) +
                    " coefficients for " + std::to_string(variable_count()) + " variables");
    }
    constraints.push_back({std::move(coefficients), rel, std::move(rhs), std::move(name)});
  }

  void validate() const {
    if (variable_names.size() != objective.size() || nonnegative.size() != objective.size()) {
      throw LPError("variable metadata size mismatch");
    }
    for (const auto& c : constraints) {
      if (c.coefficients.size() != objective.size()) {
        throw LPError("constraint " + c.name + " has the wrong number of coefficients");
      }
    }
  }
};

enum class LPStatus { optimal, unbounded, infeasible };

inline const char* to_string(LPStatus s) {
  switch (s) {
    case LPStatus::optimal: return "optimal";
    case LPStatus::unbounded: return "unbounded";
    case LPStatus::infeasible: return "infeasible";
  }
  return "?";
}

struct LPSolution {
  LPStatus status = LPStatus::infeasible;
  Rational value;
  std::vector<Rational> assignment;  // set when optimal
  std::size_t pivots = 0;
  std::size_t rows_after_presolve = 0;
};

struct SolveOptions {
  bool presolve = true;
  std::size_t max_cells = 20'000'000;  // tableau rows * columns
};

inline Rational objective_value(const RationalLP& lp, const std::vector<Rational>& x) {
  Rational v = 0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (lp.objective[j] != 0) v += lp.objective[j] * x[j];
  }
  return v;
}

inline bool satisfies(const LinearConstraint& c, const std::vector<Rational>& x) {
  Rational lhs = 0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (c.coefficients[j] != 0) lhs += c.coefficients[j] * x[j];
  }
  switch (c.relation) {
    case Relation::less_equal: return lhs <= c.rhs;
    case Relation::greater_equal: return lhs >= c.rhs;
    case Relation::equal: return lhs == c.rhs;
  }
  return false;
}

inline bool is_feasible(const RationalLP& lp, const std::vector<Rational>& x) {
  if (x.size() != lp.variable_count()) return false;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (lp.nonnegative[j] && x[j] < 0) return false;
  }
  return std::all_of(lp.constraints.begin(), lp.constraints.end(),
                     [&](const LinearConstraint& c) { return satisfies(c, x); });
}

namespace detail {

struct StdRow {
  std::vector<Rational> a;
  Relation rel;
  Rational b;
};

// Returns false when a zero row is violated.
inline bool presolve_rows(std::vector<StdRow>& rows) {
  std::vector<StdRow> kept;
  std::map<std::pair<int, std::vector<Rational>>, std::size_t> seen;
  for (auto& r : rows) {
    const bool zero = std::all_of(r.a.begin(), r.a.end(), [](const Rational& x) { return x == 0; });
    if (zero) {
      // b >= 0 after normalization.
      if (r.rel == Relation::less_equal) continue;
      if (r.b != 0) return false;
      continue;
    }
    auto key = std::make_pair(static_cast<int>(r.rel), r.a);
    auto it = seen.find(key);
    if (it == seen.end()) {
      seen.emplace(std::move(key), kept.size());
      kept.push_back(std::move(r));
      continue;
    }
    auto& prev = kept[it->second];
    switch (r.rel) {
      case Relation::less_equal: prev.b = std::min(prev.b, r.b); break;
      case Relation::greater_equal: prev.b = std::max(prev.b, r.b); break;
      case Relation::equal:
        if (prev.b != r.b) return false;
        break;
    }
  }

  // Componentwise dominance, prefiltered in floating point.
  const std::size_t m = kept.size();
  std::vector<std::vector<double>> approx(m);
  for (std::size_t i = 0; i < m; ++i) {
    approx[i].reserve(kept[i].a.size());
    for (const auto& x : kept[i].a) approx[i].push_back(x.convert_to<double>());
  }
  auto dominates = [&](std::size_t strong, std::size_t weak) {
    // True when row `weak` is implied by row `strong`.
    const auto& s = kept[strong];
    const auto& w = kept[weak];
    const bool le = w.rel == Relation::less_equal;
    if (le ? s.b > w.b : s.b < w.b) return false;
    const auto& sa = approx[strong];
    const auto& wa = approx[weak];
    for (std::size_t j = 0; j < sa.size(); ++j) {
      if (le ? sa[j] < wa[j] - 1e-9 : sa[j] > wa[j] + 1e-9) return false;
    }
    for (std::size_t j = 0; j < sa.size(); ++j) {
      if (le ? s.a[j] < w.a[j] : s.a[j] > w.a[j]) return false;
    }
    return true;
  };
  std::vector<bool> removed(m, false);
  for (std::size_t i = 0; i < m; ++i) {
    if (kept[i].rel == Relation::equal) continue;
    for (std::size_t k = 0; k < m && !removed[i]; ++k) {
      if (k == i || removed[k] || kept[k].rel != kept[i].rel) continue;
      if (dominates(k, i)) removed[i] = true;
    }
  }
  rows.clear();
  for (std::size_t i = 0; i < m; ++i) {
    if (!removed[i]) rows.push_back(std::move(kept[i]));
  }
  return true;
}

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols) : m_(rows), n_(cols), t_(rows, std::vector<Rational>(cols + 1)) {}

  Rational& at(std::size_t r, std::size_t c) { return t_[r][c]; }
  Rational& rhs(std::size_t r) { return t_[r][n_]; }
  std::size_t rows() const { return m_; }
  std::size_t cols() const { return n_; }
  std::vector<std::size_t> basis;

  // Reduced costs of `cost` for the current basis; returns objective value.
  void price(const std::vector<Rational>& cost, std::vector<Rational>& reduced, Rational& value) {
    reduced = cost;
    value = 0;
    for (std::size_t r = 0; r < m_; ++r) {
      const Rational& cb = cost[basis[r]];
      if (cb == 0) continue;
      for (std::size_t c = 0; c < n_; ++c) {
        if (t_[r][c] != 0) reduced[c] -= cb * t_[r][c];
      }
      value += cb * t_[r][n_];
    }
  }

  void pivot(std::size_t pr, std::size_t pc, std::vector<Rational>& reduced, Rational& value) {
    auto& prow = t_[pr];
    const Rational inv = 1 / prow[pc];
    std::vector<std::size_t> nz;
    for (std::size_t c = 0; c <= n_; ++c) {
      if (prow[c] != 0) {
        prow[c] *= inv;
        nz.push_back(c);
      }
    }
    for (std::size_t r = 0; r < m_; ++r) {
      if (r == pr) continue;
      auto& row = t_[r];
      if (row[pc] == 0) continue;
      const Rational f = row[pc];
      for (std::size_t c : nz) row[c] -= f * prow[c];
    }
    if (reduced[pc] != 0) {
      const Rational f = reduced[pc];
      for (std::size_t c : nz) {
        if (c == n_) {
          value += f * prow[c];
        } else {
          reduced[c] -= f * prow[c];
        }
      }
    }
    basis[pr] = pc;
  }

  void remove_row(std::size_t r) {
    t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(r));
    basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(r));
    --m_;
  }

 private:
  std::size_t m_, n_;
  std::vector<std::vector<Rational>> t_;
};

enum class PhaseResult { optimal, unbounded };

// Maximizes the priced objective over columns with allowed[c] set.
inline PhaseResult run_simplex(Tableau& t, std::vector<Rational>& reduced, Rational& value,
                               const std::vector<bool>& allowed, std::size_t& pivots) {
  for (;;) {
    std::size_t enter = t.cols();
    for (std::size_t c = 0; c < t.cols(); ++c) {
      if (allowed[c] && reduced[c] > 0) {
        enter = c;
        break;
      }
    }
    if (enter == t.cols()) return PhaseResult::optimal;
    std::optional<std::size_t> leave;
    Rational best_ratio;
    for (std::size_t r = 0; r < t.rows(); ++r) {
      const Rational& a = t.at(r, enter);
      if (a <= 0) continue;
      Rational ratio = t.rhs(r) / a;
      if (!leave || ratio < best_ratio ||
          (ratio == best_ratio && t.basis[r] < t.basis[*leave])) {
        leave = r;
        best_ratio = std::move(ratio);
      }
    }
    if (!leave) return PhaseResult::unbounded;
    t.pivot(*leave, enter, reduced, value);
    ++pivots;
  }
}

}  // namespace detail

inline LPSolution solve(const RationalLP& lp, SolveOptions opts = {}) {
  lp.validate();
  const std::size_t nvars = lp.variable_count();

  // Column layout: one column per nonnegative variable, two (x+ and x-) per
  // free variable.
  std::vector<std::size_t> pos_col(nvars), neg_col(nvars, SIZE_MAX);
  std::size_t ncols = 0;
  for (std::size_t j = 0; j < nvars; ++j) {
    pos_col[j] = ncols++;
    if (!lp.nonnegative[j]) neg_col[j] = ncols++;
  }
  const std::size_t structural = ncols;

  std::vector<detail::StdRow> rows;
  rows.reserve(lp.constraints.size());
  for (const auto& c : lp.constraints) {
    detail::StdRow r{std::vector<Rational>(structural), c.relation, c.rhs};
    for (std::size_t j = 0; j < nvars; ++j) {
      if (c.coefficients[j] == 0) continue;
      r.a[pos_col[j]] = c.coefficients[j];
      if (neg_col[j] != SIZE_MAX) r.a[neg_col[j]] = -c.coefficients[j];
    }
    const bool flip = r.b < 0 || (r.b == 0 && r.rel == Relation::greater_equal);
    if (flip) {
      for (auto& x : r.a) x = -x;
      r.b = -r.b;
      if (r.rel == Relation::less_equal) {
        r.rel = Relation::greater_equal;
      } else if (r.rel == Relation::greater_equal) {
        r.rel = Relation::less_equal;
      }
    }
    rows.push_back(std::move(r));
  }

  LPSolution sol;
  if (opts.presolve) {
    if (!detail::presolve_rows(rows)) {
      sol.status = LPStatus::infeasible;
      return sol;
    }
  }
  sol.rows_after_presolve = rows.size();

  std::size_t slack_count = 0, artificial_count = 0;
  for (const auto& r : rows) {
    if (r.rel != Relation::equal) ++slack_count;
    if (r.rel != Relation::less_equal) ++artificial_count;
  }
  const std::size_t total_cols = structural + slack_count + artificial_count;
  if (rows.size() * (total_cols + 1) > opts.max_cells) {
    throw LPError("tableau of " + std::to_string(rows.size()) + " x " +
                  std::to_string(total_cols) + " exceeds the configured size limit");
  }

  detail::Tableau t(rows.size(), total_cols);
  t.basis.assign(rows.size(), 0);
  std::size_t next_slack = structural, next_art = structural + slack_count;
  std::vector<bool> is_artificial(total_cols, false);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < structural; ++c) t.at(r, c) = rows[r].a[c];
    t.rhs(r) = rows[r].b;
    switch (rows[r].rel) {
      case Relation::less_equal:
        t.at(r, next_slack) = 1;
        t.basis[r] = next_slack++;
        break;
      case Relation::greater_equal:
        t.at(r, next_slack++) = -1;
        [[fallthrough]];
      case Relation::equal:
        t.at(r, next_art) = 1;
        is_artificial[next_art] = true;
        t.basis[r] = next_art++;
        break;
    }
  }

  std::vector<Rational> reduced;
  Rational value;
  std::vector<bool> allowed(total_cols, true);

  if (artificial_count > 0) {
    std::vector<Rational> phase1(total_cols);
    for (std::size_t c = 0; c < total_cols; ++c) {
      if (is_artificial[c]) phase1[c] = -1;
    }
    t.price(phase1, reduced, value);
    detail::run_simplex(t, reduced, value, allowed, sol.pivots);
    if (value < 0) {
      sol.status = LPStatus::infeasible;
      return sol;
    }
    // Drive zero-level artificials out of the basis; rows where that is
    // impossible are linear combinations of the others.
    for (std::size_t r = 0; r < t.rows();) {
      if (!is_artificial[t.basis[r]]) {
        ++r;
        continue;
      }
      std::optional<std::size_t> col;
      for (std::size_t c = 0; c < total_cols; ++c) {
        if (!is_artificial[c] && t.at(r, c) != 0) {
          col = c;
          break;
        }
      }
      if (col) {
        t.pivot(r, *col, reduced, value);
        ++sol.pivots;
        ++r;
      } else {
        t.remove_row(r);
      }
    }
    for (std::size_t c = 0; c < total_cols; ++c) {
      if (is_artificial[c]) allowed[c] = false;
    }
  }

  std::vector<Rational> cost(total_cols);
  for (std::size_t j = 0; j < nvars; ++j) {
    const Rational c = lp.sense == Sense::maximize ? lp.objective[j] : Rational(-lp.objective[j]);
    cost[pos_col[j]] = c;
    if (neg_col[j] != SIZE_MAX) cost[neg_col[j]] = -c;
  }
  t.price(cost, reduced, value);
  if (detail::run_simplex(t, reduced, value, allowed, sol.pivots) ==
      detail::PhaseResult::unbounded) {
    sol.status = LPStatus::unbounded;
    return sol;
  }

  std::vector<Rational> col_value(total_cols);
  for (std::size_t r = 0; r < t.rows(); ++r) col_value[t.basis[r]] = t.rhs(r);
  sol.assignment.resize(nvars);
  for (std::size_t j = 0; j < nvars; ++j) {
    sol.assignment[j] = col_value[pos_col[j]];
    if (neg_col[j] != SIZE_MAX) sol.assignment[j] -= col_value[neg_col[j]];
  }
  sol.status = LPStatus::optimal;
  sol.value = objective_value(lp, sol.assignment);
  const Rational tableau_value = lp.sense == Sense::maximize ? value : Rational(-value);
  if (!is_feasible(lp, sol.assignment) || tableau_value != sol.value) {
    throw std::logic_error("simplex produced an assignment that fails verification");
  }
  return sol;
}

// Plain-text listing:
//   var <name>        (one per variable; "free" suffix for unrestricted ones)
//   max|min <c_1> ... <c_n>
//   row <a_1> ... <a_n> <=|>=|= <rhs>
inline std::string dump_lp(const RationalLP& lp) {
  std::ostringstream out;
  for (std::size_t j = 0; j < lp.variable_count(); ++j) {
    out << "var " << lp.variable_names[j] << (lp.nonnegative[j] ? "" : " free") << '\n';
  }
  out << (lp.sense == Sense::maximize ? "max" : "min");
  for (const auto& c : lp.objective) out << ' ' << c;
  out << '\n';
  for (const auto& c : lp.constraints) {
    out << "row";
    for (const auto& a : c.coefficients) out << ' ' << a;
    out << ' '
        << (c.relation == Relation::less_equal
                ? "<="
                : c.relation == Relation::greater_equal ? ">=" : "=")
        << ' ' << c.rhs << '\n';
  }
  return out.str();
}

inline RationalLP parse_lp(std::istream& in) {
  RationalLP lp;
  std::string line;
  std::size_t line_no = 0;
  bool have_objective = false;
  auto parse_rational = [&](const std::string& tok) {
    try {
      return Rational(tok);
    } catch (const std::exception&) {
      throw LPError("line " + std::to_string(line_no) + ": bad rational '" + tok + "'");
    }
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind) || kind[0] == '#') continue;
    if (kind == "var") {
      if (have_objective) throw LPError("line " + std::to_string(line_no) + ": var after objective");
      std::string name, flag;
      ls >> name >> flag;
      lp.variable_names.push_back(name);
      lp.nonnegative.push_back(flag != "free");
      lp.objective.emplace_back(0);
    } else if (kind == "max" || kind == "min") {
      lp.sense = kind == "max" ? Sense::maximize : Sense::minimize;
      std::string tok;
      std::size_t j = 0;
      while (ls >> tok) {
        if (j >= lp.variable_count()) throw LPError("line " + std::to_string(line_no) + ": too many coefficients");
        lp.objective[j++] = parse_rational(tok);
      }
      if (j != lp.variable_count()) throw LPError("line " + std::to_string(line_no) + ": too few coefficients");
      have_objective = true;
    } else if (kind == "row") {
      std::vector<std::string> toks;
      std::string tok;
      while (ls >> tok) toks.push_back(tok);
      if (toks.size() != lp.variable_count() + 2) {
        throw LPError("line " + std::to_string(line_no) + ": wrong number of row tokens");
      }
      std::vector<Rational> a;
      for (std::size_t j = 0; j < lp.variable_count(); ++j) a.push_back(parse_rational(toks[j]));
      const std::string& rel = toks[lp.variable_count()];
      Relation r;
      if (rel == "<=") r = Relation::less_equal;
      else if (rel == ">=") r = Relation::greater_equal;
      else if (rel == "=") r = Relation::equal;
      else throw LPError("line " + std::to_string(line_no) + ": bad relation '" + rel + "'");
      lp.constraints.push_back({std::move(a), r, parse_rational(toks.back()), {}});
    } else {
      throw LPError("line " + std::to_string(line_no) + ": unknown directive '" + kind + "'");
    }
  }
  return lp;
}

}  // namespace hublab
