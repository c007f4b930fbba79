#pragma once

// Bound tables and the HL/HHL size gap, as data and as text.

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "hublab/bounds.hpp"
#include "hublab/constructions.hpp"
#include "hublab/lp.hpp"
#include "hublab/oracle.hpp"
#include "hublab/verify.hpp"

namespace hublab {

// Six significant digits.
inline std::string decimal(const Rational& r) {
  using Float = boost::multiprecision::cpp_bin_float_50;
  Float f = Float(boost::multiprecision::numerator(r)) / Float(boost::multiprecision::denominator(r));
  return f.str(6, std::ios_base::fmtflags(0));
}

inline std::string exact(const Rational& r) { return r.str(); }

struct BoundRow {
  int k = 0;
  Rational n_k, y_star, psi;
};

struct SandwichLine {
  std::string statement;
  std::string provenance;
  bool holds = false;
};

struct BoundReport {
  int d = 0;
  SelfPairs self_pairs = SelfPairs::on;
  std::vector<BoundRow> rows;
  int argmax_k = 0;
  Rational max_psi;
  BigInt hhl_size;
  BigInt halfsplit_size;
  BigInt halfsplit_formula;
  std::optional<Rational> ropt;
  std::optional<Rational> lopt_dual;
  std::optional<Rational> lopt_primal;
  std::optional<std::size_t> opt;
  std::optional<std::size_t> opt_hhl;
  std::vector<std::string> skipped;  // what was requested but out of range
  std::vector<SandwichLine> sandwiches;
};

struct BoundOptions {
  bool lp = false;
  bool oracle = false;
  SelfPairs self_pairs = SelfPairs::on;
};

namespace detail {

inline std::optional<Rational> lp_value(const RationalLP& lp) {
  auto sol = solve(lp);
  if (sol.status != LPStatus::optimal) return std::nullopt;
  return sol.value;
}

inline Rational ceil_rational(const Rational& r) {
  BigInt q = boost::multiprecision::numerator(r) / boost::multiprecision::denominator(r);
  if (Rational(q) < r) ++q;
  return Rational(q);
}

}  // namespace detail

inline BoundReport make_bound_report(int d, BoundOptions opts = {}) {
  if (d < 0) throw std::out_of_range("bounds: negative dimension");
  BoundReport r;
  r.d = d;
  r.self_pairs = opts.self_pairs;
  const int first = opts.self_pairs == SelfPairs::on || d == 0 ? 0 : 1;
  for (int k = first; k <= d; ++k) r.rows.push_back({k, pair_count(d, k), y_star(d, k), psi(d, k)});
  auto best = psi_argmax(d, opts.self_pairs);
  r.argmax_k = best.k;
  r.max_psi = best.value;
  r.hhl_size = hhl_optimal_size(d);
  r.halfsplit_size = halfsplit_size(d);
  r.halfsplit_formula = halfsplit_size_with_overlap(d);

  if (opts.lp) {
    if (d <= 4) r.ropt = detail::lp_value(build_regular_lp(d, opts.self_pairs));
    else r.skipped.push_back("ROPT (regular LP needs d <= 4)");
    if (d <= 3) r.lopt_dual = detail::lp_value(build_dual_lp(d, opts.self_pairs));
    else r.skipped.push_back("LOPT dual (needs d <= 3)");
    if (d <= 2) r.lopt_primal = detail::lp_value(build_primal_lp(d, opts.self_pairs));
    else r.skipped.push_back("LOPT primal (needs d <= 2)");
  }
  if (opts.oracle) {
    if (d <= 2) r.opt = brute_optimal_hl(hypercube(d), opts.self_pairs).optimum;
    else r.skipped.push_back("OPT (HL oracle needs d <= 2)");
    if (d <= 3) r.opt_hhl = brute_optimal_hhl_hypercube(d).best.optimum;
    else r.skipped.push_back("OPT_HHL (order oracle needs d <= 3)");
  }

  const Rational hhl(r.hhl_size);
  if (r.ropt) {
    const Rational upper = Rational(d + 1) * r.max_psi;
    r.sandwiches.push_back({"max psi " + exact(r.max_psi) + " <= ROPT " + exact(*r.ropt) +
                                " <= (d+1) max psi " + exact(upper),
                            "single distance class vs sum over classes",
                            r.max_psi <= *r.ropt && *r.ropt <= upper});
  }
  const std::optional<Rational> lopt = r.lopt_dual ? r.lopt_dual : r.lopt_primal;
  if (r.ropt && lopt) {
    r.sandwiches.push_back({"ROPT " + exact(*r.ropt) + " = LOPT " + exact(*lopt),
                            "symmetrization of the dual", *r.ropt == *lopt});
  }
  if (r.lopt_dual && r.lopt_primal) {
    r.sandwiches.push_back({"LOPT dual " + exact(*r.lopt_dual) + " = LOPT primal " +
                                exact(*r.lopt_primal),
                            "strong duality", *r.lopt_dual == *r.lopt_primal});
  }
  if (lopt && r.opt) {
    const Rational c = detail::ceil_rational(*lopt);
    const Rational o(static_cast<long long>(*r.opt));
    r.sandwiches.push_back({"ceil(LOPT) " + exact(c) + " <= OPT " + exact(o) + " <= 3^d " +
                                r.hhl_size.str(),
                            "LP relaxation; subset labeling", c <= o && o <= hhl});
  }
  if (r.opt && r.opt_hhl) {
    r.sandwiches.push_back({"OPT " + std::to_string(*r.opt) + " <= OPT_HHL " +
                                std::to_string(*r.opt_hhl) + " = 3^d " + r.hhl_size.str(),
                            "hierarchical labelings are labelings",
                            *r.opt <= *r.opt_hhl && Rational(static_cast<long long>(*r.opt_hhl)) == hhl});
  }
  return r;
}

namespace detail {

inline void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& cells) {
  std::vector<std::size_t> width;
  for (const auto& row : cells) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    out << line << '\n';
  }
}

inline std::string with_decimal(const Rational& r) {
  const std::string e = exact(r);
  const std::string f = decimal(r);
  return e == f ? e : e + " (" + f + ")";
}

}  // namespace detail

inline void print_bound_report(std::ostream& out, const BoundReport& r) {
  out << "bounds d=" << r.d << " self-pairs=" << (r.self_pairs == SelfPairs::on ? "on" : "off")
      << '\n';
  std::vector<std::vector<std::string>> cells{{"k", "N_k", "y_star", "psi"}};
  for (const auto& row : r.rows) {
    cells.push_back({std::to_string(row.k), exact(row.n_k), detail::with_decimal(row.y_star),
                     detail::with_decimal(row.psi)});
  }
  detail::print_table(out, cells);

  std::vector<std::vector<std::string>> facts;
  facts.push_back({"argmax k*", std::to_string(r.argmax_k)});
  facts.push_back({"max psi", detail::with_decimal(r.max_psi)});
  facts.push_back({"HHL optimum 3^d", r.hhl_size.str()});
  facts.push_back({"half-split HL", r.halfsplit_size.str()});
  facts.push_back({"half-split HL with overlap", r.halfsplit_formula.str()});
  if (r.ropt) facts.push_back({"ROPT", detail::with_decimal(*r.ropt)});
  if (r.lopt_dual) facts.push_back({"LOPT (dual)", detail::with_decimal(*r.lopt_dual)});
  if (r.lopt_primal) facts.push_back({"LOPT (primal)", detail::with_decimal(*r.lopt_primal)});
  if (r.opt) facts.push_back({"OPT (HL oracle)", std::to_string(*r.opt)});
  if (r.opt_hhl) facts.push_back({"OPT_HHL (order oracle)", std::to_string(*r.opt_hhl)});
  for (auto& f : facts) f[0] += ":";
  detail::print_table(out, facts);
  for (const auto& s : r.skipped) out << "not computed: " << s << '\n';
  for (const auto& s : r.sandwiches) {
    out << "sandwich: " << s.statement << "  [" << (s.holds ? "holds" : "VIOLATED") << "; "
        << s.provenance << "]\n";
  }
}

inline void print_bound_tsv(std::ostream& out, const BoundReport& r) {
  out << "k\tN_k\ty_star\tpsi\n";
  for (const auto& row : r.rows) {
    out << row.k << '\t' << exact(row.n_k) << '\t' << exact(row.y_star) << '\t' << exact(row.psi)
        << '\n';
  }
}

struct GapRow {
  int d = 0;
  BigInt hhl;              // 3^d
  BigInt halfsplit;        // deduplicated
  BigInt halfsplit_formula;  // with overlap
  bool materialized = false;
  bool verified = false;  // both labelings built, sizes matched, cover checked
  std::string check;      // "exhaustive", "sampled", or empty
};

struct GapOptions {
  int materialize_max = 12;
  int exhaustive_max = 8;
  std::size_t samples = 100000;
  std::uint64_t seed = 1;
  unsigned threads = 1;
};

inline GapRow make_gap_row(int d, const GapOptions& opts) {
  GapRow row;
  row.d = d;
  row.hhl = hhl_optimal_size(d);
  row.halfsplit = halfsplit_size(d);
  row.halfsplit_formula = halfsplit_size_with_overlap(d);
  if (d > opts.materialize_max) return row;
  row.materialized = true;
  const Graph g = hypercube(d);
  const Labeling subset = subset_hhl(d);
  const Labeling half = halfsplit_hl(d);
  CoverOptions cover;
  cover.threads = opts.threads;
  const bool exhaustive = d <= opts.exhaustive_max;
  row.check = exhaustive ? "exhaustive" : "sampled";
  auto check = [&](const Labeling& lab) {
    return exhaustive ? verify_cover(g, lab, cover).valid
                      : verify_cover_sampled(g, lab, opts.samples, opts.seed, cover).valid;
  };
  row.verified = BigInt(subset.total_size()) == row.hhl &&
                 BigInt(half.total_size()) == row.halfsplit && check(subset) && check(half) &&
                 is_hierarchical(subset).hierarchical;
  return row;
}

inline std::vector<GapRow> make_gap_report(int d_max, const GapOptions& opts = {}) {
  if (d_max < 0) throw std::out_of_range("gap-report: negative dimension");
  std::vector<GapRow> rows;
  for (int d = 0; d <= d_max; ++d) rows.push_back(make_gap_row(d, opts));
  return rows;
}

inline std::string gap_status(const GapRow& row) {
  if (!row.materialized) return "formula";
  return row.verified ? "verified (" + row.check + ")" : "FAILED (" + row.check + ")";
}

inline void print_gap_summary(std::ostream& out, const std::vector<GapRow>& rows) {
  for (const auto& row : rows) {
    if (row.halfsplit < row.hhl) {
      out << "first d with half-split HL below 3^d: " << row.d << '\n';
      break;
    }
  }
  const auto& last = rows.back();
  out << "HHL lower bound " << last.hhl << " vs half-split HL " << last.halfsplit << " at d="
      << last.d << '\n';
}

inline void print_gap_report(std::ostream& out, const std::vector<GapRow>& rows) {
  std::vector<std::vector<std::string>> cells{
      {"d", "3^d", "half-split", "with overlap", "status"}};
  for (const auto& row : rows) {
    cells.push_back({std::to_string(row.d), row.hhl.str(), row.halfsplit.str(),
                     row.halfsplit_formula.str(), gap_status(row)});
  }
  detail::print_table(out, cells);
  print_gap_summary(out, rows);
}

inline void print_gap_tsv(std::ostream& out, const std::vector<GapRow>& rows) {
  out << "d\thhl\thalfsplit\thalfsplit_overlap\tstatus\n";
  for (const auto& row : rows) {
    out << row.d << '\t' << row.hhl << '\t' << row.halfsplit << '\t' << row.halfsplit_formula
        << '\t' << (row.materialized ? (row.verified ? "verified" : "failed") : "formula") << '\n';
  }
}

}  // namespace hublab
