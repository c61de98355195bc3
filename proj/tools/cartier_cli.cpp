// Copyright 2026 The cartier library developers
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
//
// Command-line front end. Subcommands: anumber, rank-table, points,
// conjecture, code. Exit codes: 0 success/consistent, 1 mathematical
// inconsistency detected (route mismatch, unstable basis, failed maximality
// expectation, bound-chain violation), 2 usage error. Identical invocations
// produce byte-identical output.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cartier/cartier.hpp"
#include "cartier/serialize.hpp"

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kInconsistent = 1;
constexpr int kUsage = 2;

struct Output {
  std::ofstream file;
  std::ostream* os = &std::cout;
  bool open(const std::string& path) {
    if (path.empty()) return true;
    file.open(path);
    if (!file) {
      std::cerr << "error: cannot open output file '" << path << "'\n";
      return false;
    }
    os = &file;
    return true;
  }
  std::ostream& stream() { return *os; }
};

void emit_json(std::ostream& os, const json& j) { os << j.dump(2) << '\n'; }

cartier::BasisMode parse_mode(const std::string& s) {
  return s == "swapped" ? cartier::BasisMode::swapped : cartier::BasisMode::valuation;
}

cartier::HRange parse_h_range(const std::string& s) {
  return s == "half" ? cartier::HRange::half : cartier::HRange::full;
}

void pretty_rank_report(std::ostream& os, const cartier::RankReport& r) {
  os << "method:     " << r.method << '\n'
     << "curve:      A_" << r.t << " (p=" << r.p << ", s=" << r.s << ")\n"
     << "genus:      " << r.genus << '\n'
     << "rank:       " << r.rank << '\n'
     << "a-number:   " << r.a_number << '\n';
  if (r.basis_mode) os << "basis mode: " << *r.basis_mode << '\n';
  if (r.h_range) os << "h range:    " << *r.h_range << '\n';
}

int cmd_anumber(std::int64_t p, std::int64_t s, std::int64_t t, const std::string& method,
                const std::string& basis_mode, const std::string& h_range,
                const std::string& format, Output& out) {
  const cartier::BasisMode mode = parse_mode(basis_mode);
  if (format == "csv") {
    std::cerr << "error: anumber has no CSV form; use json or pretty\n";
    return kUsage;
  }
  if (method != "nabla" && t != 2) {
    std::cerr << "error: --method " << method << " is defined for t = 2 only\n";
    return kUsage;
  }
  try {
    if (method == "all") {
      const cartier::AllRoutes all = cartier::anumber_all(p, s, mode);
      if (format == "pretty") {
        pretty_rank_report(out.stream(), all.nabla);
        out.stream() << "congruence rank (half h-range): " << all.congruence_half << '\n'
                     << "congruence rank (full h-range): " << all.congruence_full << '\n'
                     << "closed-formula rank:            " << all.closed.rank << '\n'
                     << "closed-formula a-number:        " << all.closed.a_number << '\n'
                     << "consistent: " << (all.consistent ? "true" : "false") << '\n';
      } else {
        emit_json(out.stream(), json(all));
      }
      return all.consistent ? kOk : kInconsistent;
    }
    cartier::RankReport r;
    if (method == "congruence") {
      r = cartier::rank_congruence(p, s, parse_h_range(h_range), mode);
    } else if (method == "closed") {
      r = cartier::closed_report(p, s);
    } else if (method == "nabla") {
      r = cartier::a_number(cartier::make_curve_At(p, s, t), mode);
    } else {
      std::cerr << "error: unknown --method '" << method << "'\n";
      return kUsage;
    }
    if (format == "pretty")
      pretty_rank_report(out.stream(), r);
    else
      emit_json(out.stream(), json(r));
    return kOk;
  } catch (const cartier::basis_not_stable_error& e) {
    json j{{"error", "BasisNotStable"},
           {"element", {e.element().first, e.element().second}},
           {"escaped", {e.escaped().first, e.escaped().second}},
           {"message", e.what()}};
    emit_json(out.stream(), j);
    return kInconsistent;
  }
}

int cmd_rank_table(std::int64_t p_max, const std::vector<std::int64_t>& s_list,
                   const std::string& format, bool format_explicit, Output& out) {
  const auto rows = cartier::rank_table(p_max, s_list);
  if (format_explicit && format == "json") {
    emit_json(out.stream(), json(rows));
  } else {
    cartier::write_rank_table_csv(out.stream(), rows);  // a table: CSV unless asked otherwise
  }
  return kOk;
}

int cmd_points(std::optional<std::int64_t> p, std::optional<std::int64_t> s, std::int64_t t,
               std::optional<std::int64_t> ell, std::optional<std::int64_t> r, std::int64_t m,
               std::optional<std::int64_t> degree, const std::string& format, Output& out) {
  const bool at_branch = p.has_value() || s.has_value();
  const bool gh_branch = ell.has_value() || r.has_value();
  if (at_branch == gh_branch) {
    std::cerr << "error: points needs either --p/--s or --ell/--r\n";
    return kUsage;
  }
  cartier::PointList points;
  cartier::MaximalityReport report;
  json id;
  bool expect_maximal = false;
  if (at_branch) {
    if (!p || !s) {
      std::cerr << "error: points --p and --s are both required\n";
      return kUsage;
    }
    const cartier::ArtinSchreierCurve c = cartier::make_curve_At(*p, *s, t);
    const std::int64_t deg = degree.value_or(c.ambient_degree);
    points = cartier::rational_points(c, deg);
    report = cartier::is_maximal(c, deg);
    id = json{{"family", "artin_schreier"}, {"p", c.p},         {"s", c.s},
              {"t", c.t},                   {"genus", c.genus}, {"degree", deg}};
    expect_maximal = true;
  } else {
    if (!ell || !r) {
      std::cerr << "error: points --ell and --r are both required\n";
      return kUsage;
    }
    const cartier::GeneralizedHermitian g = cartier::make_generalized_hermitian(*ell, *r, m);
    const std::int64_t deg = degree.value_or(g.field_degree);
    points = cartier::rational_points(g, deg);
    report = cartier::is_maximal(g, deg);
    id = json{{"family", "generalized_hermitian"}, {"ell", g.ell},     {"r", g.r},
              {"m", g.m},                          {"genus", g.genus}, {"degree", deg}};
    expect_maximal = *r == 1;
  }
  if (format == "csv") {
    cartier::write_points_csv(out.stream(), points);
  } else if (format == "pretty") {
    out.stream() << "field order:      " << report.field_order << '\n'
                 << "affine points:    " << points.affine.size() << '\n'
                 << "at infinity:      " << points.at_infinity << '\n'
                 << "count:            " << report.count << '\n'
                 << "hasse-weil bound: " << report.hasse_weil_bound << '\n'
                 << "maximal:          " << (report.maximal ? "true" : "false") << '\n';
  } else {
    json j = id;
    j["field_order"] = report.field_order;
    j["affine"] = points.affine.size();
    j["at_infinity"] = points.at_infinity;
    j["count"] = report.count;
    j["hasse_weil_bound"] = report.hasse_weil_bound;
    j["maximal"] = report.maximal;
    emit_json(out.stream(), j);
  }
  return report.maximal == expect_maximal ? kOk : kInconsistent;
}

int cmd_conjecture(std::int64_t ell, std::int64_t r, const std::string& format, Output& out) {
  if (format == "csv") {
    std::cerr << "error: conjecture has no CSV form; use json or pretty\n";
    return kUsage;
  }
  const cartier::ConjectureReport report = cartier::conjecture_check(ell, r);
  if (format == "pretty") {
    out.stream() << "curve:         y^2 = x + x^l + ... + x^(l^(2r-1)), l=" << report.ell
                 << ", r=" << report.r << '\n'
                 << "genus:         " << report.genus << '\n'
                 << "a conjectured: " << report.a_conjectured << '\n'
                 << "a computed:    " << report.a_computed << '\n'
                 << "a nabla route: " << report.a_nabla << '\n'
                 << "routes agree:  " << (report.routes_agree ? "true" : "false") << '\n'
                 << "agrees:        " << (report.agrees ? "true" : "false") << '\n';
  } else {
    emit_json(out.stream(), json(report));
  }
  return report.routes_agree ? kOk : kInconsistent;
}

int cmd_code(std::int64_t p, std::int64_t s, std::int64_t t, std::int64_t m,
             std::optional<std::int64_t> n, const std::string& format, Output& out) {
  const cartier::ArtinSchreierCurve c = cartier::make_curve_At(p, s, t);
  const cartier::EvaluationCode code = cartier::build_code(c, m, n);
  if (format == "csv") {
    cartier::write_generator_csv(out.stream(), code);
    return kOk;
  }
  const cartier::BoundReport report = cartier::bound_report(code);
  if (format == "pretty") {
    out.stream() << "code:            [n=" << report.n << ", k=" << report.k << "] from m="
                 << report.m << '\n'
                 << "genus:           " << report.genus << '\n'
                 << "a-number:        " << report.a_number << '\n'
                 << "improved bound:  " << report.improved_bound << '\n'
                 << "goppa bound:     " << report.goppa_bound << '\n'
                 << "singleton bound: " << report.singleton_bound << '\n';
    if (report.exact_d)
      out.stream() << "exact d:         " << *report.exact_d << '\n';
    else
      out.stream() << "exact d:         (enumeration guard exceeded)\n";
    out.stream() << "chain ok:        " << (report.chain_ok ? "true" : "false") << '\n';
  } else {
    emit_json(out.stream(), json(report));
  }
  return report.chain_ok ? kOk : kInconsistent;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cartier operator computations on Artin-Schreier and hyperelliptic curves"};
  app.require_subcommand(1);

  std::string format = "json";
  std::string output_path;
  auto* format_opt = app.add_option("--format", format, "Output format")
                         ->check(CLI::IsMember({"json", "csv", "pretty"}))
                         ->capture_default_str();
  app.add_option("--output", output_path, "Write output to this file instead of stdout");

  // anumber
  auto* an = app.add_subcommand("anumber", "a-number and Cartier matrix rank of A_t");
  an->fallthrough();  // let --format / --output appear after the subcommand too
  std::int64_t an_p = 0, an_s = 0, an_t = 2;
  std::string an_method = "nabla", an_mode = "valuation", an_h = "full";
  an->add_option("--p", an_p, "Odd prime characteristic")->required();
  an->add_option("--s", an_s, "Even extension degree (q = p^s)")->required();
  an->add_option("--t", an_t, "Divisor of sqrt(q)+1 selecting A_t")->capture_default_str();
  an->add_option("--method", an_method, "Computation route")
      ->check(CLI::IsMember({"nabla", "congruence", "closed", "all"}))
      ->capture_default_str();
  an->add_option("--basis-mode", an_mode, "Differential basis membership weights")
      ->check(CLI::IsMember({"valuation", "swapped"}))
      ->capture_default_str();
  an->add_option("--h-range", an_h, "Congruence route h summation range")
      ->check(CLI::IsMember({"half", "full"}))
      ->capture_default_str();

  // rank-table
  auto* rt = app.add_subcommand("rank-table", "Closed-formula table with matrix cross-checks");
  rt->fallthrough();
  std::int64_t rt_pmax = 13;
  std::vector<std::int64_t> rt_slist{2, 4};
  rt->add_option("--p-max", rt_pmax, "Largest prime p")->capture_default_str();
  rt->add_option("--s-list", rt_slist, "Even extension degrees")->delimiter(',');

  // points
  auto* pt = app.add_subcommand("points", "Rational point counts and maximality");
  pt->fallthrough();
  std::optional<std::int64_t> pt_p, pt_s, pt_ell, pt_r, pt_degree;
  std::int64_t pt_t = 2, pt_m = 2;
  pt->add_option("--p", pt_p, "Odd prime (Artin-Schreier family)");
  pt->add_option("--s", pt_s, "Even extension degree");
  pt->add_option("--t", pt_t, "Divisor of sqrt(q)+1")->capture_default_str();
  pt->add_option("--ell", pt_ell, "Odd prime (generalized Hermitian family)");
  pt->add_option("--r", pt_r, "Tower half-height");
  pt->add_option("--m", pt_m, "Exponent of y")->capture_default_str();
  pt->add_option("--degree", pt_degree,
                 "Field degree to count over (default: the curve's natural even degree)");

  // conjecture
  auto* cj = app.add_subcommand("conjecture", "a-number conjecture audit for y^2 = trace poly");
  cj->fallthrough();
  std::int64_t cj_ell = 0, cj_r = 0;
  cj->add_option("--ell", cj_ell, "Odd prime")->required();
  cj->add_option("--r", cj_r, "Tower half-height (>= 2)")->required();

  // code
  auto* cd = app.add_subcommand("code", "One-point evaluation code bound report");
  cd->fallthrough();
  std::int64_t cd_p = 0, cd_s = 0, cd_t = 2, cd_m = 0;
  std::optional<std::int64_t> cd_n;
  cd->add_option("--p", cd_p, "Odd prime")->required();
  cd->add_option("--s", cd_s, "Even extension degree")->required();
  cd->add_option("--t", cd_t, "Divisor of sqrt(q)+1")->capture_default_str();
  cd->add_option("--m", cd_m, "Divisor degree of G = m P_inf")->required();
  cd->add_option("--n", cd_n, "Truncate the point list to the first n points");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }

  Output out;
  if (!out.open(output_path)) return kUsage;

  try {
    if (an->parsed()) return cmd_anumber(an_p, an_s, an_t, an_method, an_mode, an_h, format, out);
    if (rt->parsed())
      return cmd_rank_table(rt_pmax, rt_slist, format, format_opt->count() > 0, out);
    if (pt->parsed())
      return cmd_points(pt_p, pt_s, pt_t, pt_ell, pt_r, pt_m, pt_degree, format, out);
    if (cj->parsed()) return cmd_conjecture(cj_ell, cj_r, format, out);
    if (cd->parsed()) return cmd_code(cd_p, cd_s, cd_t, cd_m, cd_n, format, out);
  } catch (const cartier::error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
