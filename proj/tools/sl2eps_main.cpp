/*
 * Copyright 2026 the sl2eps authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sl2eps/census.hpp"
#include "sl2eps/realize.hpp"
#include "sl2eps/report.hpp"
#include "sl2eps/xbar.hpp"

namespace {

using namespace sl2eps;

struct Options {
  int q = 3;
  std::string format = "text";
  std::string method = "little_group";
  std::string out;
  int threads = 1;
};

// (p, f) with q = p^f; config_error unless q is an odd prime power >= 3.
std::pair<int, int> prime_power(int q) {
  require_config(q >= 3, "q must be at least 3");
  require_config(q % 2 == 1, "q must be odd");
  int p = 3;
  while (q % p != 0) p += 2;
  int f = 0;
  int r = q;
  while (r % p == 0) {
    r /= p;
    ++f;
  }
  require_config(r == 1, "q must be a prime power");
  return {p, f};
}

std::int64_t element_budget() {
  const char* s = std::getenv("SL2EPS_MAX_ELEMENTS");
  if (s == nullptr) return GroupTable::kDefaultMaxElements;
  char* end = nullptr;
  const long long v = std::strtoll(s, &end, 10);
  require_config(end != nullptr && *end == '\0' && v > 0,
                 "SL2EPS_MAX_ELEMENTS must be a positive integer");
  return v;
}

/** Lazily built heavy objects shared by the subcommand handlers. */
struct Session {
  Options opt;
  FieldCtx F;
  std::optional<GroupTable> g2_;
  std::optional<CycCtx> c2_;
  std::optional<CharacterTable> table_;

  explicit Session(const Options& o)
      : opt(o),
        F([&] {
          const auto [p, f] = prime_power(o.q);
          return FieldCtx::create(p, f);
        }()) {
    set_thread_count(o.threads);
  }

  const GroupTable& g2() {
    if (!g2_) g2_.emplace(GroupTable::build_g2f(F, element_budget()));
    return *g2_;
  }
  const CycCtx& c2() {
    if (!c2_) c2_.emplace(CycCtx::create(static_cast<int>(g2().exponent())));
    return *c2_;
  }
  // The table used by the theorem/realize stages (always the little-group
  // construction; the chartab stage is where methods are compared).
  const CharacterTable& table() {
    if (!table_) table_ = little_group_table(g2(), c2());
    return *table_;
  }
};

void write_out(const Options& o, const std::string& payload) {
  if (o.out.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  require_config(f.good(), "cannot open output file " + o.out);
  f << payload;
}

int finish(const Options& o, const std::vector<CheckResult>& checks) {
  write_out(o, render_checks(checks, parse_report_format(o.format)));
  return all_pass(checks) ? 0 : 1;
}

// --- check builders ---------------------------------------------------

CheckResult check_order(Session& s) {
  const int q = s.opt.q;
  const GroupTable& G = s.g2();
  CheckResult r{"order", q, false, {}};
  const std::int64_t qq = static_cast<std::int64_t>(q) * q;
  const std::int64_t expected = qq * qq * (qq - 1);
  r.details["group_order"] = G.order();
  r.details["expected"] = expected;
  r.details["exponent"] = G.exponent();
  const SemidirectReport semi = check_semidirect(G);
  r.details["kernel_order"] = semi.n_order;
  r.details["semidirect_over_kernel"] = semi.ok();
  bool sub_ok = true;
  const auto expect = [&](NamedSubgroup which, std::int64_t want,
                          const char* key) {
    const std::int64_t got = named_subgroup(G, which).order();
    r.details[key] = got;
    sub_ok = sub_ok && got == want;
  };
  expect(NamedSubgroup::N, qq * q, "order_kernel");
  expect(NamedSubgroup::S_F, 2 * qq * qq, "order_part_stabilizer");
  expect(NamedSubgroup::SS, qq, "order_derived_of_stabilizer");
  expect(NamedSubgroup::A, 2 * q, "order_signed_shifts");
  expect(NamedSubgroup::Z, 2, "order_center");
  r.pass = G.order() == expected && semi.ok() && sub_ok;
  return r;
}

CheckResult check_classes(Session& s) {
  const int q = s.opt.q;
  const ClassSet& cls = s.g2().classes();
  CheckResult r{"classes", q, false, {}};
  const int expected = (q + 2) * (q + 2);
  std::int64_t covered = 0;
  for (int i = 0; i < cls.count(); ++i) covered += cls[i].size;
  r.details["class_count"] = cls.count();
  r.details["expected"] = expected;
  r.details["sizes_cover_group"] = covered == s.g2().order();
  r.pass = cls.count() == expected && covered == s.g2().order();
  return r;
}

CheckResult check_dim_table(const Options& opt) {
  const int q = opt.q;
  CheckResult r{"dim_table", q, false, {}};
  const std::vector<DimRow> rows = dimension_table(q);
  const BigInt weighted = census_weighted_sum(rows);
  const BigInt total = census_total_count(rows);
  const BigInt qq = BigInt(q) * q;
  const BigInt order = qq * qq * (qq - 1);
  const BigInt classes = BigInt(q + 2) * (q + 2);
  // The superseded variant of the last family (2q members instead of 4q)
  // misses the group order by exactly its own weight.
  const BigInt half = (qq - 1) / 2;
  const BigInt deficit = order - (weighted - 2 * q * half * half);
  r.details = census_json_details(q);
  r.details["matches_group_order"] = weighted == order;
  r.details["matches_class_count"] = total == classes;
  r.details["superseded_variant_deficit"] = json_big(deficit);
  r.details["superseded_variant_expected_deficit"] =
      json_big(2 * q * half * half);
  r.pass = weighted == order && total == classes &&
           deficit == 2 * q * half * half;
  return r;
}

CheckResult check_orbits(Session& s) {
  const int q = s.opt.q;
  CheckResult r{"orbits", q, false, {}};
  const GroupTable GF = GroupTable::build_gf(s.F, element_budget());
  const ChiPsiReport rep = chi_psi_report(GF);
  r.details["stabilizer_order"] = rep.stabilizer_order;
  r.details["stabilizer_expected"] = 2 * q;
  r.details["stabilizer_is_signed_unipotent"] =
      rep.stabilizer_is_signed_unipotent;
  r.details["orbits_meeting_the_family"] = 2;
  r.details["characters_per_orbit"] = (q - 1) / 2;
  r.details["in_square_orbit"] = rep.chi_in_square_orbit;
  r.details["in_nonsquare_orbit"] = rep.chi_in_nonsquare_orbit;
  r.details["split_by_square_class"] = rep.orbits_split_by_square_class;
  r.details["ambient_orbit_size"] = (static_cast<std::int64_t>(q) * q - 1) / 2;
  r.details["ambient_orbit_size_square"] = rep.orbit_size_square;
  r.details["ambient_orbit_size_nonsquare"] = rep.orbit_size_nonsquare;
  r.details["induced_family_size"] = 4 * q;
  const std::int64_t ambient = (static_cast<std::int64_t>(q) * q - 1) / 2;
  r.pass = rep.stabilizer_order == 2 * q &&
           rep.stabilizer_is_signed_unipotent &&
           rep.orbits_split_by_square_class &&
           rep.chi_in_square_orbit == (q - 1) / 2 &&
           rep.chi_in_nonsquare_orbit == (q - 1) / 2 &&
           rep.orbit_size_square == ambient &&
           rep.orbit_size_nonsquare == ambient;

  const std::vector<KernelOrbitCensusRow> census = kernel_orbit_census(GF);
  auto& arr = r.details["kernel_orbits"] = OrderedJson::array();
  std::int64_t covered = 0;
  for (const KernelOrbitCensusRow& row : census) {
    OrderedJson e;
    e["representative"] = row.rep_id;
    e["size"] = row.size;
    e["stabilizer_order"] = row.stabilizer_order;
    arr.push_back(e);
    covered += row.size;
  }
  const std::int64_t qcube = static_cast<std::int64_t>(q) * q * q;
  r.details["kernel_orbits_cover"] = covered;
  r.pass = r.pass && covered == qcube;
  return r;
}

CheckResult check_variety(Session& s) {
  const int q = s.opt.q;
  const GroupTable& G = s.g2();
  CheckResult r{"variety", q, false, {}};
  const XbarSpace X(G);
  const std::int64_t expected_size =
      static_cast<std::int64_t>(q) * (static_cast<std::int64_t>(q) * q - 1);
  r.details["points"] = X.size();
  r.details["expected_points"] = expected_size;
  r.details["parts"] = X.part_count();
  r.details["expected_parts"] = (static_cast<std::int64_t>(q) * q - 1) / 2;
  r.details["points_per_part"] = 2 * q;

  const bool exhaustive = q == 3;
  const bool axioms = variety_axioms_hold(X, exhaustive);
  r.details["action_axioms"] = axioms;
  r.details["action_axioms_mode"] =
      exhaustive ? "exhaustive" : "generator_sampled";
  const bool classfn = lefschetz_is_class_function(X, exhaustive);
  r.details["fixed_counts_are_class_function"] = classfn;

  // Transitivity by orbit closure from point 0.
  std::vector<char> seen(X.size(), 0);
  std::vector<std::int64_t> stack{0};
  seen[0] = 1;
  std::int64_t reached = 1;
  while (!stack.empty()) {
    const std::int64_t i = stack.back();
    stack.pop_back();
    for (int g : G.generators()) {
      const std::int64_t j = X.act(g, i);
      if (!seen[j]) {
        seen[j] = 1;
        ++reached;
        stack.push_back(j);
      }
    }
  }
  const bool transitive = reached == X.size();
  r.details["transitive"] = transitive;

  const Subgroup SF = named_subgroup(G, NamedSubgroup::S_F);
  const bool stab_named = X.part_stabilizer_members() == SF.members();
  r.details["part_stabilizer_is_diagonal_sign_type"] = stab_named;
  r.details["orbit_stabilizer_identity"] =
      SF.order() * X.part_count() == G.order();

  const bool symbolic = shift_formula_symbolic_check();
  r.details["fiber_shift_symbolically_constant_free"] = symbolic;
  r.details["fiber_coordinates"] = "(a0, c0, t); no defining constant occurs";

  // Double cosets of the Borel.  Over the rational points there are four
  // cells: the Borel itself, the big cell of the Weyl reflection
  // w = (0, -1; 1, 0), and two nilpotent cells represented by
  // e_k = (1, 0; k eps, 1) for k a square and k a non-square; membership
  // in a nilpotent cell is decided by the square class of c1 * a0.  Over
  // an algebraic closure the two nilpotent cells fuse (k rescales by any
  // square), leaving the three representatives {1, w, e_1}.
  const Subgroup B = named_subgroup(G, NamedSubgroup::B2);
  const DoubleCosets dc = double_cosets(G, B);
  const FieldCtx& F = s.F;
  const Fq z = F.zero(), o = F.one();
  const Fq nu = F.smallest_non_square();
  const int w2 = G.id_of(Mat2{{z, z}, {F.neg(o), z}, {o, z}, {z, z}});
  const int e1 = G.id_of(Mat2{{o, z}, {z, z}, {z, o}, {o, z}});
  const int env = G.id_of(Mat2{{o, z}, {z, z}, {z, nu}, {o, z}});
  bool cells = dc.reps.size() == 4;
  for (int g = 0; g < G.order() && cells; ++g) {
    const Mat2& m = G.element(g);
    int want;
    if (m.c.r0 != z)
      want = dc.coset_of[w2];
    else if (m.c.r1 == z)
      want = dc.coset_of[G.identity()];
    else
      want = F.is_square(F.mul(m.c.r1, m.a.r0)) ? dc.coset_of[e1]
                                                : dc.coset_of[env];
    cells = dc.coset_of[g] == want;
  }
  cells = cells && dc.coset_of[e1] != dc.coset_of[env] &&
          dc.coset_of[w2] != dc.coset_of[G.identity()];
  r.details["borel_double_cosets"] = static_cast<std::int64_t>(dc.reps.size());
  r.details["borel_double_coset_representatives"] =
      "identity, (0,-1;1,0), (1,0;eps,1), (1,0;nu eps,1) with nu the least "
      "non-square; the last two fuse over a closure";
  r.details["borel_double_cosets_match"] = cells;

  r.pass = X.size() == expected_size &&
           X.part_count() == (static_cast<std::int64_t>(q) * q - 1) / 2 &&
           axioms && classfn && transitive && stab_named && symbolic &&
           cells && SF.order() * X.part_count() == G.order();
  return r;
}

CheckResult check_theorem(Session& s) {
  const int q = s.opt.q;
  CheckResult r{"theorem", q, false, {}};
  const VarietyDecomposition d =
      decompose_variety_character(s.g2(), s.table(), s.c2());
  auto& triples = r.details["multiplicities"] = OrderedJson::array();
  for (int i = 0; i < s.table().count(); ++i) {
    if (d.multiplicities[i] == 0) continue;
    OrderedJson e;
    e["label"] = s.table().irreducibles[i].label;
    e["degree"] = json_big(s.table().irreducibles[i].degree());
    e["multiplicity"] = json_big(d.multiplicities[i]);
    triples.push_back(e);
  }
  r.details["orbit_count"] = json_big(d.orbit_count);
  r.details["burnside_integer"] = d.burnside_matches;
  r.details["perm_equals_point_induction"] = d.perm_matches_point_induction;
  r.details["parts_equal_part_induction"] = d.parts_match_part_induction;
  r.details["part_stabilizer_named"] = d.stabilizer_is_named;
  r.details["transfer_kills_derived_subgroup"] =
      d.transfer_factors_through_quotient;
  r.details["transfer_parameters_twice_each"] = d.transfer_a_values_expected;
  r.details["perm_equals_sum_of_induced_transfers"] = d.induced_sum_matches;
  r.details["base_part_traces_match"] = d.h0_traces_match;
  r.details["isotypic_averages_sum_to_fixed_points"] = d.isotypic_sum_matches;
  r.details["large_constituents_are_transfer_inductions"] =
      d.large_constituents_from_transfer;
  r.details["multiplicity_pattern_matches"] = d.census_matches;
  r.pass = d.ok();
  return r;
}

CheckResult check_realize(Session& s) {
  const int q = s.opt.q;
  CheckResult r{"realize", q, false, {}};
  const InducedFamilyReport rep =
      verify_induced_family(s.g2(), s.table(), s.c2());
  r.details["dual_count"] = rep.dual_count;
  r.details["dual_all_linear"] = rep.dual_all_linear;
  r.details["restriction_parameters_equidistributed"] =
      rep.z_params_equidistributed;
  r.details["admissible_induce_irreducibly"] = rep.admissible_irreducible;
  r.details["inadmissible_induce_reducibly"] = rep.inadmissible_reducible;
  r.details["distinct_irreducibles_realized"] = 4 * q;
  r.details["family_realized_exactly"] = rep.family_realized_exactly;
  r.details["square_twist_fixes_induction"] = rep.square_twist_collapses;
  r.details["coset_action_free"] = rep.coset_action_free;
  r.details["isotypic_projectors_match_inductions"] = rep.lefschetz_matches;
  r.pass = rep.ok();
  return r;
}

// --- subcommand handlers ----------------------------------------------

int run_order(const Options& opt) {
  Session s(opt);
  return finish(opt, {check_order(s)});
}

int run_classes(const Options& opt) {
  Session s(opt);
  const CheckResult chk = check_classes(s);
  const ReportFormat f = parse_report_format(opt.format);
  std::string payload;
  switch (f) {
    case ReportFormat::json: {
      OrderedJson j = classes_json(s.g2());
      j["expected_class_count"] = chk.details["expected"];
      j["matches"] = chk.pass;
      payload = j.dump(2) + "\n";
      break;
    }
    case ReportFormat::csv:
      payload = classes_csv(s.g2());
      break;
    case ReportFormat::text:
      payload = classes_text(s.g2()) + render_checks({chk}, f);
      break;
  }
  write_out(opt, payload);
  return chk.pass ? 0 : 1;
}

int run_chartab(const Options& opt) {
  Session s(opt);
  const ReportFormat f = parse_report_format(opt.format);
  const bool both = opt.method == "both";
  const bool dixon = opt.method == "dixon";

  std::optional<CharacterTable> lg, dx;
  if (both || !dixon) lg = little_group_table(s.g2(), s.c2());
  if (both || dixon) dx = dixon_table(s.g2().view(), s.c2());
  bool pass = true;
  if (both) pass = tables_agree_up_to_row_permutation(*lg, *dx);
  const std::vector<DimRow> rows = dimension_table(opt.q);
  const CharacterTable& primary = lg ? *lg : *dx;
  pass = pass && matches_degree_census(rows, primary);

  std::string payload;
  switch (f) {
    case ReportFormat::json: {
      if (both) {
        OrderedJson j;
        j["little_group"] = chartab_json(s.g2(), *lg, s.c2());
        j["dixon"] = chartab_json(s.g2(), *dx, s.c2());
        j["agree_up_to_row_permutation"] = pass;
        payload = j.dump(2) + "\n";
      } else {
        payload = chartab_json(s.g2(), primary, s.c2()).dump(2) + "\n";
      }
      break;
    }
    case ReportFormat::csv: {
      std::string out = "method,label,degree\n";
      for (const CharacterTable* t : {lg ? &*lg : nullptr, dx ? &*dx : nullptr}) {
        if (t == nullptr) continue;
        std::istringstream in(chartab_csv(*t));
        std::string line;
        std::getline(in, line);  // drop the inner header
        while (std::getline(in, line)) out += t->method + "," + line + "\n";
      }
      payload = out;
      break;
    }
    case ReportFormat::text: {
      payload.clear();
      if (lg) payload += chartab_text(s.g2(), *lg);
      if (dx) payload += chartab_text(s.g2(), *dx);
      if (both)
        payload += std::string("tables agree up to row permutation: ") +
                   (pass ? "true" : "false") + "\n";
      break;
    }
  }
  write_out(opt, payload);
  return pass ? 0 : 1;
}

int run_dim_table(const Options& opt) {
  prime_power(opt.q);  // validate before any output
  const CheckResult chk = check_dim_table(opt);
  const ReportFormat f = parse_report_format(opt.format);
  std::string payload;
  switch (f) {
    case ReportFormat::json:
      payload = check_to_json(chk).dump(2) + "\n";
      break;
    case ReportFormat::csv:
      payload = census_csv(opt.q);
      break;
    case ReportFormat::text:
      payload = census_text(opt.q) + render_checks({chk}, f);
      break;
  }
  write_out(opt, payload);
  return chk.pass ? 0 : 1;
}

int run_orbits(const Options& opt) {
  Session s(opt);
  return finish(opt, {check_orbits(s)});
}

int run_variety(const Options& opt) {
  Session s(opt);
  return finish(opt, {check_variety(s)});
}

int run_theorem(const Options& opt) {
  Session s(opt);
  return finish(opt, {check_theorem(s)});
}

int run_realize(const Options& opt) {
  Session s(opt);
  return finish(opt, {check_realize(s)});
}

CheckResult check_chartab_summary(Session& s) {
  CheckResult r{"chartab", s.opt.q, false, {}};
  const bool both = s.opt.method == "both";
  const bool dixon_only = s.opt.method == "dixon";
  const CharacterTable* primary = nullptr;
  std::optional<CharacterTable> dx;
  if (both || dixon_only) {
    dx = dixon_table(s.g2().view(), s.c2());
    primary = &*dx;
  }
  if (!dixon_only) primary = &s.table();
  bool agree = true;
  if (both) agree = tables_agree_up_to_row_permutation(s.table(), *dx);
  const bool census = matches_degree_census(dimension_table(s.opt.q), *primary);
  r.details["method"] = s.opt.method;
  r.details["irreducibles"] = primary->count();
  if (both) r.details["agree_up_to_row_permutation"] = agree;
  r.details["degree_census_matches"] = census;
  r.pass = agree && census;
  return r;
}

int run_verify(const Options& opt) {
  Session s(opt);
  std::vector<CheckResult> checks;
  checks.push_back(check_order(s));
  checks.push_back(check_classes(s));
  checks.push_back(check_dim_table(opt));
  checks.push_back(check_chartab_summary(s));
  checks.push_back(check_orbits(s));
  checks.push_back(check_variety(s));
  checks.push_back(check_theorem(s));
  checks.push_back(check_realize(s));
  return finish(opt, checks);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact character theory of SL2 over the dual numbers F_q[eps]"};
  app.require_subcommand(1);

  Options opt;
  const auto add_common = [&](CLI::App* sub, bool with_method) {
    sub->add_option("--q", opt.q, "odd prime power field size")
        ->capture_default_str();
    sub->add_option("--format", opt.format, "json, csv, or text")
        ->capture_default_str();
    if (with_method)
      sub->add_option("--method", opt.method,
                      "little_group, dixon, or both")
          ->check(CLI::IsMember({"little_group", "dixon", "both"}))
          ->capture_default_str();
    sub->add_option("--out", opt.out, "write the report to a file");
    sub->add_option("--threads", opt.threads, "worker threads")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };

  int rc = 0;
  struct Cmd {
    const char* name;
    const char* help;
    bool with_method;
    int (*fn)(const Options&);
  };
  const std::vector<Cmd> cmds{
      {"order", "group orders and the semidirect structure", false,
       run_order},
      {"classes", "conjugacy classes of the full group", false, run_classes},
      {"chartab", "irreducible character table", true, run_chartab},
      {"dim-table", "dimension census of the irreducible families", false,
       run_dim_table},
      {"orbits", "coadjoint orbits of the kernel characters", false,
       run_orbits},
      {"variety", "the fiber variety and its two actions", false,
       run_variety},
      {"theorem", "decomposition of the variety's permutation character",
       false, run_theorem},
      {"realize", "induced realization of the largest family", false,
       run_realize},
      {"verify", "run every check in dependency order", true, run_verify},
  };
  for (const Cmd& c : cmds) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    add_common(sub, c.with_method);
    sub->callback([&opt, &rc, fn = c.fn] { rc = fn(opt); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const config_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    // A failed internal cross-check: the run is unusable, not misconfigured.
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
