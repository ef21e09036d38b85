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

#include "sl2eps/report.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "sl2eps/census.hpp"

namespace sl2eps {

namespace {

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

ReportFormat parse_report_format(const std::string& s) {
  if (s == "json") return ReportFormat::json;
  if (s == "csv") return ReportFormat::csv;
  if (s == "text") return ReportFormat::text;
  throw config_error("unknown format '" + s + "' (expected json, csv, text)");
}

OrderedJson check_to_json(const CheckResult& r) {
  OrderedJson j;
  j["check"] = r.check;
  j["q"] = r.q;
  j["status"] = r.pass ? "PASS" : "FAIL";
  j["details"] = r.details;
  return j;
}

std::string render_checks(const std::vector<CheckResult>& rs, ReportFormat f) {
  std::ostringstream out;
  switch (f) {
    case ReportFormat::json: {
      OrderedJson arr = OrderedJson::array();
      for (const CheckResult& r : rs) arr.push_back(check_to_json(r));
      out << arr.dump(2) << "\n";
      break;
    }
    case ReportFormat::csv: {
      out << "check,q,status,details\n";
      for (const CheckResult& r : rs)
        out << r.check << "," << r.q << "," << (r.pass ? "PASS" : "FAIL")
            << "," << csv_quote(r.details.dump()) << "\n";
      break;
    }
    case ReportFormat::text: {
      for (const CheckResult& r : rs) {
        out << (r.pass ? "[PASS] " : "[FAIL] ") << r.check << " (q=" << r.q
            << ")\n";
        for (const auto& [key, value] : r.details.items())
          out << "  " << key << ": "
              << (value.is_string() ? value.get<std::string>() : value.dump())
              << "\n";
      }
      break;
    }
  }
  return out.str();
}

bool all_pass(const std::vector<CheckResult>& rs) {
  return std::all_of(rs.begin(), rs.end(),
                     [](const CheckResult& r) { return r.pass; });
}

OrderedJson json_big(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max())
    return OrderedJson(static_cast<std::int64_t>(v));
  return OrderedJson(v.str());
}

OrderedJson census_json_details(int q) {
  const std::vector<DimRow> rows = dimension_table(q);
  OrderedJson j;
  auto& arr = j["rows"] = OrderedJson::array();
  for (const DimRow& r : rows) {
    OrderedJson e;
    e["dim_formula"] = r.dim_formula;
    e["count_formula"] = r.count_formula;
    e["dim"] = json_big(r.dim);
    e["count"] = json_big(r.count);
    arr.push_back(e);
  }
  j["weighted_sum"] = json_big(census_weighted_sum(rows));
  j["total_count"] = json_big(census_total_count(rows));
  return j;
}

std::string census_csv(int q) {
  const std::vector<DimRow> rows = dimension_table(q);
  std::ostringstream out;
  out << "dim,count\n";
  for (const DimRow& r : rows) out << r.dim << "," << r.count << "\n";
  out << census_weighted_sum(rows) << "," << census_total_count(rows) << "\n";
  return out.str();
}

std::string census_text(int q) {
  const std::vector<DimRow> rows = dimension_table(q);
  std::ostringstream out;
  out << "irreducible families at q=" << q << "\n";
  for (const DimRow& r : rows)
    out << "  dim " << r.dim << " = " << r.dim_formula << ", count " << r.count
        << " = " << r.count_formula << "\n";
  out << "sum(count*dim^2) = " << census_weighted_sum(rows)
      << ", sum(count) = " << census_total_count(rows) << "\n";
  return out.str();
}

OrderedJson chartab_json(const GroupTable& G, const CharacterTable& t,
                         const CycCtx& C) {
  OrderedJson j;
  j["q"] = G.field().q();
  j["group_order"] = json_big(BigInt(G.order()));
  j["method"] = t.method;
  auto& cls = j["classes"] = OrderedJson::array();
  const ClassSet& cs = *t.domain;
  for (int i = 0; i < cs.count(); ++i) {
    OrderedJson e;
    e["index"] = i;
    e["element_order"] = cs[i].element_order;
    e["size"] = cs[i].size;
    e["representative"] = cs[i].rep;
    cls.push_back(e);
  }
  auto& irr = j["irreducibles"] = OrderedJson::array();
  for (const ClassFunction& f : t.irreducibles) {
    OrderedJson e;
    e["label"] = f.label;
    e["degree"] = json_big(f.degree());
    auto& vals = e["values"] = OrderedJson::array();
    for (const CycNum& v : f.values) vals.push_back(OrderedJson::parse(C.to_json(v)));
    irr.push_back(e);
  }
  return j;
}

std::string chartab_text(const GroupTable& G, const CharacterTable& t) {
  std::ostringstream out;
  out << t.group_name << " (order " << G.order() << ", method " << t.method
      << "): " << t.domain->count() << " classes, " << t.count()
      << " irreducibles\n";
  for (const ClassFunction& f : t.irreducibles)
    out << "  " << f.label << " : degree " << f.degree() << "\n";
  out << "degree census:";
  for (const auto& [d, n] : t.degree_census()) out << " " << d << "x" << n;
  out << "\n";
  return out.str();
}

std::string chartab_csv(const CharacterTable& t) {
  std::ostringstream out;
  out << "label,degree\n";
  for (const ClassFunction& f : t.irreducibles)
    out << csv_quote(f.label) << "," << f.degree() << "\n";
  return out.str();
}

bool tables_agree_up_to_row_permutation(const CharacterTable& a,
                                        const CharacterTable& b) {
  if (a.domain != b.domain || a.count() != b.count()) return false;
  std::vector<const ClassFunction*> ra, rb;
  for (const ClassFunction& f : a.irreducibles) ra.push_back(&f);
  for (const ClassFunction& f : b.irreducibles) rb.push_back(&f);
  const auto less = [](const ClassFunction* x, const ClassFunction* y) {
    return cf_canonical_less(*x, *y);
  };
  std::sort(ra.begin(), ra.end(), less);
  std::sort(rb.begin(), rb.end(), less);
  for (std::size_t i = 0; i < ra.size(); ++i)
    if (!(*ra[i] == *rb[i])) return false;
  return true;
}

OrderedJson classes_json(const GroupTable& G) {
  const ClassSet& cs = G.classes();
  OrderedJson j;
  j["q"] = G.field().q();
  j["group_order"] = json_big(BigInt(G.order()));
  j["class_count"] = cs.count();
  auto& arr = j["classes"] = OrderedJson::array();
  for (int i = 0; i < cs.count(); ++i) {
    OrderedJson e;
    e["index"] = i;
    e["element_order"] = cs[i].element_order;
    e["size"] = cs[i].size;
    e["representative"] = cs[i].rep;
    e["centralizer_order"] = cs.centralizer_order(i);
    arr.push_back(e);
  }
  return j;
}

std::string classes_text(const GroupTable& G) {
  const ClassSet& cs = G.classes();
  std::ostringstream out;
  out << G.view().name << ": " << cs.count() << " conjugacy classes\n";
  for (int i = 0; i < cs.count(); ++i)
    out << "  class " << i << ": element order " << cs[i].element_order
        << ", size " << cs[i].size << ", representative " << cs[i].rep << "\n";
  return out.str();
}

std::string classes_csv(const GroupTable& G) {
  const ClassSet& cs = G.classes();
  std::ostringstream out;
  out << "class,element_order,size,representative\n";
  for (int i = 0; i < cs.count(); ++i)
    out << i << "," << cs[i].element_order << "," << cs[i].size << ","
        << cs[i].rep << "\n";
  return out.str();
}

}  // namespace sl2eps
