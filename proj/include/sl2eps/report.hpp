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

#ifndef SL2EPS_REPORT_HPP
#define SL2EPS_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "sl2eps/chartab.hpp"
#include "sl2eps/group.hpp"

namespace sl2eps {

using OrderedJson = nlohmann::ordered_json;

enum class ReportFormat { json, csv, text };

// Throws config_error on anything but "json", "csv", "text".
ReportFormat parse_report_format(const std::string& s);

/** Outcome of one named verification, with machine-readable details. */
struct CheckResult {
  std::string check;
  int q = 0;
  bool pass = false;
  OrderedJson details = OrderedJson::object();
};

// {"check": ..., "q": ..., "status": "PASS"|"FAIL", "details": {...}}
OrderedJson check_to_json(const CheckResult& r);

// A list of check outcomes in the requested format.  JSON renders an
// array of check objects; text renders one [PASS]/[FAIL] line per check
// with indented details; csv renders check,q,status,details with the
// details as one quoted JSON cell.  Output is deterministic and ends
// with a newline.
std::string render_checks(const std::vector<CheckResult>& rs, ReportFormat f);

bool all_pass(const std::vector<CheckResult>& rs);

// BigInt -> JSON: a number when it fits in 64 bits, else a decimal string.
OrderedJson json_big(const BigInt& v);

// Dimension census of the irreducible families at q, as
// {"rows": [{"dim_formula","count_formula","dim","count"}...],
//  "weighted_sum", "total_count"}.
OrderedJson census_json_details(int q);
// dim,count rows plus a trailer row "sum(count*dim^2),sum(count)".
std::string census_csv(int q);
std::string census_text(int q);

// {"q","group_order","method","classes","irreducibles"} with character
// values embedded as exact cyclotomic coefficient vectors.
OrderedJson chartab_json(const GroupTable& G, const CharacterTable& t,
                         const CycCtx& C);
std::string chartab_text(const GroupTable& G, const CharacterTable& t);
// label,degree rows (values live in the JSON format).
std::string chartab_csv(const CharacterTable& t);

// Same irreducibles up to reordering (domains must match).
bool tables_agree_up_to_row_permutation(const CharacterTable& a,
                                        const CharacterTable& b);

OrderedJson classes_json(const GroupTable& G);
std::string classes_text(const GroupTable& G);
std::string classes_csv(const GroupTable& G);

}  // namespace sl2eps

#endif
