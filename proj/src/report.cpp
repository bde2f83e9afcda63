// Copyright 2026 The finring Authors.
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

#include "finring/report.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "finring/ring_expr.hpp"

namespace finring {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string out = "{";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + scalar_text(v[i]);
    return out + "}";
  }
  if (v.is_object()) {
    std::string out;
    for (const auto& [k, x] : v.items()) out += (out.empty() ? "" : ", ") + k + "=" + scalar_text(x);
    return out;
  }
  return v.dump();
}

}  // namespace

Json ring_report(std::string_view expr, const Budget& budget) {
  const auto start = Clock::now();
  const RingExpr ast = parse_ring_expr(expr);
  const RingPtr ring = build_ring(ast);
  const Ring& r = *ring;

  Json doc;
  doc["ring"] = std::string(expr);
  doc["name"] = r.name();
  doc["order"] = r.order();
  doc["characteristic"] = characteristic(r);
  doc["commutative"] = is_commutative(r);
  doc["boolean"] = is_boolean(r, budget);

  const auto units_start = Clock::now();
  const auto tally = unit_tally(r, budget);
  const double units_s = seconds_since(units_start);
  doc["unit_count"] = tally.count;
  doc["unit_sum"] = r.pretty(tally.sum);
  doc["unit_sum_index"] = tally.sum;

  double radical_s = 0;
  if (r.order() <= budget.eager_order) {
    const auto radical_start = Clock::now();
    const auto j = jacobson_radical(r, budget);
    radical_s = seconds_since(radical_start);
    Json members = Json::array();
    for (Index x : j.members) members.push_back(r.pretty(x));
    doc["radical"] = members;
    doc["semisimple"] = j.is_zero;
  } else {
    doc["radical_skipped"] = "order " + std::to_string(r.order()) + " exceeds the eager cap " +
                             std::to_string(budget.eager_order);
  }
  doc["units_trivial"] = tally.count == 1;
  doc["is_division_ring"] = tally.count + 1 == r.order();
  doc["timings"] = {{"units_s", units_s}, {"radical_s", radical_s}, {"total_s", seconds_since(start)}};
  return doc;
}

Json unit_sum_report(std::string_view expr, const Budget& budget) {
  const auto start = Clock::now();
  const RingPtr ring = make_ring(expr);
  const auto tally = unit_tally(*ring, budget);
  Json doc;
  doc["ring"] = std::string(expr);
  doc["name"] = ring->name();
  doc["order"] = ring->order();
  doc["unit_count"] = tally.count;
  doc["unit_sum"] = ring->pretty(tally.sum);
  doc["unit_sum_index"] = tally.sum;
  doc["timings"] = {{"total_s", seconds_since(start)}};
  return doc;
}

Json theorem_report_json(const TheoremReport& report) {
  Json doc;
  doc["id"] = to_string(report.id);
  doc["status"] = !report.passed ? "fail" : report.complete ? "pass" : "incomplete";
  doc["claim"] = report.claim;
  doc["population"] = report.population;
  doc["population_count"] = report.population_count;
  doc["premise_count"] = report.premise_count;
  doc["passed"] = report.passed;
  doc["complete"] = report.complete;
  if (report.counterexample) {
    const auto& cx = *report.counterexample;
    Json c;
    c["ring"] = cx.ring;
    if (!cx.table.empty()) c["table"] = cx.table;
    c["witness"] = cx.witness;
    c["detail"] = cx.detail;
    doc["counterexample"] = c;
  } else {
    doc["counterexample"] = nullptr;
  }
  doc["notes"] = report.notes;
  doc["elapsed_s"] = report.elapsed_seconds;
  return doc;
}

Json enumeration_json(std::uint64_t order, bool up_to_iso, const EnumerationResult& result) {
  Json doc;
  doc["order"] = order;
  doc["up_to_iso"] = up_to_iso;
  doc["complete"] = result.complete;
  doc["count"] = result.rings.size();
  doc["nodes"] = result.nodes;
  doc["units_done"] = result.units_done;
  doc["units_total"] = result.units_total;
  if (!result.complete) doc["resume_token"] = result.resume_token;
  Json rings = Json::array();
  for (std::size_t i = 0; i < result.rings.size(); ++i) {
    const auto ring = TableRing::trusted(result.rings[i], RingKind::kTable, "R" + std::to_string(i));
    const auto units = unit_group(*ring);
    Json entry;
    entry["index"] = i;
    entry["additive_type"] = result.rings[i].additive_type;
    entry["characteristic"] = characteristic(*ring);
    entry["commutative"] = is_commutative(*ring);
    entry["boolean"] = is_boolean(*ring);
    entry["unit_count"] = units.count;
    entry["one"] = result.rings[i].one;
    rings.push_back(entry);
  }
  doc["rings"] = rings;
  return doc;
}

std::string render_text(const Json& doc) {
  std::size_t width = 0;
  for (const auto& [k, v] : doc.items()) width = std::max(width, k.size());
  std::ostringstream out;
  for (const auto& [k, v] : doc.items()) {
    if (v.is_null()) continue;
    out << k << std::string(width + 2 - k.size(), ' ') << scalar_text(v) << '\n';
  }
  return out.str();
}

}  // namespace finring
