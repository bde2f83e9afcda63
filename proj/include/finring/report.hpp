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

#ifndef FINRING_REPORT_HPP_
#define FINRING_REPORT_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "finring/analysis.hpp"
#include "finring/enumeration.hpp"
#include "finring/theorems.hpp"

namespace finring {

using Json = nlohmann::ordered_json;

// Keys: ring, name, order, characteristic, commutative, boolean, unit_count,
// unit_sum, unit_sum_index, radical, semisimple, units_trivial,
// is_division_ring, timings. radical and semisimple are omitted (with
// radical_skipped set) when the ring exceeds the eager table cap.
Json ring_report(std::string_view expr, const Budget& budget = {});

// Keys: ring, name, order, unit_count, unit_sum, unit_sum_index, timings.
Json unit_sum_report(std::string_view expr, const Budget& budget = {});

Json theorem_report_json(const TheoremReport& report);

// Keys: order, up_to_iso, complete, count, nodes, units_done, units_total,
// resume_token (when incomplete), rings.
Json enumeration_json(std::uint64_t order, bool up_to_iso, const EnumerationResult& result);

// Aligned "key  value" lines for a flat report document.
std::string render_text(const Json& doc);

}  // namespace finring

#endif  // FINRING_REPORT_HPP_
