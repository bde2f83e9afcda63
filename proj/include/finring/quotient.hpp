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

#ifndef FINRING_QUOTIENT_HPP_
#define FINRING_QUOTIENT_HPP_

#include <memory>
#include <vector>

#include "finring/ring.hpp"
#include "finring/table_ring.hpp"

namespace finring {

// Throws AxiomError with a witness when `ideal` is not a two-sided ideal of r.
void verify_ideal(const Ring& r, const std::vector<Index>& ideal);

// R/I with cosets indexed by their sorted minimal representatives.
// Requires r.order() <= kEagerOrder.
std::shared_ptr<const TableRing> quotient_ring(const RingPtr& r, std::vector<Index> ideal);

}  // namespace finring

#endif  // FINRING_QUOTIENT_HPP_
