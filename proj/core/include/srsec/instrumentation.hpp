// SPDX-License-Identifier: Apache-2.0
//
// srsec - secrecy rate optimization for backscatter symbiotic radio networks
// Copyright (C) 2026 the srsec authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef SRSEC_INSTRUMENTATION_HPP
#define SRSEC_INSTRUMENTATION_HPP

#include <cstdint>

namespace srsec
{

// Thread-local operation counters. They exist so the per-iteration cost model
// of the solver (two generalized eigen extractions plus d+1 weighting-grid
// evaluations) can be measured instead of assumed. Counters never affect
// results and each thread sees only its own work.
struct Instrumentation
{
    std::uint64_t eig_extractions = 0;
    std::uint64_t lambda_grid_evals = 0;
};

/// Mutable reference to the calling thread's counters.
Instrumentation &instrumentation() noexcept;

/// Resets the calling thread's counters to zero.
void reset_instrumentation() noexcept;

} // namespace srsec

#endif
