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

#ifndef SRSEC_BASELINES_HPP
#define SRSEC_BASELINES_HPP

#include "srsec/optimizer.hpp"

namespace srsec
{

/// Benchmark scheme: fixes the beamformer to maximum ratio transmission
/// toward the backscatter channel, w = h2/|h2|, and optimizes only the power
/// factor in closed form. The QoS constraint is checked at the resulting
/// (w, phi); the solution is marked infeasible when it is violated.
Solution solve_mrt_optimal_phi(const ChannelRealization &ch, const AnPrecoder &an,
                               const SystemParams &params);

/// Benchmark scheme: one beamforming step (SNR-optimal extreme, feasibility
/// check, weighting-grid sweep) at a fixed power factor; no phi update.
Solution solve_optimal_w_fixed_phi(const ChannelRealization &ch, const AnPrecoder &an,
                                   const SystemParams &params, double phi_fixed);

} // namespace srsec

#endif
