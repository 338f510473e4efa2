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

#ifndef SRSEC_VALIDATION_HPP
#define SRSEC_VALIDATION_HPP

#include "srsec/optimizer.hpp"

namespace srsec
{

// Brute-force oracles. They are deliberately independent of the closed-form
// and eigenvector machinery they certify: the phi search evaluates the rate
// objective point by point, and the beamformer search samples the unit sphere
// and a dense grid over the span of the two extreme beamformers. Oracle
// results must never exceed the corresponding closed-form results beyond the
// tolerances asserted in the test suites.

struct OracleConfig
{
    double phi_grid_step = 1e-3; // in (0, 0.01]
    int sphere_samples = 10000;  // random unit beamformers
    int subspace_grid = 100;     // grid points per axis over span{w_e1, w_e2}

    void validate() const;
};

struct PhiGridResult
{
    double phi_star;
    double r_star; // clamped secrecy rate at phi_star
};

/// Exhaustive evaluation of the rate-in-phi objective over
/// phi in {step, 2 step, ..., 1 - step}; returns the argmax (first hit wins
/// on ties, scanning upward).
PhiGridResult grid_search_phi_ab(double a, double b, double step);

/// Same, with (a, b) taken from a concrete beamformer.
PhiGridResult grid_search_phi(const Vec &w, const ChannelRealization &ch, const AnPrecoder &an,
                              const SystemParams &params, const OracleConfig &cfg);

struct WSearchResult
{
    Vec w_star;    // empty when no feasible candidate exists
    double r_star; // 0 in that case
};

/// Maximizes the secrecy rate at fixed phi over: the two extreme beamformers,
/// cfg.sphere_samples random unit vectors, and a subspace_grid^2 grid of unit
/// vectors t w_e1 + (1-t) e^{i theta} w_e2 (normalized) covering the full
/// complex span of the extremes. With enforce_qos, candidates below the QoS
/// threshold are discarded. Deterministic for a fixed sample_seed.
WSearchResult sample_search_w(double phi, const ChannelRealization &ch, const AnPrecoder &an,
                              const SystemParams &params, const OracleConfig &cfg,
                              bool enforce_qos = true, std::uint64_t sample_seed = 0x5ec3ec);

} // namespace srsec

#endif
