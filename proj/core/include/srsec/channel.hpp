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

#ifndef SRSEC_CHANNEL_HPP
#define SRSEC_CHANNEL_HPP

#include <cstdint>
#include <random>

#include "srsec/errors.hpp"
#include "srsec/types.hpp"

namespace srsec
{

/// Converts a dBm (or dB) value to linear scale against unit (1 mW) noise.
double dbm_to_linear(double x_dbm);

/// Every scenario scalar. Powers and thresholds are stored in dBm/dB and
/// converted once through the accessors below; the model layer works in
/// linear units with all noise powers fixed at 1.
struct SystemParams
{
    int nt = 10;                  // transmit antennas at the PT, must exceed 2
    int ne = 4;                   // eavesdropper antennas, must stay below nt
    double p_dbm = 48.0;          // total transmit power
    double gamma_s_th_db = 3.0;   // primary-link QoS SNR threshold
    double alpha = 0.3;           // backscatter reflection coefficient in [0,1]
    double sigma_s2 = 1.0;        // PT->PR channel variance
    double sigma_c2 = 1.0;        // PT->BD channel variance
    double sigma_e2 = 1.0;        // PT->ED channel variance
    int d = 100;                  // weighting-grid steps (grid has d+1 points)
    double epsilon = 1e-10;       // convergence tolerance on the rate
    std::uint64_t seed = 5;       // base RNG seed

    /// Throws ConfigError when any invariant is violated:
    /// nt > 2, nt > ne >= 1, alpha in [0,1], epsilon > 0, d >= 1,
    /// finite power/variances, non-NaN threshold.
    void validate() const;

    double p_linear() const { return dbm_to_linear(p_dbm); }
    double gamma_s_th_linear() const { return dbm_to_linear(gamma_s_th_db); }
    int an_streams() const { return nt - 2; }
};

/// One draw of all fading quantities.
struct ChannelRealization
{
    Vec h1;     // PT -> PR, length nt
    Vec h2;     // PT -> BD, length nt
    Mat he;     // PT -> ED, ne x nt
    Complex g1; // BD -> PR
    Complex g2; // BD -> ED
};

/// Draws one realization from a deterministic substream keyed on
/// (params.seed, trial_index). Entries of h1 ~ CN(0, sigma_s2),
/// h2 ~ CN(0, sigma_c2), he ~ CN(0, sigma_e2), g1, g2 ~ CN(0, 1).
///
/// Streams are index-derived: sampling trial k never consumes state from any
/// other trial, so trials can be generated in any order or concurrently.
/// Throws DegenerateVarianceError when sigma_s2 or sigma_c2 is zero (the
/// resulting all-zero channel vector is not a valid realization).
ChannelRealization sample_channels(const SystemParams &params, std::uint64_t trial_index);

/// Deterministic substream key derivation (splitmix64 finalizer).
std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t index) noexcept;

/// Standard-normal / circularly-symmetric Gaussian stream over mt19937_64,
/// using an explicit Box-Muller transform so draws do not depend on the
/// standard library's unspecified normal_distribution algorithm.
class GaussianStream
{
  public:
    explicit GaussianStream(std::uint64_t key);

    /// One standard normal draw.
    double next_normal();

    /// One CN(0, variance) draw: (x + iy)/sqrt(2) * sqrt(variance).
    Complex next_cn(double variance);

  private:
    double next_uniform(); // in [0, 1)
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

} // namespace srsec

#endif
