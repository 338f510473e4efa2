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

#ifndef SRSEC_OPTIMIZER_HPP
#define SRSEC_OPTIMIZER_HPP

#include <vector>

#include "srsec/srmodel.hpp"

namespace srsec
{

/// Returned power factors are kept strictly inside (0, 1) by this margin.
inline constexpr double kPhiFloor = 1e-6;

struct OptimizerOptions
{
    int max_iters = 50; // cap on alternating iterations

    // When set, the power-factor update is raised (never lowered) to the
    // smallest phi that still meets the QoS constraint at the current
    // beamformer. Off by default: the plain update ignores the constraint
    // and relies on the next beamforming step to re-check feasibility.
    bool project_phi = false;
};

struct IterationTrace
{
    int iteration;  // 1-based
    double phi;     // power factor used by this iteration's beamforming step
    double lambda1; // best weighting factor of the sweep (NaN for schemes without one)
    double r_sec;   // best constrained secrecy rate found in this iteration
    double gamma_s; // primary SNR at the selected beamformer
    bool feasible;  // QoS threshold attainable at this phi
};

enum class SolveStatus
{
    converged,
    infeasible,
    max_iterations,
};

const char *to_string(SolveStatus status) noexcept;

struct Solution
{
    Vec w_opt;                 // empty when no feasible iterate was found
    double phi_opt = 0.0;
    double lambda_best = 0.0;
    double r_sec = 0.0;        // bits/s/Hz
    double gamma_s = 0.0;      // linear primary SNR at (w_opt, phi_opt)
    std::vector<IterationTrace> trace;
    SolveStatus status = SolveStatus::infeasible;

    int iterations() const noexcept { return static_cast<int>(trace.size()); }
};

/// SNR-optimal beamformer at fixed phi: the principal generalized eigenvector
/// of the primary-SNR pencil. gamma_s_max is the attained maximum SNR, an
/// upper bound over all unit beamformers.
struct SnrMaxResult
{
    Vec w_e1;
    double gamma_s_max;
};

SnrMaxResult w_snr_max(double phi, const ChannelRealization &ch, const AnPrecoder &an,
                       const SystemParams &params);

/// True iff gamma_s_max >= the linear QoS threshold.
bool feasibility_check(double gamma_s_max, const SystemParams &params) noexcept;

/// Beamformer maximizing the secrecy rate with the QoS constraint ignored:
/// the principal generalized eigenvector of the secrecy pencil.
Vec w_unconstrained_secrecy(double phi, const ChannelRealization &ch, const AnPrecoder &an,
                            const SystemParams &params);

struct WeightedSearchResult
{
    Vec w_best;
    double lambda_best;
    double r_best;  // constrained secrecy rate at w_best
    double gamma_s; // primary SNR at w_best
};

/// Sweeps the normalized blends (lambda w_e1 + (1-lambda) w_e2)/|.| over
/// lambda in {0, 1/d, ..., 1} and returns the blend with the largest secrecy
/// rate among those meeting the QoS threshold. lambda = 1 reproduces w_e1
/// (which attains gamma_s_max), so a feasible problem always yields a result;
/// if every feasible blend has zero rate, that endpoint is returned. Blends
/// whose unnormalized norm falls below 1e-12 are skipped.
WeightedSearchResult w_weighted_search(double phi, const Vec &w_e1, const Vec &w_e2,
                                       const ChannelRealization &ch, const AnPrecoder &an,
                                       const SystemParams &params);

/// Convenience overload computing the two extreme beamformers itself.
WeightedSearchResult w_weighted_search(double phi, const ChannelRealization &ch,
                                       const AnPrecoder &an, const SystemParams &params);

struct PhiChoice
{
    double phi;
    bool positive_rate; // false when a <= b: no phi yields a positive rate
};

/// Closed-form power factor maximizing the rate as a function of phi:
///   phi = (a - sqrt(a b (a - b + 1))) / (a - a b)            for b != 1,
///   phi = (a - 1) / (2 a)                                    for b  = 1
/// (the b = 1 limit maximizes (1 + phi a)(1 - phi)). The result is clamped
/// into [kPhiFloor, 1 - kPhiFloor]. When a <= b the objective has no interior
/// maximum with positive rate; the formula value is still returned, clamped,
/// with positive_rate = false. Throws DegenerateBeamError when a <= 0.
PhiChoice optimal_phi_ab(double a, double b);

/// Same, with (a, b) computed from a concrete beamformer.
PhiChoice optimal_phi(const Vec &w, const ChannelRealization &ch, const AnPrecoder &an,
                      const SystemParams &params);

/// The second critical point of the rate-in-phi objective. It never lies in
/// (0, 1) for positive coefficients; exposed for direct numerical
/// confirmation of that claim. NaN when the discriminant is negative.
double infeasible_phi_root(double a, double b);

/// Smallest phi meeting the QoS constraint at beamformer w, if one exists in
/// (0, 1); otherwise returns `phi` unchanged. Never lowers phi.
double project_phi_to_qos(double phi, const Vec &w, const ChannelRealization &ch,
                          const SystemParams &params);

/// Alternating optimization of the beamformer and the power factor.
///
/// Starts at phi = 0.5. Each iteration rebuilds the quotient pencils, finds
/// the SNR-optimal beamformer, stops with status `infeasible` when even that
/// beamformer misses the QoS threshold, otherwise sweeps the weighting grid
/// and then updates phi in closed form. Terminates when the rate improvement
/// between successive iterations drops to params.epsilon (the rate before the
/// first iteration counts as 0) or after opts.max_iters iterations. The best
/// iterate is returned, not the last one.
Solution alternating_optimize(const ChannelRealization &ch, const AnPrecoder &an,
                              const SystemParams &params, const OptimizerOptions &opts = {});

/// Convenience overload building the jamming precoder itself.
Solution alternating_optimize(const ChannelRealization &ch, const SystemParams &params,
                              const OptimizerOptions &opts = {});

} // namespace srsec

#endif
