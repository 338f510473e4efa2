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

#ifndef SRSEC_SRMODEL_HPP
#define SRSEC_SRMODEL_HPP

#include <optional>

#include "srsec/channel.hpp"
#include "srsec/linalg.hpp"

namespace srsec
{

/// Split of the total transmit power P between the information beam and the
/// nt - 2 jamming streams: p = phi * P, q = (1 - phi) * P / (nt - 2).
struct PowerSplit
{
    double phi; // information fraction, strictly inside (0, 1)
    double p;   // information power, linear
    double q;   // per-jamming-stream power, linear
};

/// Throws DomainError unless 0 < phi < 1.
PowerSplit power_split(double phi, const SystemParams &params);

/// Jamming precoder: nt x (nt-2) matrix W with mutually orthonormal columns
/// lying in the common null space of h1 and h2, plus the cached eavesdropper
/// correlation X = He W W^H He^H and the quadratic form 1^H X^-1 1 that every
/// eavesdropper SNR evaluation needs.
///
/// Immutable after construction; safe to share across threads.
class AnPrecoder
{
  public:
    AnPrecoder(Mat w, Mat x);

    const Mat &w_matrix() const noexcept { return w_; }
    const Mat &x_corr() const noexcept { return x_; }

    /// False when X is numerically singular (smallest eigenvalue below
    /// 1e-12 of the largest), e.g. whenever ne > nt - 2.
    bool x_invertible() const noexcept { return x_quad_.has_value(); }

    /// 1^H X^-1 1, evaluated once through a linear solve (X is never
    /// explicitly inverted). Throws SingularEveCorrelationError when X is
    /// singular.
    double eve_quadratic() const;

  private:
    Mat w_;
    Mat x_;
    std::optional<double> x_quad_;
};

/// Builds the null-space jamming precoder for one channel realization.
/// Throws DimensionError when nt <= 2 (no spare degrees of freedom).
AnPrecoder build_an_precoder(const ChannelRealization &ch);

/// Primary-link SNR: p |h1^H w|^2 / (p alpha |g1|^2 |h2^H w|^2 + 1).
double snr_primary(const Vec &w, const PowerSplit &split, const ChannelRealization &ch,
                   const SystemParams &params);

/// Backscatter SNR after interference cancellation: p alpha |g1|^2 |h2^H w|^2.
double snr_bd(const Vec &w, const PowerSplit &split, const ChannelRealization &ch,
              const SystemParams &params);

/// Worst-case eavesdropper SNR (zero receiver noise, optimal combining):
/// (p alpha |g2|^2 / q) |h2^H w|^2 (1^H X^-1 1).
double snr_eve(const Vec &w, const PowerSplit &split, const ChannelRealization &ch,
               const AnPrecoder &an, const SystemParams &params);

/// Secrecy rate [log2(1 + snr_bd) - log2(1 + snr_eve)]^+ in bits/s/Hz.
double secrecy_rate(const Vec &w, const PowerSplit &split, const ChannelRealization &ch,
                    const AnPrecoder &an, const SystemParams &params);

/// The two scalars that reduce the secrecy rate to a function of phi alone:
///   a = P alpha |g1|^2 |h2^H w|^2
///   b = (nt - 2) alpha |g2|^2 |h2^H w|^2 (1^H X^-1 1)
/// so that R_sec(phi) = [log2((1 + phi a) / (1 + phi b / (1 - phi)))]^+.
struct RateCoefficients
{
    double a;
    double b;
};

RateCoefficients coefficients_ab(const Vec &w, const ChannelRealization &ch, const AnPrecoder &an,
                                 const SystemParams &params);

/// log2((1 + phi a) / (1 + phi b / (1 - phi))), no clamping.
double rate_at_phi_unclamped(double phi, const RateCoefficients &c);

/// Same, clamped at zero.
double rate_at_phi(double phi, const RateCoefficients &c);

/// The two Rayleigh-quotient pencils of the beamforming subproblems at a
/// fixed phi:
///   snr:     (phi P h1 h1^H,  alpha phi P |g1|^2 h2 h2^H + I)
///   secrecy: (I + p alpha |g1|^2 h2 h2^H,
///             I + (p alpha |g2|^2 / q)(1^H X^-1 1) h2 h2^H)
struct QuotientPairs
{
    HermitianPair snr;
    HermitianPair secrecy;
};

/// Pencil of the primary-SNR quotient only; does not touch X.
HermitianPair snr_quotient_pair(double phi, const ChannelRealization &ch,
                                const SystemParams &params);

/// Pencil of the secrecy-rate quotient; requires X invertible.
HermitianPair secrecy_quotient_pair(double phi, const ChannelRealization &ch,
                                    const AnPrecoder &an, const SystemParams &params);

QuotientPairs build_quotient_pairs(double phi, const ChannelRealization &ch, const AnPrecoder &an,
                                   const SystemParams &params);

} // namespace srsec

#endif
