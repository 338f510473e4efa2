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

#ifndef SRSEC_ERRORS_HPP
#define SRSEC_ERRORS_HPP

#include <stdexcept>

namespace srsec
{

/// Base class of every exception thrown by this library.
class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// Matrix/vector dimensions are inconsistent with the request.
class DimensionError : public Error
{
  public:
    using Error::Error;
};

/// Scalar argument outside its mathematical domain (e.g. phi outside (0,1)).
class DomainError : public Error
{
  public:
    using Error::Error;
};

/// Denominator of a generalized eigenproblem is numerically singular.
class IllConditionedPairError : public Error
{
  public:
    using Error::Error;
};

/// The eavesdropper jamming correlation X = He W W^H He^H is not invertible.
/// Happens whenever ne > nt - 2, since rank(X) = min(ne, nt - 2).
class SingularEveCorrelationError : public Error
{
  public:
    using Error::Error;
};

/// A zero channel variance produced an all-zero fading vector.
class DegenerateVarianceError : public Error
{
  public:
    using Error::Error;
};

/// Beamformer orthogonal to the backscatter channel; the power-factor update
/// is undefined because the information-bearing coefficient A vanishes.
class DegenerateBeamError : public Error
{
  public:
    using Error::Error;
};

/// Invalid scenario configuration (parameter invariants violated).
class ConfigError : public Error
{
  public:
    using Error::Error;
};

} // namespace srsec

#endif
