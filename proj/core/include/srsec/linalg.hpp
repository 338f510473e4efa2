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

#ifndef SRSEC_LINALG_HPP
#define SRSEC_LINALG_HPP

#include <vector>

#include "srsec/errors.hpp"
#include "srsec/types.hpp"

namespace srsec
{

/// A pencil of Hermitian matrices. The numerator must be positive
/// semi-definite and the denominator positive definite; the generalized
/// Rayleigh quotient (v^H N v)/(v^H D v) is then real and bounded.
struct HermitianPair
{
    Mat numerator;
    Mat denominator;

    /// Throws if either matrix deviates from Hermitian symmetry by more than
    /// `hermitian_tol` (relative), if the numerator has a clearly negative
    /// eigenvalue, or if the denominator is not positive definite.
    void validate(double hermitian_tol = 1e-12) const;
};

struct PrincipalEigenpair
{
    Vec vector;   // unit Euclidean norm, phase-canonicalized
    double value; // largest generalized eigenvalue = max Rayleigh quotient
};

/// Largest generalized eigenpair of (N, D).
///
/// Solved by Cholesky reduction: D = L L^H, then a standard Hermitian
/// eigenproblem on L^-1 N L^-H, and back-substitution v = L^-H u. Costs
/// O(n^3) like the inversion route but never forms D^-1.
///
/// The returned vector has unit norm and its largest-magnitude entry is real
/// and non-negative, so repeated calls on identical inputs are bit-identical.
/// Throws IllConditionedPairError when the denominator's spectrum spans more
/// than twelve orders of magnitude (smallest eigenvalue < 1e-12 * largest).
PrincipalEigenpair generalized_principal_eigenvector(const HermitianPair &pair);

/// Orthonormal basis (n x target_dim) of a subspace of the common null space
/// of the given row vectors: r^H B = 0 for every row r and Gram(B) = I.
///
/// Built from the full SVD of the stacked row matrix, keeping the trailing
/// right singular vectors. Requires target_dim <= n - rows.size(); a basis of
/// that size always exists because rank cannot exceed the number of rows.
Mat null_space_basis(const std::vector<Vec> &rows, Index target_dim);

/// Removes the phase gauge freedom of a vector: multiplies by a unit complex
/// scalar so that the largest-magnitude entry becomes real and non-negative.
/// Ties are broken toward the lowest index.
Vec canonicalize_phase(Vec v);

/// Generalized Rayleigh quotient (v^H N v)/(v^H D v), real part.
double rayleigh_quotient(const HermitianPair &pair, const Vec &v);

} // namespace srsec

#endif
