#pragma once

#include <array>

#include "e7forge/f4e6.hpp"

namespace e7f {

/// Basis layout of the magic-square algebra D(H) (+) D(J) (+) H' (x) J':
///   A = 1..3     quaternion derivations H_1..H_3,
///   A = 4..55    Jordan derivations J_1..J_52,
///   A = 56..81   h1 (x) j_a,
///   A = 82..107  h2 (x) j_a,
///   A = 108..133 h3 (x) j_a.
constexpr int kTitsDim = 133;

/// Exact bracket [Psi_A, Psi_B] of raw basis elements (sigma = 1 mixed
/// product), expanded in the same basis (1-based indices).
SparseCoeffs tits_basis_bracket(const F4E6Basis& fb, int A, int B);

/// Bracket in the rescaled basis with the quaternion derivations divided by
/// sqrt6, which is the normalization whose 56-dimensional image is
/// orthonormal.
SparseCoeffs tits_basis_bracket_normalized(const F4E6Basis& fb, int A, int B);

/// Full structure-constant tensor of the mixed product built with free
/// coefficients
///   [h(x)j, h'(x)j'] = (alpha/3)<j,j'> D_{h,h'} - beta <h,h'>[L_j,L_{j'}]
///                      + gamma [h,h'] (x) (j * j'),
/// embedded as floats.  (alpha, beta, gamma) = (1/4, 1, 1/2) reproduces the
/// sigma = 1 algebra; the Jacobi identity holds iff alpha = gamma^2 = beta/4.
std::vector<double> tits_constants_with_coefficients(const F4E6Basis& fb, double alpha,
                                                     double beta, double gamma);

} // namespace e7f
