#pragma once

#include "e7forge/genset.hpp"
#include "e7forge/tits.hpp"

namespace e7f {

/// Adjoint representation of the magic-square algebra: 133 exact sparse
/// 133x133 matrices (M_A)^C_B = coefficient of Psi_C in [Psi_A, Psi_B].
///
/// With `normalized` the basis has the quaternion derivations divided by
/// sqrt6, matching the normalization of the 56-dimensional set (orthonormal
/// under -tr(XY)/36 and with the same structure constants as the Y_A).  The
/// raw variant reproduces the block displays ([H_1,H_2] = 2H_3, tau/6 and
/// +-2 blocks) verbatim.
GeneratorSet build_adjoint_133(const F4E6Basis& fb, bool normalized = true);

} // namespace e7f
