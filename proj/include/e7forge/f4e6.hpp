#pragma once

#include <utility>
#include <vector>

#include "e7forge/exact_linalg.hpp"
#include "e7forge/jordan.hpp"

namespace e7f {

/// Sparse expansion of a Lie bracket in a fixed basis: list of (index, coeff).
using SparseCoeffs = std::vector<std::pair<int, ExactScalar>>;

/// The 52 derivation matrices C_I of J3(O), the 26 extension matrices
/// tildeC_a, the invariant cubic tensor and the Freudenthal action matrices
/// A_alpha, all exact.
///
/// Basis layout for C (deterministic, chosen so that every generator is a
/// unit-speed rotation with half-integer spectrum):
///   I = 1..28  rotations between octonion coordinates of position (2,3),
///              plane (p,q), 0 <= p < q <= 7, lexicographic;
///   I = 29..36 rotations between position-(2,3) coordinate p and the
///              diagonal direction diag(0,1,-1), p = 0..7;
///   I = 37..44 transvections moving diag(1,-1,0) toward position (1,2),
///              octonion coordinate u = 0..7;
///   I = 45..52 transvections moving diag(1,0,-1) toward position (1,3).
/// All satisfy tr(C_I C_J) = -6 delta_IJ exactly.
class F4E6Basis {
  public:
    explicit F4E6Basis(const JordanBasis& jb);

    const JordanBasis& jordan() const { return *jb_; }

    const ExactMatrix& C(int I) const { return C_[static_cast<std::size_t>(I - 1)]; }
    const ExactMatrix& Ctilde(int a) const { return Ct_[static_cast<std::size_t>(a - 1)]; }
    /// Real matrix of left multiplication by j_a (a = 1..26); Ctilde = -i R.
    const ExactMatrix& R(int a) const { return R_[static_cast<std::size_t>(a - 1)]; }
    const ExactMatrix& A(int alpha) const { return A_[static_cast<std::size_t>(alpha - 1)]; }

    /// D_{abc} = Det(j_a, j_b, j_c), indices 1..27.
    const ExactScalar& cubic(int a, int b, int c) const {
        return cubic_[idx3(a - 1, b - 1, c - 1)];
    }

    /// F4 structure constants: [C_I, C_J] = sum_K f_{IJ}^K C_K (I, J = 1..52).
    const SparseCoeffs& f(int I, int J) const {
        return f_[static_cast<std::size_t>(I - 1) * 52 + static_cast<std::size_t>(J - 1)];
    }
    /// [L_{j_a}, L_{j_b}] = sum_K alpha_{ab}^K C_K (a, b = 1..26).
    const SparseCoeffs& alpha(int a, int b) const {
        return alpha_[static_cast<std::size_t>(a - 1) * 26 + static_cast<std::size_t>(b - 1)];
    }

    /// Operator matrix of left multiplication by an arbitrary element.
    ExactMatrix left_mul_matrix(const JordanMatrix& x) const;

  private:
    static std::size_t idx3(int a, int b, int c) {
        return (static_cast<std::size_t>(a) * 27 + static_cast<std::size_t>(b)) * 27 +
               static_cast<std::size_t>(c);
    }

    SparseCoeffs project_onto_C(const ExactMatrix& m, const char* what) const;

    const JordanBasis* jb_;
    std::vector<ExactMatrix> C_, Ct_, R_, A_;
    std::vector<ExactScalar> cubic_;
    std::vector<SparseCoeffs> f_, alpha_;
};

} // namespace e7f
