#pragma once

#include <array>

#include "e7forge/f4e6.hpp"
#include "e7forge/genset.hpp"

namespace e7f {

/// The 133 generators Y_A of the 56-dimensional representation in the
/// magic-square construction, orthonormal under <Y,Y'> = -tr(YY')/12.
GeneratorSet build_56_tits(const F4E6Basis& fb);

struct PeriodCheck {
    int index = 0;
    double period = 0;
    double residual = 0;
};

struct CenterPeriodReport {
    double minus_identity_residual = 0;   // exp(sqrt6 pi Y1) vs -I56
    double adjoint_identity_residual = 0; // exp(sqrt6 pi M1) vs +I133
    double omega_cubed_residual = 0;      // omega^3 vs I56
    double omega_equivalence_residual = 0; // two expressions for omega agree
    double omega_nontrivial_gap = 0;       // omega itself is far from I56
    double h_period_residual = 0;          // exp(2 sqrt6 pi Y_L) vs I, L=1..3
    double exceptional_4pi_gap = 0;        // exp(4pi Y_73) stays far from I
    std::vector<PeriodCheck> periods;      // A = 4..133
    double worst_period_residual = 0;
    bool pass = false;
};

/// Center element, Z3 generator omega and the one-parameter periods: 4pi
/// generically, 4pi sqrt3 for A in {73, 99, 125}, 2 sqrt6 pi for A = 1,2,3.
/// Throws PeriodMismatch naming the first failing index when raise_on_failure
/// is set.
CenterPeriodReport center_and_periods(const GeneratorSet& y56, const GeneratorSet& m133,
                                      double tol = 1e-10, bool raise_on_failure = false);

struct IsoReport {
    double worst_structure_diff = 0; // max |c56 - c133| entrywise
    double closure_residual_56 = 0;
    double closure_residual_133 = 0;
    double exact_oracle_diff = 0;    // float constants vs the exact bracket
};

/// Structure constants of the 56 and 133 sets agree entrywise; cross-checked
/// against the exact bracket on sampled pairs.  Throws StructureMismatch
/// above tol.
IsoReport verify_iso(const GeneratorSet& y56, const GeneratorSet& m133, const F4E6Basis& fb,
                     double tol = 1e-9);

/// Split construction: generator order A_kl (lex), cA_I (I in I0, lex),
/// D_alpha, S_kl, cS_I.  All matrices scaled so tr(g_mu g_nu) = -2 delta.
struct SplitSet {
    GeneratorSet set;
    std::vector<std::pair<int, int>> pairs;           // the 28 (k<l), 1-based
    std::vector<std::array<int, 4>> tetra;            // the 35 tetra indices, 1-based
    std::array<std::array<ExactScalar, 8>, 7> d_diag; // diagonal entries of D_1..D_7

    std::vector<int> su8_indices() const {
        std::vector<int> v(63);
        for (int k = 0; k < 63; ++k) v[static_cast<std::size_t>(k)] = k;
        return v;
    }
};
SplitSet build_56_split();

/// Spin(12)+su(2) adapted orthonormal basis L_1..L_133.  Slots 1..66 span
/// spin(12), 67..69 the su(2) factor, 70..133 the complement, with the
/// four commuting torus generators at slots 70, 86, 103, 120.
struct EviSet {
    GeneratorSet set;
    int u5_dim = 69;
    std::array<int, 3> su2{67, 68, 69};    // 1-based slots
    std::array<int, 4> h4{70, 86, 103, 120};
    /// Coefficients of each L over the Y basis (exact, row per L).
    std::vector<std::vector<ExactScalar>> coeffs;
    /// The combinations (L45+L46)/sqrt2, L49, L50 over the Y basis.
    std::vector<std::vector<ExactScalar>> ideal_combos;

    std::vector<int> u5_indices() const {
        std::vector<int> v(69);
        for (int k = 0; k < 69; ++k) v[static_cast<std::size_t>(k)] = k;
        return v;
    }
    std::vector<int> complement_indices() const {
        std::vector<int> v(64);
        for (int k = 0; k < 64; ++k) v[static_cast<std::size_t>(k)] = 69 + k;
        return v;
    }
};
EviSet build_basis_evi(const GeneratorSet& y56, const F4E6Basis& fb);

} // namespace e7f
