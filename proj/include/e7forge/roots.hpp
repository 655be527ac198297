#pragma once

#include "e7forge/genset.hpp"
#include "e7forge/rep56.hpp"

namespace e7f {

/// Root system data extracted from the simultaneous adjoint eigenproblem of
/// a commuting Cartan/torus family.  Components are taken with respect to
/// the orthonormalized Cartan elements (invariant product -tr(XY)/nu), which
/// makes full E7 roots come out with squared length 2.
struct RootDatum {
    int rank = 0;
    std::vector<std::vector<double>> roots; // covector components
    std::vector<int> multiplicities;
    std::vector<bool> positive; // lexicographic on the reversed components
    int zero_dim = 0;           // dimension of the kernel of the adjoint action

    std::vector<int> positive_indices() const;
    /// Indices (into roots) of the simple system among the positive roots.
    std::vector<int> simple_indices() const;
    /// Expansion of `root` over the given simple roots (rounded integers).
    std::vector<int> simple_coefficients(const std::vector<double>& root,
                                         const std::vector<int>& simple) const;
    /// Index of the highest root (maximal height over the simple basis).
    int highest_root_index(const std::vector<int>& simple) const;
    /// Cartan matrix 2(a_i|a_j)/(a_j|a_j) of the given simple roots.
    std::vector<std::vector<double>> cartan_matrix(const std::vector<int>& simple) const;
};

/// Simultaneously diagonalizes the adjoint action of the listed generators
/// (0-based indices into g).  Throws NotCommuting / NotDiagonalizable.
RootDatum extract_roots(const GeneratorSet& g, const std::vector<int>& cartan,
                        double cluster_tol = 1e-7);

struct E7ClassifyReport {
    int root_count = 0;
    int positive_count = 0;
    double worst_norm2_deviation = 0; // from 2
    bool simple_roots_match = false;  // the seven named beta covectors
    bool cartan_matrix_is_e7 = false;
    std::vector<int> longest_coefficients; // over (alpha_1..alpha_7)
    double weight_duality_residual = 0;    // <alpha_i, lambda^j> = delta
};

/// Verifies the split root system against the named simple roots
/// beta_45, beta_12, beta_34, beta_23, beta_3458, beta_78, beta_67 and the
/// E7 Cartan matrix.  Throws WrongType when the type check fails.
E7ClassifyReport classify_e7(const RootDatum& rd, const SplitSet& split);

struct EviRootReport {
    RootDatum datum;
    int long_positive = 0;  // multiplicity-1 roots of norm^2 = 2
    int short_positive = 0; // multiplicity-4 roots of norm^2 = 1
    int multiplicity_sum = 0;
    bool f4_cartan = false;
    std::vector<int> longest_coefficients; // expected (4,3,2,2)
    /// Orthogonal frame change mapping the computed simple roots onto
    /// (1/2)(1,-1,-1,1), (0,0,1,-1), (-1,0,0,0), (0,1,-1,0).
    std::vector<std::vector<double>> frame; // 4x4
};

/// Restricted root system of the complement with respect to the rank-4
/// torus at slots 70/86/103/120.
EviRootReport restricted_roots_evi(const EviSet& evi);

struct CommutantReport {
    GeneratorSet algebra;  // the 9 generators (combinations of L_1..L_69)
    int dim = 0;
    bool killing_negative_definite = false;
    std::vector<int> minimal_ideal_dims;   // expected {3,3,3}
    int ideal_of_m7 = -1;                  // index of the ideal containing M7
    double m_membership_residual = 0;      // M7, M8, M9 projection residual
};

/// Kernel of X -> [X, H4] inside the compact subalgebra; dimension 9,
/// decomposing as so(4) (+) su(2) with the distinguished u(1)-sector
/// combinations spanning the su(2) ideal.
CommutantReport commutant_evi(const EviSet& evi);

} // namespace e7f
