#pragma once

#include <cstdint>

#include "e7forge/prng.hpp"
#include "e7forge/roots.hpp"

namespace e7f {

/// Torus data of one generalized Euler factorization G = B e^V U: commuting
/// generators, coordinate-range polytope and the invariant-measure weight
/// on the torus coordinates.
struct EulerChart {
    Construction construction = Construction::Split;
    std::vector<std::string> coord_names;
    std::vector<Mat> torus_generators;
    /// density(y) = prod_k |sin(sine_forms[k] . y)|^{sine_exponents[k]}
    std::vector<std::vector<double>> sine_forms;
    std::vector<int> sine_exponents;
    /// Range: 0 < ineq_forms[r] . y < pi for every r.  The tits chart
    /// instead uses the chained substitution range (see tits_to_xyz).
    std::vector<std::vector<double>> ineq_forms;
    /// A point strictly inside the range, computed at construction.
    std::vector<double> interior;

    double density(const std::vector<double>& y) const;
    bool in_range(const std::vector<double>& y) const;
    /// Closure of the range (assembly accepts boundary coordinates).
    bool in_closure(const std::vector<double>& y, double tol = 1e-12) const;
    const std::vector<double>& interior_point() const { return interior; }
};

/// (x52,x53,x54) -> (x,y,z) with x in [0,pi], y in [0,x], z in [0,y].
std::array<double, 3> tits_to_xyz(const std::vector<double>& coords);
/// Inverse substitution x52 = (x+y-z)/sqrt6, x53 = (y+z)/2,
/// x54 = -x/sqrt3 + (y-z)/(2 sqrt3).
std::vector<double> tits_from_xyz(const std::array<double, 3>& xyz);

/// Torus V = {Y2, Y82, Y99} with the nine-factor sine weight.
EulerChart chart_tits(const GeneratorSet& y56);
/// Torus V = {D_1..D_7}/sqrt2 with the 63-factor weight and the
/// 8-inequality range.
EulerChart chart_split(const SplitSet& split, const RootDatum& rd);
/// Torus at slots 70/86/103/120, rotated to the frame in which the simple
/// restricted roots take the displayed form; 24 sine factors with
/// multiplicity exponents and the 5-inequality range.
EulerChart chart_evi(const EviSet& evi, const EviRootReport& er);

/// B exp(sum coords * torus) U with unitarity, range and subgroup-shape
/// checks.  Throws OutOfRange / NotUnitary.
Mat assemble(const Mat& b, const std::vector<double>& coords, const Mat& u,
             const EulerChart& chart);

/// Block action (u ^ u) (+) conj(u ^ u) of a special-unitary 8x8 matrix on
/// the 56.  Throws NotUnitary unless u is unitary with unit determinant.
Mat su8_embed(const Mat& u8);
/// The corresponding algebra embedding (wedge derivation).
Mat su8_algebra_embed(const Mat& x8);

/// |det[Pi o Ad_{exp(-V[y])} : su(8) -> t]| computed from the explicit
/// 63x63 projected-adjoint matrix; the independent oracle for the chart
/// density.
double split_density_determinant(const SplitSet& split, const EulerChart& chart,
                                 const std::vector<double>& y);

/// Haar sampling over the split construction: two independent SU(8) factors
/// and torus coordinates drawn by verified rejection from the chart weight.
class SplitHaarSampler {
  public:
    SplitHaarSampler(const SplitSet& split, const RootDatum& rd);

    struct Sample {
        Mat g;
        std::vector<double> torus_coords; // in the D-frame (7)
        long proposals = 0;
    };
    /// Deterministic: the draw depends only on (seed, index).
    Sample sample(std::uint64_t seed, std::uint64_t index) const;

    double envelope_constant() const { return envelope_; }
    const EulerChart& chart() const { return chart_; }

  private:
    std::vector<double> draw_torus(Prng& rng, long& proposals) const;
    Mat su8_draw(Prng& rng) const;

    EulerChart chart_;
    std::vector<std::vector<int>> root_coeffs_; // over the simple basis
    std::vector<int> mcoef_;                    // longest-root coefficients
    Eigen::MatrixXd simple_to_y_;               // u -> y transform
    Eigen::VectorXcd torus_diag_[7];            // diagonal of each generator
    double envelope_ = 0;
};

} // namespace e7f
