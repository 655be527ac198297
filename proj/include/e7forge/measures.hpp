#pragma once

#include <string>
#include <vector>

#include "e7forge/exact.hpp"

namespace e7f {

/// Exact value of the form (rational) * sqrt2^a * sqrt3^b * pi^n with the
/// square-root exponents folded to {0,1}.
class SymbolicVolume {
  public:
    SymbolicVolume() = default;
    SymbolicVolume(Rational rational, int sqrt2_exp, int sqrt3_exp, int pi_exp);

    static SymbolicVolume one() { return SymbolicVolume(1, 0, 0, 0); }

    const Rational& rational() const { return rat_; }
    int sqrt2_exp() const { return e2_; }
    int sqrt3_exp() const { return e3_; }
    int pi_exp() const { return npi_; }

    SymbolicVolume operator*(const SymbolicVolume& o) const;
    SymbolicVolume operator/(const SymbolicVolume& o) const;
    bool operator==(const SymbolicVolume& o) const;

    /// Exact rational content; throws NotRepresentable if a square root or
    /// a power of pi survives.
    Rational as_rational() const;

    double to_double() const;
    /// "sqrt2^a·sqrt3^b · P/Q · pi^n" with factored integers.
    std::string to_string() const;

  private:
    Rational rat_ = 0;
    int e2_ = 0, e3_ = 0, npi_ = 0;
};

/// Data of the Macdonald volume formula: torus volume, rational-cohomology
/// sphere dimensions and the coroot norms.
struct GroupVolumeDescriptor {
    std::string name;
    SymbolicVolume torus_volume;
    std::vector<int> sphere_dims;
    int coroot_count = 0; // all of norm sqrt2
};

GroupVolumeDescriptor descriptor_e7();
GroupVolumeDescriptor descriptor_e6();
GroupVolumeDescriptor descriptor_so8();

/// V_T * prod Vol(S^d) * prod |coroot|.
SymbolicVolume macdonald_volume(const GroupVolumeDescriptor& d);

/// Vol(U(1)) in the convention of the one-parameter period T_g.
SymbolicVolume circle_volume();

/// Vol(U) = Vol(E6) Vol(U(1))/3, Vol(E7/U), and friends.
SymbolicVolume volume_u();
SymbolicVolume volume_e7_mod_u();

SymbolicVolume quotient_volume(const SymbolicVolume& g, const SymbolicVolume& h);

/// I(a,b,c) = Gamma(a)Gamma(b) / ((a+b+c)(a+b+c-1)Gamma(a+b)), exact.
Rational integral_closed(int a, int b, int c);

/// Tensorized Gauss-Legendre estimate of the same simplex integral.
double integral_quadrature(int a, int b, int c, int n);

/// Numerical integral of the nine-factor torus weight over the chained
/// (x,y,z) range, by Gauss-Legendre after mapping the simplex to a cube.
double w_integral_quadrature(int n);

/// The chart integral divided by Vol(E7/U): exactly 2 with the full U(1)
/// range, exactly 1 after the halving identification.
Rational covering_check(bool halved_u1_range = false);
/// The exact chart integral value itself.
SymbolicVolume covering_integral(bool halved_u1_range = false);

} // namespace e7f
