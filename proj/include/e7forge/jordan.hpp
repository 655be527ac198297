#pragma once

#include <array>
#include <vector>

#include "e7forge/octonion.hpp"

namespace e7f {

/// 3x3 hermitian octonionic matrix
///
///     ( a      o1     o2 )
///     ( o1~    b      o3 )
///     ( o2~    o3~    c  )
///
/// with a,b,c real (field-real ExactScalars) and o1,o2,o3 octonions.
/// Hermiticity holds by construction.
struct JordanMatrix {
    std::array<ExactScalar, 3> diag{};
    std::array<Octonion, 3> off{}; // positions (1,2), (1,3), (2,3)

    static JordanMatrix identity();
    static JordanMatrix diag_matrix(const ExactScalar& a, const ExactScalar& b,
                                    const ExactScalar& c);
    /// Off-diagonal hermitian unit at position pos (0:(1,2), 1:(1,3), 2:(2,3))
    /// carrying octonion o.
    static JordanMatrix off_matrix(int pos, const Octonion& o);

    ExactScalar trace() const;
    bool is_zero() const;

    JordanMatrix operator+(const JordanMatrix& o) const;
    JordanMatrix operator-(const JordanMatrix& o) const;
    JordanMatrix operator-() const;
    bool operator==(const JordanMatrix& o) const;
};

JordanMatrix operator*(const ExactScalar& s, const JordanMatrix& m);

/// Jordan product (xy + yx)/2.
JordanMatrix jordan_mul(const JordanMatrix& x, const JordanMatrix& y);

/// <x,y> = tr(x o y).
ExactScalar jordan_inner(const JordanMatrix& x, const JordanMatrix& y);

/// Star product on traceless matrices: x*y = x o y - (1/3)<x,y> I.
/// Throws NotTraceless unless both arguments are traceless.
JordanMatrix star(const JordanMatrix& x, const JordanMatrix& y);

/// The same bilinear expression without the tracelessness guard; used by the
/// identities that feed non-traceless products through it.
JordanMatrix star_bilinear(const JordanMatrix& x, const JordanMatrix& y);

/// Freudenthal product
/// x # y = x o y - tr(x)y/2 - tr(y)x/2 + (tr(x)tr(y) - tr(x o y)) I/2.
JordanMatrix freudenthal(const JordanMatrix& x, const JordanMatrix& y);

/// Determinant form, the symmetric trilinear polarization of det.
ExactScalar det_form(const JordanMatrix& x, const JordanMatrix& y, const JordanMatrix& z);

/// Fixed orthogonal basis j_1..j_27 of J with tr(j_a o j_b) = 2 delta_ab:
///   j_1  = diag(1,-1,0)
///   j_2..j_9   : position (1,2), octonion units e0..e7
///   j_10..j_17 : position (1,3), octonion units e0..e7
///   j_18 = diag(1,1,-2)/sqrt3
///   j_19..j_26 : position (2,3), octonion units e0..e7
///   j_27 = sqrt(2/3) I.
class JordanBasis {
  public:
    JordanBasis();

    static constexpr int kTau = 2;

    const JordanMatrix& element(int a) const { return elems_[static_cast<std::size_t>(a - 1)]; }
    const std::vector<JordanMatrix>& elements() const { return elems_; }

    /// Coordinates of m in the basis (exact; uses the diagonal Gram).
    std::vector<ExactScalar> coordinates(const JordanMatrix& m) const;

  private:
    std::vector<JordanMatrix> elems_;
};

} // namespace e7f
