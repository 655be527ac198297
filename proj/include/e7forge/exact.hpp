#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "e7forge/errors.hpp"

namespace e7f {

using Rational = mpq_class;

/// Element of the number field Q(i, sqrt2, sqrt3).
///
/// Stored as eight reduced rationals: the coefficients of the real and
/// imaginary parts over the basis {1, sqrt2, sqrt3, sqrt6}.  The field is
/// closed under multiplication (sqrt2*sqrt3 = sqrt6 and so on), so every
/// arithmetic result stays representable; there is no rounding anywhere.
class ExactScalar {
  public:
    ExactScalar() = default;
    ExactScalar(long v) { re_[0] = v; }
    explicit ExactScalar(const Rational& v) {
        re_[0] = v;
        re_[0].canonicalize();
    }

    /// q * basis[k], with basis {1, sqrt2, sqrt3, sqrt6} at k = 0..3.
    static ExactScalar basis(int k, const Rational& q = 1) {
        ExactScalar s;
        s.re_.at(static_cast<std::size_t>(k)) = q;
        s.canonicalize();
        return s;
    }
    /// i * q * basis[k].
    static ExactScalar imag_basis(int k, const Rational& q = 1) {
        ExactScalar s;
        s.im_.at(static_cast<std::size_t>(k)) = q;
        s.canonicalize();
        return s;
    }

    static ExactScalar zero() { return ExactScalar(); }
    static ExactScalar one() { return ExactScalar(1); }
    static ExactScalar i() { return imag_basis(0); }
    static ExactScalar sqrt2() { return basis(1); }
    static ExactScalar sqrt3() { return basis(2); }
    static ExactScalar sqrt6() { return basis(3); }
    /// sqrt(2/3) = sqrt6/3.
    static ExactScalar sqrt2over3() { return basis(3, Rational(1, 3)); }
    /// sqrt(3/2) = sqrt6/2.
    static ExactScalar sqrt3over2() { return basis(3, Rational(1, 2)); }

    const Rational& re_coeff(int k) const { return re_[static_cast<std::size_t>(k)]; }
    const Rational& im_coeff(int k) const { return im_[static_cast<std::size_t>(k)]; }

    bool is_zero() const;
    bool is_rational() const;
    bool operator==(const ExactScalar& o) const { return re_ == o.re_ && im_ == o.im_; }
    bool operator!=(const ExactScalar& o) const { return !(*this == o); }

    ExactScalar operator+(const ExactScalar& o) const;
    ExactScalar operator-(const ExactScalar& o) const;
    ExactScalar operator-() const;
    ExactScalar operator*(const ExactScalar& o) const;
    ExactScalar& operator+=(const ExactScalar& o) { return *this = *this + o; }
    ExactScalar& operator-=(const ExactScalar& o) { return *this = *this - o; }
    ExactScalar& operator*=(const ExactScalar& o) { return *this = *this * o; }

    /// Multiplicative inverse.  Throws DivisionByZero on zero.
    ExactScalar inverse() const;
    ExactScalar operator/(const ExactScalar& o) const { return *this * o.inverse(); }

    /// Complex conjugate (flips the sign of the imaginary coefficients).
    ExactScalar conj() const;

    /// Real / imaginary part as field-real scalars.
    ExactScalar real_part() const;
    ExactScalar imag_part() const;
    bool is_real() const;

    /// For a positive field-rational value r, returns 1/sqrt(r) when the
    /// square root stays inside the field (squarefree part of the rational
    /// in {1,2,3,6}); nullopt otherwise.
    std::optional<ExactScalar> rational_inv_sqrt() const;

    /// Embedding into complex floating point; deterministic rounding, the
    /// error is below 4 ulps of the result.
    std::complex<double> embed() const;

    /// Text rendering "p0/q0,p1/q1,p2/q2,p3/q3;r0/s0,r1/s1,r2/s2,r3/s3"
    /// (real coefficients, then imaginary ones).  Round-trips exactly.
    std::string to_string() const;
    static ExactScalar from_string(const std::string& text);

  private:
    void canonicalize();

    std::array<Rational, 4> re_{Rational(0), Rational(0), Rational(0), Rational(0)};
    std::array<Rational, 4> im_{Rational(0), Rational(0), Rational(0), Rational(0)};
};

ExactScalar operator*(const Rational& q, const ExactScalar& s);
std::ostream& operator<<(std::ostream& os, const ExactScalar& s);

} // namespace e7f
