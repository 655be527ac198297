#include "e7forge/jordan.hpp"

namespace e7f {

JordanMatrix JordanMatrix::identity() {
    JordanMatrix m;
    m.diag = {ExactScalar::one(), ExactScalar::one(), ExactScalar::one()};
    return m;
}

JordanMatrix JordanMatrix::diag_matrix(const ExactScalar& a, const ExactScalar& b,
                                       const ExactScalar& c) {
    JordanMatrix m;
    m.diag = {a, b, c};
    return m;
}

JordanMatrix JordanMatrix::off_matrix(int pos, const Octonion& o) {
    JordanMatrix m;
    m.off[static_cast<std::size_t>(pos)] = o;
    return m;
}

ExactScalar JordanMatrix::trace() const { return diag[0] + diag[1] + diag[2]; }

bool JordanMatrix::is_zero() const {
    return diag[0].is_zero() && diag[1].is_zero() && diag[2].is_zero() && off[0].is_zero() &&
           off[1].is_zero() && off[2].is_zero();
}

JordanMatrix JordanMatrix::operator+(const JordanMatrix& o) const {
    JordanMatrix r;
    for (int k = 0; k < 3; ++k) {
        r.diag[k] = diag[k] + o.diag[k];
        r.off[k] = off[k] + o.off[k];
    }
    return r;
}

JordanMatrix JordanMatrix::operator-(const JordanMatrix& o) const {
    JordanMatrix r;
    for (int k = 0; k < 3; ++k) {
        r.diag[k] = diag[k] - o.diag[k];
        r.off[k] = off[k] - o.off[k];
    }
    return r;
}

JordanMatrix JordanMatrix::operator-() const {
    JordanMatrix r;
    for (int k = 0; k < 3; ++k) {
        r.diag[k] = -diag[k];
        r.off[k] = -off[k];
    }
    return r;
}

bool JordanMatrix::operator==(const JordanMatrix& o) const {
    return diag == o.diag && off == o.off;
}

JordanMatrix operator*(const ExactScalar& s, const JordanMatrix& m) {
    JordanMatrix r;
    for (int k = 0; k < 3; ++k) {
        r.diag[k] = s * m.diag[k];
        r.off[k] = s * m.off[k];
    }
    return r;
}

JordanMatrix jordan_mul(const JordanMatrix& x, const JordanMatrix& y) {
    const ExactScalar &a1 = x.diag[0], &b1 = x.diag[1], &c1 = x.diag[2];
    const ExactScalar &a2 = y.diag[0], &b2 = y.diag[1], &c2 = y.diag[2];
    const Octonion &p1 = x.off[0], &p2 = x.off[1], &p3 = x.off[2];
    const Octonion &q1 = y.off[0], &q2 = y.off[1], &q3 = y.off[2];

    ExactScalar half(Rational(1, 2));

    JordanMatrix z;
    z.diag[0] = a1 * a2 + oct_inner(p1, q1) + oct_inner(p2, q2);
    z.diag[1] = b1 * b2 + oct_inner(p1, q1) + oct_inner(p3, q3);
    z.diag[2] = c1 * c2 + oct_inner(p2, q2) + oct_inner(p3, q3);
    z.off[0] = half * ((a1 + b1) * q1 + (a2 + b2) * p1 + p2 * q3.conj() + q2 * p3.conj());
    z.off[1] = half * ((a1 + c1) * q2 + (a2 + c2) * p2 + p1 * q3 + q1 * p3);
    z.off[2] = half * ((b1 + c1) * q3 + (b2 + c2) * p3 + p1.conj() * q2 + q1.conj() * p2);
    return z;
}

ExactScalar jordan_inner(const JordanMatrix& x, const JordanMatrix& y) {
    return jordan_mul(x, y).trace();
}

JordanMatrix star_bilinear(const JordanMatrix& x, const JordanMatrix& y) {
    ExactScalar third(Rational(1, 3));
    return jordan_mul(x, y) - (third * jordan_inner(x, y)) * JordanMatrix::identity();
}

JordanMatrix star(const JordanMatrix& x, const JordanMatrix& y) {
    if (!x.trace().is_zero() || !y.trace().is_zero())
        throw Error(ErrorKind::NotTraceless, "star product requires traceless arguments");
    return star_bilinear(x, y);
}

JordanMatrix freudenthal(const JordanMatrix& x, const JordanMatrix& y) {
    ExactScalar half(Rational(1, 2));
    ExactScalar tx = x.trace(), ty = y.trace();
    JordanMatrix r = jordan_mul(x, y) - (half * tx) * y - (half * ty) * x;
    ExactScalar c = half * (tx * ty - jordan_inner(x, y));
    return r + c * JordanMatrix::identity();
}

ExactScalar det_form(const JordanMatrix& x, const JordanMatrix& y, const JordanMatrix& z) {
    ExactScalar third(Rational(1, 3));
    ExactScalar sixth(Rational(1, 6));
    ExactScalar txy = jordan_inner(x, y);
    ExactScalar txz = jordan_inner(x, z);
    ExactScalar tyz = jordan_inner(y, z);
    ExactScalar tx = x.trace(), ty = y.trace(), tz = z.trace();
    ExactScalar lead = third * jordan_mul(jordan_mul(x, y), z).trace();
    return lead - sixth * (tx * tyz + ty * txz + tz * txy) + sixth * (tx * ty * tz);
}

JordanBasis::JordanBasis() {
    elems_.reserve(27);
    ExactScalar one = ExactScalar::one();
    // j_1
    elems_.push_back(JordanMatrix::diag_matrix(one, -one, ExactScalar::zero()));
    // j_2..j_9 and j_10..j_17: positions (1,2) and (1,3)
    for (int pos = 0; pos < 2; ++pos)
        for (int u = 0; u < 8; ++u) elems_.push_back(JordanMatrix::off_matrix(pos, Octonion::unit(u)));
    // j_18 = diag(1,1,-2)/sqrt3
    ExactScalar inv_s3 = ExactScalar::sqrt3().inverse();
    elems_.push_back(inv_s3 * JordanMatrix::diag_matrix(one, one, ExactScalar(-2)));
    // j_19..j_26: position (2,3)
    for (int u = 0; u < 8; ++u) elems_.push_back(JordanMatrix::off_matrix(2, Octonion::unit(u)));
    // j_27 = sqrt(2/3) I
    elems_.push_back(ExactScalar::sqrt2over3() * JordanMatrix::identity());
}

std::vector<ExactScalar> JordanBasis::coordinates(const JordanMatrix& m) const {
    std::vector<ExactScalar> out;
    out.reserve(27);
    ExactScalar half(Rational(1, 2));
    for (const auto& j : elems_) out.push_back(half * jordan_inner(m, j));
    return out;
}

} // namespace e7f
