#include "e7forge/octonion.hpp"

namespace e7f {

namespace {

// mul_index[a][b], mul_sign[a][b] for the imaginary units 1..7; row/col 0 is
// the real unit.
struct CayleyTable {
    int idx[8][8];
    int sgn[8][8];

    CayleyTable() {
        for (int a = 0; a < 8; ++a)
            for (int b = 0; b < 8; ++b) {
                idx[a][b] = 0;
                sgn[a][b] = 0;
            }
        for (int k = 0; k < 8; ++k) {
            idx[0][k] = k;
            sgn[0][k] = 1;
            idx[k][0] = k;
            sgn[k][0] = 1;
        }
        for (int k = 1; k < 8; ++k) {
            idx[k][k] = 0;
            sgn[k][k] = -1;
        }
        const int triples[7][3] = {{1, 2, 3}, {1, 4, 5}, {2, 4, 6}, {3, 4, 7},
                                   {2, 5, 7}, {6, 1, 7}, {3, 6, 5}};
        for (const auto& t : triples) {
            int a = t[0], b = t[1], c = t[2];
            set(a, b, c);
            set(b, c, a);
            set(c, a, b);
        }
    }

    void set(int a, int b, int c) {
        idx[a][b] = c;
        sgn[a][b] = 1;
        idx[b][a] = c;
        sgn[b][a] = -1;
    }
};

const CayleyTable& table() {
    static const CayleyTable t;
    return t;
}

} // namespace

OctMulEntry oct_table(int a, int b) { return {table().idx[a][b], table().sgn[a][b]}; }

bool Quaternion::is_zero() const {
    for (const auto& s : c)
        if (!s.is_zero()) return false;
    return true;
}

Quaternion Quaternion::operator+(const Quaternion& o) const {
    Quaternion r;
    for (int k = 0; k < 4; ++k) r.c[k] = c[k] + o.c[k];
    return r;
}

Quaternion Quaternion::operator-(const Quaternion& o) const {
    Quaternion r;
    for (int k = 0; k < 4; ++k) r.c[k] = c[k] - o.c[k];
    return r;
}

Quaternion Quaternion::operator-() const {
    Quaternion r;
    for (int k = 0; k < 4; ++k) r.c[k] = -c[k];
    return r;
}

Quaternion Quaternion::conj() const {
    Quaternion r;
    r.c[0] = c[0];
    for (int k = 1; k < 4; ++k) r.c[k] = -c[k];
    return r;
}

Quaternion Quaternion::operator*(const Quaternion& o) const {
    // Quaternions are the subalgebra spanned by {e0,e1,e2,e3} of the
    // octonions; reuse the table.
    Quaternion r;
    for (int a = 0; a < 4; ++a) {
        if (c[a].is_zero()) continue;
        for (int b = 0; b < 4; ++b) {
            if (o.c[b].is_zero()) continue;
            OctMulEntry e = oct_table(a, b);
            ExactScalar term = c[a] * o.c[b];
            if (e.sign < 0) term = -term;
            r.c[e.index] += term;
        }
    }
    return r;
}

Quaternion operator*(const ExactScalar& s, const Quaternion& q) {
    Quaternion r;
    for (int k = 0; k < 4; ++k) r.c[k] = s * q.c[k];
    return r;
}

ExactScalar quat_inner(const Quaternion& a, const Quaternion& b) {
    ExactScalar s;
    for (int k = 0; k < 4; ++k) s += a.c[k] * b.c[k];
    return s;
}

Quaternion quat_commutator(const Quaternion& a, const Quaternion& b) {
    return a * b - b * a;
}

Quaternion quat_derivation(const Quaternion& h1, const Quaternion& h2, const Quaternion& x) {
    // [L1,L2]x + [R1,R2]x
    Quaternion l = h1 * (h2 * x) - h2 * (h1 * x);
    Quaternion r = (x * h2) * h1 - (x * h1) * h2;
    return l + r;
}

bool Octonion::is_zero() const {
    for (const auto& s : c)
        if (!s.is_zero()) return false;
    return true;
}

Octonion Octonion::operator+(const Octonion& o) const {
    Octonion r;
    for (int k = 0; k < 8; ++k) r.c[k] = c[k] + o.c[k];
    return r;
}

Octonion Octonion::operator-(const Octonion& o) const {
    Octonion r;
    for (int k = 0; k < 8; ++k) r.c[k] = c[k] - o.c[k];
    return r;
}

Octonion Octonion::operator-() const {
    Octonion r;
    for (int k = 0; k < 8; ++k) r.c[k] = -c[k];
    return r;
}

Octonion Octonion::conj() const {
    Octonion r;
    r.c[0] = c[0];
    for (int k = 1; k < 8; ++k) r.c[k] = -c[k];
    return r;
}

Octonion Octonion::operator*(const Octonion& o) const {
    Octonion r;
    for (int a = 0; a < 8; ++a) {
        if (c[a].is_zero()) continue;
        for (int b = 0; b < 8; ++b) {
            if (o.c[b].is_zero()) continue;
            OctMulEntry e = oct_table(a, b);
            ExactScalar term = c[a] * o.c[b];
            if (e.sign < 0) term = -term;
            r.c[e.index] += term;
        }
    }
    return r;
}

Octonion operator*(const ExactScalar& s, const Octonion& o) {
    Octonion r;
    for (int k = 0; k < 8; ++k) r.c[k] = s * o.c[k];
    return r;
}

ExactScalar oct_inner(const Octonion& a, const Octonion& b) {
    ExactScalar s;
    for (int k = 0; k < 8; ++k) s += a.c[k] * b.c[k];
    return s;
}

Octonion oct_commutator(const Octonion& a, const Octonion& b) { return a * b - b * a; }

Octonion associator(const Octonion& x, const Octonion& y, const Octonion& z) {
    return (x * y) * z - x * (y * z);
}

Octonion oct_derivation(const Octonion& h1, const Octonion& h2, const Octonion& x) {
    // D_{h1,h2} = [L1,L2] + [L1,R2] + [R1,R2].  The mixed term vanishes on
    // any associative subalgebra but is required for octonions.
    Octonion ll = h1 * (h2 * x) - h2 * (h1 * x);
    Octonion lr = h1 * (x * h2) - (h1 * x) * h2;
    Octonion rr = (x * h2) * h1 - (x * h1) * h2;
    return ll + lr + rr;
}

} // namespace e7f
