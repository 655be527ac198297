#pragma once

#include <array>

#include "e7forge/exact.hpp"

namespace e7f {

/// Quaternion over ExactScalar coordinates, basis {1, h1=i, h2=j, h3=k}.
struct Quaternion {
    std::array<ExactScalar, 4> c{};

    Quaternion() = default;
    static Quaternion unit(int k) {
        Quaternion q;
        q.c[static_cast<std::size_t>(k)] = ExactScalar::one();
        return q;
    }

    bool is_zero() const;
    bool is_imaginary() const { return c[0].is_zero(); }

    Quaternion operator+(const Quaternion& o) const;
    Quaternion operator-(const Quaternion& o) const;
    Quaternion operator*(const Quaternion& o) const;
    Quaternion operator-() const;
    Quaternion conj() const;

    bool operator==(const Quaternion& o) const { return c == o.c; }
};

Quaternion operator*(const ExactScalar& s, const Quaternion& q);

/// <h1,h2> = Re(conj(h1) h2).
ExactScalar quat_inner(const Quaternion& a, const Quaternion& b);
/// Commutator [a,b] = ab - ba.
Quaternion quat_commutator(const Quaternion& a, const Quaternion& b);
/// D_{h1,h2} = [L_{h1},L_{h2}] + [R_{h1},R_{h2}] applied to x; h1, h2 must
/// be imaginary.
Quaternion quat_derivation(const Quaternion& h1, const Quaternion& h2, const Quaternion& x);

/// Octonion over ExactScalar coordinates, basis {e0=1, e1..e7}.
///
/// The Cayley table follows the oriented Fano triples
/// (1,2,3) (1,4,5) (2,4,6) (3,4,7) (2,5,7) (6,1,7) (3,6,5),
/// with e_a e_b = e_c cyclically on each triple.
struct Octonion {
    std::array<ExactScalar, 8> c{};

    Octonion() = default;
    static Octonion unit(int k) {
        Octonion o;
        o.c[static_cast<std::size_t>(k)] = ExactScalar::one();
        return o;
    }
    static Octonion from_real(const ExactScalar& s) {
        Octonion o;
        o.c[0] = s;
        return o;
    }

    bool is_zero() const;
    bool is_imaginary() const { return c[0].is_zero(); }

    Octonion operator+(const Octonion& o) const;
    Octonion operator-(const Octonion& o) const;
    Octonion operator-() const;
    Octonion operator*(const Octonion& o) const;
    Octonion conj() const;

    bool operator==(const Octonion& o) const { return c == o.c; }
};

Octonion operator*(const ExactScalar& s, const Octonion& o);

/// <x,y> = Re(conj(x) y).
ExactScalar oct_inner(const Octonion& a, const Octonion& b);
Octonion oct_commutator(const Octonion& a, const Octonion& b);
/// Associator [x,y,z] = (xy)z - x(yz); totally antisymmetric.
Octonion associator(const Octonion& x, const Octonion& y, const Octonion& z);
/// D_{h1,h2}(x) on octonions; h1, h2 must be imaginary.
Octonion oct_derivation(const Octonion& h1, const Octonion& h2, const Octonion& x);

/// Signed structure constant: e_a e_b = sign * e_{abs_index}.
/// Exposed so tests can cross-check the table against the Fano triples.
struct OctMulEntry {
    int index;
    int sign;
};
OctMulEntry oct_table(int a, int b);

} // namespace e7f
