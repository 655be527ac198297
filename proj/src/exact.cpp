#include "e7forge/exact.hpp"

#include <ostream>
#include <sstream>

namespace e7f {

namespace {

// Product table of the real basis {1, sqrt2, sqrt3, sqrt6}:
// basis[i]*basis[j] = coeff * basis[idx].
struct BasisProduct {
    int idx;
    int coeff;
};

constexpr BasisProduct kTable[4][4] = {
    {{0, 1}, {1, 1}, {2, 1}, {3, 1}},
    {{1, 1}, {0, 2}, {3, 1}, {2, 2}},
    {{2, 1}, {3, 1}, {0, 3}, {1, 3}},
    {{3, 1}, {2, 2}, {1, 3}, {0, 6}},
};

using Quad = std::array<Rational, 4>;

Quad quad_add(const Quad& a, const Quad& b) {
    Quad r;
    for (int k = 0; k < 4; ++k) r[k] = a[k] + b[k];
    return r;
}

Quad quad_sub(const Quad& a, const Quad& b) {
    Quad r;
    for (int k = 0; k < 4; ++k) r[k] = a[k] - b[k];
    return r;
}

Quad quad_mul(const Quad& a, const Quad& b) {
    Quad r{Rational(0), Rational(0), Rational(0), Rational(0)};
    for (int i = 0; i < 4; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < 4; ++j) {
            if (b[j] == 0) continue;
            const BasisProduct& p = kTable[i][j];
            r[p.idx] += a[i] * b[j] * p.coeff;
        }
    }
    return r;
}

bool quad_zero(const Quad& a) {
    for (const auto& q : a)
        if (q != 0) return false;
    return true;
}

// Galois flip sqrt2 -> -sqrt2 (negates the sqrt2 and sqrt6 coefficients).
Quad flip2(const Quad& a) { return {a[0], -a[1], a[2], -a[3]}; }
// Galois flip sqrt3 -> -sqrt3.
Quad flip3(const Quad& a) { return {a[0], a[1], -a[2], -a[3]}; }

Rational parse_rational(const std::string& tok) {
    mpq_class q;
    if (q.set_str(tok, 10) != 0)
        throw Error(ErrorKind::ParseError, "bad rational '" + tok + "'");
    q.canonicalize();
    return q;
}

} // namespace

void ExactScalar::canonicalize() {
    for (auto& q : re_) q.canonicalize();
    for (auto& q : im_) q.canonicalize();
}

bool ExactScalar::is_zero() const { return quad_zero(re_) && quad_zero(im_); }

bool ExactScalar::is_rational() const {
    return re_[1] == 0 && re_[2] == 0 && re_[3] == 0 && quad_zero(im_);
}

ExactScalar ExactScalar::operator+(const ExactScalar& o) const {
    ExactScalar r;
    r.re_ = quad_add(re_, o.re_);
    r.im_ = quad_add(im_, o.im_);
    return r;
}

ExactScalar ExactScalar::operator-(const ExactScalar& o) const {
    ExactScalar r;
    r.re_ = quad_sub(re_, o.re_);
    r.im_ = quad_sub(im_, o.im_);
    return r;
}

ExactScalar ExactScalar::operator-() const {
    ExactScalar r;
    for (int k = 0; k < 4; ++k) {
        r.re_[k] = -re_[k];
        r.im_[k] = -im_[k];
    }
    return r;
}

ExactScalar ExactScalar::operator*(const ExactScalar& o) const {
    ExactScalar r;
    r.re_ = quad_sub(quad_mul(re_, o.re_), quad_mul(im_, o.im_));
    r.im_ = quad_add(quad_mul(re_, o.im_), quad_mul(im_, o.re_));
    return r;
}

ExactScalar ExactScalar::conj() const {
    ExactScalar r;
    r.re_ = re_;
    for (int k = 0; k < 4; ++k) r.im_[k] = -im_[k];
    return r;
}

ExactScalar ExactScalar::inverse() const {
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    // Successive norms down the tower Q(i,s2,s3) -> Q(s2,s3) -> Q(s3) -> Q.
    // n1 = z * conj(z) is real; multiplying by the two Galois flips of n1
    // yields a rational n3, and the inverse is the product of conjugates
    // over n3.
    ExactScalar zbar = conj();
    ExactScalar n1 = (*this) * zbar; // real part only
    Quad n1q = n1.re_;
    Quad n2 = quad_mul(n1q, flip2(n1q)); // free of sqrt2, sqrt6
    Quad n3 = quad_mul(n2, flip3(n2));   // rational
    Rational denom = n3[0];
    ExactScalar f2;
    f2.re_ = flip2(n1q);
    ExactScalar f3;
    f3.re_ = flip3(n2);
    ExactScalar num = zbar * f2 * f3;
    ExactScalar r;
    Rational inv = Rational(1) / denom;
    for (int k = 0; k < 4; ++k) {
        r.re_[k] = num.re_[k] * inv;
        r.im_[k] = num.im_[k] * inv;
    }
    r.canonicalize();
    return r;
}

ExactScalar ExactScalar::real_part() const {
    ExactScalar r;
    r.re_ = re_;
    return r;
}

ExactScalar ExactScalar::imag_part() const {
    ExactScalar r;
    r.re_ = im_;
    return r;
}

bool ExactScalar::is_real() const { return quad_zero(im_); }

std::optional<ExactScalar> ExactScalar::rational_inv_sqrt() const {
    if (!is_rational()) return std::nullopt;
    const Rational& q = re_[0];
    if (q <= 0) return std::nullopt;
    // sqrt(den/num): pull the squarefree part of num*den.
    mpz_class m = q.get_num() * q.get_den();
    mpz_class s = 1, rest = m;
    for (mpz_class p = 2; p * p <= rest;) {
        mpz_class p2 = p * p;
        if (rest % p2 == 0) {
            s *= p;
            rest /= p2;
            continue;
        }
        p += (p == 2) ? 1 : 2;
    }
    int idx;
    if (rest == 1)
        idx = 0;
    else if (rest == 2)
        idx = 1;
    else if (rest == 3)
        idx = 2;
    else if (rest == 6)
        idx = 3;
    else
        return std::nullopt;
    // 1/sqrt(q) = sqrt(num*den)/num = s*sqrt(rest)*den / (num*den)
    Rational coeff(s * q.get_den(), m);
    coeff.canonicalize();
    return basis(idx, coeff);
}

std::complex<double> ExactScalar::embed() const {
    static const long double kRoots[4] = {
        1.0L,
        1.41421356237309504880168872420969808L,
        1.73205080756887729352744634150587237L,
        2.44948974278317809819728407470589139L,
    };
    long double re = 0, im = 0;
    for (int k = 0; k < 4; ++k) {
        if (re_[k] != 0) re += static_cast<long double>(re_[k].get_d()) * kRoots[k];
        if (im_[k] != 0) im += static_cast<long double>(im_[k].get_d()) * kRoots[k];
    }
    return {static_cast<double>(re), static_cast<double>(im)};
}

std::string ExactScalar::to_string() const {
    auto render = [](const Quad& q) {
        std::string out;
        for (int k = 0; k < 4; ++k) {
            if (k) out += ',';
            out += q[k].get_num().get_str();
            out += '/';
            out += q[k].get_den().get_str();
        }
        return out;
    };
    return render(re_) + ";" + render(im_);
}

ExactScalar ExactScalar::from_string(const std::string& text) {
    auto semi = text.find(';');
    if (semi == std::string::npos)
        throw Error(ErrorKind::ParseError, "missing ';' in scalar '" + text + "'");
    auto parse_quad = [](const std::string& part, Quad& out) {
        std::stringstream ss(part);
        std::string tok;
        int k = 0;
        while (std::getline(ss, tok, ',')) {
            if (k >= 4) throw Error(ErrorKind::ParseError, "too many coefficients");
            out[k++] = parse_rational(tok);
        }
        if (k != 4) throw Error(ErrorKind::ParseError, "expected 4 coefficients");
    };
    ExactScalar s;
    parse_quad(text.substr(0, semi), s.re_);
    parse_quad(text.substr(semi + 1), s.im_);
    return s;
}

ExactScalar operator*(const Rational& q, const ExactScalar& s) {
    return ExactScalar(q) * s;
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& s) {
    return os << s.to_string();
}

} // namespace e7f
