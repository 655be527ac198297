#include "e7forge/measures.hpp"

#include <cmath>

#include "e7forge/errors.hpp"

namespace e7f {

namespace {

constexpr double kPi = 3.14159265358979323846;

mpz_class factorial(int n) {
    mpz_class f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

std::string factored(const mpz_class& n) {
    if (n == 1) return "1";
    mpz_class m = n;
    std::string out;
    for (mpz_class p = 2; p * p <= m || m > 1;) {
        if (p * p > m) p = m;
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (e > 0) {
            if (!out.empty()) out += "*";
            out += p.get_str();
            if (e > 1) out += "^" + std::to_string(e);
        }
        if (m == 1) break;
        p += (p == 2) ? 1 : 2;
    }
    return out.empty() ? "1" : out;
}

// Gauss-Legendre nodes/weights on [0,1] by Newton iteration on P_n.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    x.resize(static_cast<std::size_t>(n));
    w.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        double t = std::cos(kPi * (i + 0.75) / (n + 0.5));
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = t;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = n * (t * p1 - p0) / (t * t - 1.0);
            double dt = p1 / dp;
            t -= dt;
            if (std::abs(dt) < 1e-15) break;
        }
        double p0 = 1.0, p1 = t;
        for (int k = 2; k <= n; ++k) {
            double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        double dp = n * (t * p1 - p0) / (t * t - 1.0);
        x[static_cast<std::size_t>(i)] = 0.5 * (1.0 - t); // map [-1,1] -> [0,1], reversed order
        w[static_cast<std::size_t>(i)] = 1.0 / ((1.0 - t * t) * dp * dp);
    }
}

} // namespace

SymbolicVolume::SymbolicVolume(Rational rational, int sqrt2_exp, int sqrt3_exp, int pi_exp)
    : rat_(std::move(rational)), e2_(sqrt2_exp), e3_(sqrt3_exp), npi_(pi_exp) {
    rat_.canonicalize();
    // fold sqrt exponents into the rational part
    auto fold = [&](int& e, int base) {
        while (e >= 2) {
            rat_ *= base;
            e -= 2;
        }
        while (e < 0) {
            rat_ /= base;
            e += 2;
        }
        rat_.canonicalize();
    };
    fold(e2_, 2);
    fold(e3_, 3);
    if (rat_ == 0) {
        e2_ = e3_ = npi_ = 0;
    }
}

SymbolicVolume SymbolicVolume::operator*(const SymbolicVolume& o) const {
    return SymbolicVolume(rat_ * o.rat_, e2_ + o.e2_, e3_ + o.e3_, npi_ + o.npi_);
}

SymbolicVolume SymbolicVolume::operator/(const SymbolicVolume& o) const {
    if (o.rat_ == 0) throw Error(ErrorKind::DivisionByZero, "volume quotient");
    return SymbolicVolume(rat_ / o.rat_, e2_ - o.e2_, e3_ - o.e3_, npi_ - o.npi_);
}

bool SymbolicVolume::operator==(const SymbolicVolume& o) const {
    return rat_ == o.rat_ && e2_ == o.e2_ && e3_ == o.e3_ && npi_ == o.npi_;
}

Rational SymbolicVolume::as_rational() const {
    if (e2_ != 0 || e3_ != 0 || npi_ != 0)
        throw Error(ErrorKind::NotRepresentable, "value is not rational: " + to_string());
    return rat_;
}

double SymbolicVolume::to_double() const {
    double v = rat_.get_d();
    if (e2_) v *= std::sqrt(2.0);
    if (e3_) v *= std::sqrt(3.0);
    return v * std::pow(kPi, npi_);
}

std::string SymbolicVolume::to_string() const {
    if (rat_ == 0) return "0";
    std::string out;
    if (e2_) out += "sqrt2·";
    if (e3_) out += "sqrt3·";
    mpz_class num = rat_.get_num(), den = rat_.get_den();
    bool neg = num < 0;
    if (neg) num = -num;
    out += (neg ? "-" : "") + factored(num);
    if (den != 1) out += "/(" + factored(den) + ")";
    if (npi_ != 0) out += " · pi^" + std::to_string(npi_);
    return out;
}

GroupVolumeDescriptor descriptor_e7() {
    return {"E7", SymbolicVolume(1, 1, 0, 0), {3, 11, 15, 19, 23, 27, 35}, 126};
}

GroupVolumeDescriptor descriptor_e6() {
    return {"E6", SymbolicVolume(1, 0, 1, 0), {3, 9, 11, 15, 17, 23}, 72};
}

GroupVolumeDescriptor descriptor_so8() {
    return {"SO8", SymbolicVolume(2, 0, 0, 0), {3, 7, 7, 11}, 24};
}

SymbolicVolume macdonald_volume(const GroupVolumeDescriptor& d) {
    SymbolicVolume v = d.torus_volume;
    for (int n : d.sphere_dims) {
        if (n % 2 == 0) throw Error(ErrorKind::WrongType, "odd sphere dimensions expected");
        int k = (n + 1) / 2;
        // Vol(S^n) = 2 pi^k / (k-1)!
        v = v * SymbolicVolume(Rational(2, factorial(k - 1)), 0, 0, k);
    }
    // coroots of norm sqrt2
    v = v * SymbolicVolume(1, d.coroot_count, 0, 0);
    return v;
}

SymbolicVolume circle_volume() {
    // T_g = 2 sqrt6 pi
    return SymbolicVolume(2, 1, 1, 1);
}

SymbolicVolume volume_u() {
    SymbolicVolume e6 = macdonald_volume(descriptor_e6());
    return e6 * circle_volume() / SymbolicVolume(3, 0, 0, 0);
}

SymbolicVolume volume_e7_mod_u() {
    return macdonald_volume(descriptor_e7()) / volume_u();
}

SymbolicVolume quotient_volume(const SymbolicVolume& g, const SymbolicVolume& h) {
    return g / h;
}

Rational integral_closed(int a, int b, int c) {
    if (a < 1 || b < 1 || c < 1)
        throw Error(ErrorKind::OutOfRange, "integral parameters must be >= 1");
    Rational r(factorial(a - 1) * factorial(b - 1),
               mpz_class(a + b + c) * mpz_class(a + b + c - 1) * factorial(a + b - 1));
    r.canonicalize();
    return r;
}

double integral_quadrature(int a, int b, int c, int n) {
    if (n < 8) throw Error(ErrorKind::OutOfRange, "need at least 8 nodes");
    // (x,y,z) = (x, xs, xst): I = 1/(a+b+c) * II s^b (1-s)^(a-1) (1-t)^(b-1)
    // (1-st)^(c-1) ds dt
    std::vector<double> x, w;
    gauss_legendre(n, x, w);
    double sum = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double s = x[static_cast<std::size_t>(i)], t = x[static_cast<std::size_t>(j)];
            double v = std::pow(s, b) * std::pow(1.0 - s, a - 1) * std::pow(1.0 - t, b - 1) *
                       std::pow(1.0 - s * t, c - 1);
            sum += w[static_cast<std::size_t>(i)] * w[static_cast<std::size_t>(j)] * v;
        }
    return sum / (a + b + c);
}

double w_integral_quadrature(int n) {
    // x in [0,pi], y = x u, z = x u v; dy dz = x^2 u du dv.
    std::vector<double> xs, ws;
    gauss_legendre(n, xs, ws);
    auto wxyz = [](double x, double y, double z) {
        auto s8 = [](double a) {
            double s = std::sin(a);
            double s2 = s * s, s4 = s2 * s2;
            return s4 * s4;
        };
        return std::sin(x) * std::sin(y) * std::sin(z) * s8(0.5 * (x - y)) * s8(0.5 * (x + y)) *
               s8(0.5 * (x - z)) * s8(0.5 * (x + z)) * s8(0.5 * (y - z)) * s8(0.5 * (y + z));
    };
    double sum = 0;
    for (int i = 0; i < n; ++i) {
        double x = kPi * xs[static_cast<std::size_t>(i)];
        for (int j = 0; j < n; ++j) {
            double u = xs[static_cast<std::size_t>(j)];
            double y = x * u;
            for (int k = 0; k < n; ++k) {
                double v = xs[static_cast<std::size_t>(k)];
                double z = y * v;
                sum += ws[static_cast<std::size_t>(i)] * ws[static_cast<std::size_t>(j)] *
                       ws[static_cast<std::size_t>(k)] * wxyz(x, y, z) * kPi * x * x * u;
            }
        }
    }
    return sum;
}

SymbolicVolume covering_integral(bool halved_u1_range) {
    // (T_g/3 or T_g/6) * Vol(E6)/Vol(SO8) * (1/(2 sqrt2)) * I
    SymbolicVolume u1 = circle_volume() / SymbolicVolume(halved_u1_range ? 6 : 3, 0, 0, 0);
    SymbolicVolume ratio = macdonald_volume(descriptor_e6()) / macdonald_volume(descriptor_so8());
    SymbolicVolume jac(Rational(1, 2), -1, 0, 0); // 1/(2 sqrt2)
    Rational i999 = integral_closed(9, 9, 9) * 8;
    return u1 * ratio * jac * SymbolicVolume(i999, 0, 0, 0);
}

Rational covering_check(bool halved_u1_range) {
    SymbolicVolume q = covering_integral(halved_u1_range) / volume_e7_mod_u();
    return q.as_rational();
}

} // namespace e7f
