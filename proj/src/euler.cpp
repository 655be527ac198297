#include "e7forge/euler.hpp"

#include <cmath>

#include "e7forge/errors.hpp"

namespace e7f {

namespace {

constexpr double kPi = 3.14159265358979323846;

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}

} // namespace

double EulerChart::density(const std::vector<double>& y) const {
    double p = 1.0;
    for (std::size_t k = 0; k < sine_forms.size(); ++k) {
        double s = std::sin(dot(sine_forms[k], y));
        double a = std::abs(s);
        for (int e = 0; e < sine_exponents[k]; ++e) p *= a;
    }
    return p;
}

bool EulerChart::in_range(const std::vector<double>& y) const {
    if (construction == Construction::Tits) {
        auto [x, yy, z] = tits_to_xyz(y);
        return x > 0 && x < kPi && yy > 0 && yy < x && z > 0 && z < yy;
    }
    for (const auto& f : ineq_forms) {
        double v = dot(f, y);
        if (v <= 0 || v >= kPi) return false;
    }
    return true;
}

bool EulerChart::in_closure(const std::vector<double>& y, double tol) const {
    if (construction == Construction::Tits) {
        auto [x, yy, z] = tits_to_xyz(y);
        return x >= -tol && x <= kPi + tol && yy >= -tol && yy <= x + tol && z >= -tol &&
               z <= yy + tol;
    }
    for (const auto& f : ineq_forms) {
        double v = dot(f, y);
        if (v < -tol || v > kPi + tol) return false;
    }
    return true;
}

std::array<double, 3> tits_to_xyz(const std::vector<double>& c) {
    double x1 = c[0], x2 = c[1], x3 = c[2];
    double x = (std::sqrt(6.0) * x1 - 2.0 * std::sqrt(3.0) * x3) / 3.0;
    double y = (std::sqrt(3.0) * x2 + std::sqrt(2.0) * x1 + x3) / std::sqrt(3.0);
    double z = (std::sqrt(3.0) * x2 - std::sqrt(2.0) * x1 - x3) / std::sqrt(3.0);
    return {x, y, z};
}

std::vector<double> tits_from_xyz(const std::array<double, 3>& w) {
    double x = w[0], y = w[1], z = w[2];
    double x52 = (x + y - z) / std::sqrt(6.0);
    double x53 = (y + z) / 2.0;
    double x54 = -x / std::sqrt(3.0) + (y - z) / (2.0 * std::sqrt(3.0));
    return {x52, x53, x54};
}

EulerChart chart_tits(const GeneratorSet& y56) {
    EulerChart ch;
    ch.construction = Construction::Tits;
    ch.coord_names = {"x52", "x53", "x54"};
    ch.torus_generators = {y56.mats[1], y56.mats[81], y56.mats[98]};

    const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0), s6 = std::sqrt(6.0);
    ch.sine_forms = {
        {s2 / s3, 1.0, 1.0 / s3},         // (sqrt3 x2 + sqrt2 x1 + x3)/sqrt3
        {-s2 / s3, 1.0, -1.0 / s3},       // (sqrt3 x2 - sqrt2 x1 - x3)/sqrt3
        {s6 / 3.0, 0.0, -2.0 * s3 / 3.0}, // (sqrt6 x1 - 2 sqrt3 x3)/3
        {s2 / s3, 0.5, -0.5 / s3},        // (sqrt3 x2 + 2 sqrt2 x1 - x3)/(2 sqrt3)
        {-s2 / s3, 0.5, 0.5 / s3},        // (sqrt3 x2 - 2 sqrt2 x1 + x3)/(2 sqrt3)
        {0.0, 0.5, -s3 / 2.0},            // (x2 - sqrt3 x3)/2
        {0.0, 0.5, s3 / 2.0},             // (x2 + sqrt3 x3)/2
        {s2 / s3, 0.0, 1.0 / s3},         // (sqrt2 x1 + x3)/sqrt3
        {0.0, 1.0, 0.0},                  // x2
    };
    ch.sine_exponents = {1, 1, 1, 8, 8, 8, 8, 8, 8};
    ch.interior = tits_from_xyz({0.75 * kPi, 0.5 * kPi, 0.25 * kPi});
    return ch;
}

EulerChart chart_split(const SplitSet& split, const RootDatum& rd) {
    EulerChart ch;
    ch.construction = Construction::Split;
    for (int a = 1; a <= 7; ++a) ch.coord_names.push_back("y" + std::to_string(a));
    // D_alpha as displayed divided by sqrt2; the stored generators carry the
    // overall 1/sqrt12.
    for (int a = 0; a < 7; ++a)
        ch.torus_generators.push_back(std::sqrt(6.0) * split.set.mats[static_cast<std::size_t>(63 + a)]);

    for (std::size_t r = 0; r < rd.roots.size(); ++r) {
        if (!rd.positive[r]) continue;
        ch.sine_forms.push_back(rd.roots[r]);
        ch.sine_exponents.push_back(rd.multiplicities[r]);
    }

    std::vector<int> simple = rd.simple_indices();
    std::vector<std::vector<double>> named(7);
    // match the named order via classify (positions of the seven covectors)
    E7ClassifyReport rep = classify_e7(rd, split);
    (void)rep;
    // the classify call guarantees the named covectors are the simple ones;
    // rebuild them directly for the inequality table
    auto comp_pair = [&](int k, int l) {
        std::vector<double> v(7);
        for (int al = 0; al < 7; ++al)
            v[static_cast<std::size_t>(al)] =
                (split.d_diag[static_cast<std::size_t>(al)][static_cast<std::size_t>(k - 1)].embed().real() -
                 split.d_diag[static_cast<std::size_t>(al)][static_cast<std::size_t>(l - 1)].embed().real()) /
                std::sqrt(2.0);
        return v;
    };
    ch.ineq_forms.push_back(comp_pair(4, 5));
    ch.ineq_forms.push_back(comp_pair(1, 2));
    ch.ineq_forms.push_back(comp_pair(3, 4));
    ch.ineq_forms.push_back(comp_pair(2, 3));
    {
        std::vector<double> v(7);
        for (int al = 0; al < 7; ++al) {
            double s = 0;
            for (int t : {3, 4, 5, 8})
                s += split.d_diag[static_cast<std::size_t>(al)][static_cast<std::size_t>(t - 1)].embed().real();
            v[static_cast<std::size_t>(al)] = s / std::sqrt(2.0);
        }
        ch.ineq_forms.push_back(v);
    }
    ch.ineq_forms.push_back(comp_pair(7, 8));
    ch.ineq_forms.push_back(comp_pair(6, 7));
    // longest root sqrt2 L7
    std::vector<double> l7(7, 0.0);
    l7[6] = std::sqrt(2.0);
    ch.ineq_forms.push_back(l7);

    // Interior point: simple-root values pi/(9 m_i) where m are the longest
    // root coefficients; the longest form then evaluates to 7 pi / 9.
    {
        const int m[7] = {2, 2, 3, 4, 3, 2, 1};
        Eigen::MatrixXd S(7, 7);
        Eigen::VectorXd u(7);
        for (int i = 0; i < 7; ++i) {
            u(i) = kPi / (9.0 * m[i]);
            for (int k = 0; k < 7; ++k) S(i, k) = ch.ineq_forms[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
        }
        Eigen::VectorXd y = S.colPivHouseholderQr().solve(u);
        ch.interior.assign(7, 0.0);
        for (int k = 0; k < 7; ++k) ch.interior[static_cast<std::size_t>(k)] = y(k);
        if (!ch.in_range(ch.interior))
            throw Error(ErrorKind::OutOfRange, "split interior point construction failed");
    }
    return ch;
}

EulerChart chart_evi(const EviSet& evi, const EviRootReport& er) {
    EulerChart ch;
    ch.construction = Construction::Evi;
    for (int a = 1; a <= 4; ++a) ch.coord_names.push_back("y" + std::to_string(a));
    // Rotated torus generators: beta'(y) = (R beta)(y).
    for (int j = 0; j < 4; ++j) {
        Mat t = Mat::Zero(56, 56);
        for (int i = 0; i < 4; ++i)
            t += er.frame[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] *
                 evi.set.mats[static_cast<std::size_t>(evi.h4[static_cast<std::size_t>(i)] - 1)];
        ch.torus_generators.push_back(t);
    }
    for (std::size_t r = 0; r < er.datum.roots.size(); ++r) {
        if (!er.datum.positive[r]) continue;
        std::vector<double> rot(4, 0.0);
        for (int i = 0; i < 4; ++i)
            for (int k = 0; k < 4; ++k)
                rot[static_cast<std::size_t>(i)] +=
                    er.frame[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                    er.datum.roots[r][static_cast<std::size_t>(k)];
        ch.sine_forms.push_back(rot);
        ch.sine_exponents.push_back(er.datum.multiplicities[r]);
    }
    ch.ineq_forms = {{0.5, -0.5, -0.5, 0.5}, {0, 0, 1, -1}, {1, 0, 0, 0}, {0, 1, -1, 0},
                     {0, 0, 1, 1}};

    // Interior point of the displayed cell: the first four forms at
    // (pi/30, pi/30, pi/3, pi/30) leave the fifth at 11 pi / 30.
    {
        Eigen::MatrixXd S(4, 4);
        Eigen::VectorXd u(4);
        double targets[4] = {kPi / 30.0, kPi / 30.0, kPi / 3.0, kPi / 30.0};
        for (int i = 0; i < 4; ++i) {
            u(i) = targets[i];
            for (int k = 0; k < 4; ++k) S(i, k) = ch.ineq_forms[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
        }
        Eigen::VectorXd y = S.colPivHouseholderQr().solve(u);
        ch.interior.assign(4, 0.0);
        for (int k = 0; k < 4; ++k) ch.interior[static_cast<std::size_t>(k)] = y(k);
        if (!ch.in_range(ch.interior))
            throw Error(ErrorKind::OutOfRange, "evi interior point construction failed");
    }
    return ch;
}

Mat assemble(const Mat& b, const std::vector<double>& coords, const Mat& u,
             const EulerChart& chart) {
    if (coords.size() != chart.torus_generators.size())
        throw Error(ErrorKind::DimensionMismatch, "coordinate count");
    if (!chart.in_closure(coords)) throw Error(ErrorKind::OutOfRange, "torus coordinates");
    if (unitarity_residual(b) > 1e-8 || unitarity_residual(u) > 1e-8)
        throw Error(ErrorKind::NotUnitary, "subgroup factors");
    Mat v = Mat::Zero(56, 56);
    for (std::size_t k = 0; k < coords.size(); ++k)
        v += coords[k] * chart.torus_generators[k];
    return b * expm(v) * u;
}

Mat su8_embed(const Mat& u8) {
    if (u8.rows() != 8 || u8.cols() != 8) throw Error(ErrorKind::DimensionMismatch, "need 8x8");
    if (unitarity_residual(u8) > 1e-10) throw Error(ErrorKind::NotUnitary, "u8 not unitary");
    if (std::abs(u8.determinant() - Cplx(1, 0)) > 1e-10)
        throw Error(ErrorKind::NotUnitary, "u8 determinant not one");

    auto pair_index = [](int i, int j) { return (i * (15 - i)) / 2 + (j - i - 1); };
    Mat g = Mat::Zero(56, 56);
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j)
            for (int k = 0; k < 8; ++k)
                for (int l = k + 1; l < 8; ++l) {
                    Cplx w = u8(i, k) * u8(j, l) - u8(i, l) * u8(j, k);
                    g(pair_index(i, j), pair_index(k, l)) = w;
                    g(28 + pair_index(i, j), 28 + pair_index(k, l)) = std::conj(w);
                }
    return g;
}

Mat su8_algebra_embed(const Mat& x8) {
    auto pair_index = [](int i, int j) { return (i * (15 - i)) / 2 + (j - i - 1); };
    Mat g = Mat::Zero(56, 56);
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j)
            for (int k = 0; k < 8; ++k)
                for (int l = k + 1; l < 8; ++l) {
                    Cplx w = 0;
                    if (j == l) w += x8(i, k);
                    if (i == k) w += x8(j, l);
                    if (j == k) w -= x8(i, l);
                    if (i == l) w -= x8(j, k);
                    g(pair_index(i, j), pair_index(k, l)) = w;
                    g(28 + pair_index(i, j), 28 + pair_index(k, l)) = std::conj(w);
                }
    return g;
}

double split_density_determinant(const SplitSet& split, const EulerChart& chart,
                                 const std::vector<double>& y) {
    Mat v = Mat::Zero(56, 56);
    for (std::size_t k = 0; k < y.size(); ++k) v += y[k] * chart.torus_generators[k];
    Mat g = expm(-v);
    Mat gi = g.adjoint();

    // u-basis: the 63 antisymmetric generators; t-basis: the 63 symmetric
    // generators other than the torus; both orthonormal under -tr(XY)/2.
    Eigen::MatrixXd m(63, 63);
    for (int c = 0; c < 63; ++c) {
        Mat ad = g * split.set.mats[static_cast<std::size_t>(c)] * gi;
        for (int r = 0; r < 63; ++r) {
            Cplx t = -(ad * split.set.mats[static_cast<std::size_t>(70 + r)]).trace() / 2.0;
            m(r, c) = t.real();
        }
    }
    return std::abs(m.partialPivLu().determinant());
}

SplitHaarSampler::SplitHaarSampler(const SplitSet& split, const RootDatum& rd) {
    chart_ = chart_split(split, rd);

    std::vector<int> simple = rd.simple_indices();
    // order the simple roots to match the inequality table rows 0..6
    std::vector<int> order;
    for (int r = 0; r < 7; ++r) {
        int found = -1;
        for (int i : simple) {
            double d = 0;
            for (int k = 0; k < 7; ++k)
                d = std::max(d, std::abs(rd.roots[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] -
                                         chart_.ineq_forms[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)]));
            if (d < 1e-7) found = i;
        }
        if (found < 0) throw Error(ErrorKind::WrongType, "simple root order mismatch");
        order.push_back(found);
    }
    for (std::size_t r = 0; r < rd.roots.size(); ++r) {
        if (!rd.positive[r]) continue;
        root_coeffs_.push_back(rd.simple_coefficients(rd.roots[r], order));
    }
    int hi = rd.highest_root_index(order);
    mcoef_ = rd.simple_coefficients(rd.roots[static_cast<std::size_t>(hi)], order);

    // u -> y: solve S^T y = u where S columns are the simple covectors.
    Eigen::MatrixXd S(7, 7);
    for (int i = 0; i < 7; ++i)
        for (int k = 0; k < 7; ++k)
            S(i, k) = rd.roots[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])]
                              [static_cast<std::size_t>(k)];
    simple_to_y_ = S.inverse();

    for (int a = 0; a < 7; ++a) {
        const Mat& t = chart_.torus_generators[static_cast<std::size_t>(a)];
        if ((t - Mat(t.diagonal().asDiagonal())).cwiseAbs().maxCoeff() > 1e-14)
            throw Error(ErrorKind::WrongType, "split torus generators must be diagonal");
        torus_diag_[a] = t.diagonal();
    }

    // Envelope constant: deterministic search for sup f/q over the
    // simplex, then a 1.5x safety margin (violations abort at run time).
    Prng rng(0xE7F0A9u);
    double best = 0;
    long trials = 20000;
    for (long t = 0; t < trials; ++t) {
        double w[8], tot = 0;
        for (auto& v : w) {
            v = rng.gamma2();
            tot += v;
        }
        std::vector<double> u(7);
        double ratio = 1.0;
        for (int i = 0; i < 7; ++i) {
            u[static_cast<std::size_t>(i)] = kPi * (w[i] / tot) / mcoef_[static_cast<std::size_t>(i)];
        }
        double q = 1.0;
        for (int i = 0; i < 8; ++i) q *= w[i] / tot;
        double f = 1.0;
        for (const auto& c : root_coeffs_) {
            double arg = 0;
            for (int i = 0; i < 7; ++i) arg += c[static_cast<std::size_t>(i)] * u[static_cast<std::size_t>(i)];
            f *= std::abs(std::sin(arg));
        }
        ratio = f / q;
        best = std::max(best, ratio);
    }
    envelope_ = 1.5 * best;
}

std::vector<double> SplitHaarSampler::draw_torus(Prng& rng, long& proposals) const {
    for (;;) {
        ++proposals;
        double w[8], tot = 0;
        for (auto& v : w) {
            v = rng.gamma2();
            tot += v;
        }
        std::vector<double> u(7);
        double q = 1.0;
        for (int i = 0; i < 8; ++i) q *= w[i] / tot;
        for (int i = 0; i < 7; ++i)
            u[static_cast<std::size_t>(i)] = kPi * (w[i] / tot) / mcoef_[static_cast<std::size_t>(i)];
        double f = 1.0;
        for (const auto& c : root_coeffs_) {
            double arg = 0;
            for (int i = 0; i < 7; ++i) arg += c[static_cast<std::size_t>(i)] * u[static_cast<std::size_t>(i)];
            f *= std::abs(std::sin(arg));
        }
        double ratio = f / q;
        if (ratio > envelope_)
            throw Error(ErrorKind::OutOfRange, "rejection envelope violated; rebuild with a larger margin");
        if (rng.uniform() * envelope_ < ratio) {
            // map u (simple-root values) to the D-frame coordinates
            Eigen::VectorXd uv(7);
            for (int i = 0; i < 7; ++i) uv(i) = u[static_cast<std::size_t>(i)];
            Eigen::VectorXd yv = simple_to_y_ * uv;
            std::vector<double> out(7);
            for (int i = 0; i < 7; ++i) out[static_cast<std::size_t>(i)] = yv(i);
            return out;
        }
    }
}

Mat SplitHaarSampler::su8_draw(Prng& rng) const {
    Mat z(8, 8);
    for (int r = 0; r < 8; ++r)
        for (int c = 0; c < 8; ++c) z(r, c) = Cplx(rng.gaussian(), rng.gaussian());
    Eigen::HouseholderQR<Mat> qr(z);
    Mat q = qr.householderQ();
    Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int k = 0; k < 8; ++k) {
        Cplx d = r(k, k);
        q.col(k) *= d / std::abs(d);
    }
    Cplx det = q.determinant();
    q *= std::polar(1.0, -std::arg(det) / 8.0);
    return q;
}

SplitHaarSampler::Sample SplitHaarSampler::sample(std::uint64_t seed, std::uint64_t index) const {
    Prng rng = Prng::stream(seed, index);
    Sample s;
    Mat u1 = su8_draw(rng);
    Mat u2 = su8_draw(rng);
    s.torus_coords = draw_torus(rng, s.proposals);

    Eigen::VectorXcd d = Eigen::VectorXcd::Zero(56);
    for (int a = 0; a < 7; ++a) d += s.torus_coords[static_cast<std::size_t>(a)] * torus_diag_[a];
    Mat ev = Mat::Zero(56, 56);
    for (int k = 0; k < 56; ++k) ev(k, k) = std::exp(d(k));
    s.g = su8_embed(u1) * ev * su8_embed(u2);
    return s;
}

} // namespace e7f
