#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "e7forge/euler.hpp"
#include "e7forge/prng.hpp"

using namespace e7f;

namespace {

constexpr double kPi = 3.14159265358979323846;

const F4E6Basis& fb() {
    static const JordanBasis jb;
    static const F4E6Basis f(jb);
    return f;
}

const GeneratorSet& y56() {
    static const GeneratorSet g = build_56_tits(fb());
    return g;
}

const SplitSet& split() {
    static const SplitSet s = build_56_split();
    return s;
}

const RootDatum& splitroots() {
    static const RootDatum rd = [] {
        std::vector<int> cartan;
        for (int k = 63; k < 70; ++k) cartan.push_back(k);
        return extract_roots(split().set, cartan);
    }();
    return rd;
}

} // namespace

TEST_CASE("tits chart") {
    EulerChart ch = chart_tits(y56());

    // torus generators commute
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = a + 1; b < 3; ++b)
            CHECK(max_abs(comm(ch.torus_generators[a], ch.torus_generators[b])) < 1e-14);

    // the nine-factor weight matches the product form in the chained
    // variables at random points
    Prng rng(3);
    for (int t = 0; t < 200; ++t) {
        double x = rng.uniform(0, kPi);
        double y = rng.uniform(0, x);
        double z = rng.uniform(0, y);
        auto coords = tits_from_xyz({x, y, z});
        auto s8 = [](double a) { return std::pow(std::sin(a), 8.0); };
        double xyz_form = std::sin(x) * std::sin(y) * std::sin(z) * s8(0.5 * (x - y)) *
                          s8(0.5 * (x + y)) * s8(0.5 * (x - z)) * s8(0.5 * (x + z)) *
                          s8(0.5 * (y - z)) * s8(0.5 * (y + z));
        double nine = ch.density(coords);
        CHECK(nine == doctest::Approx(xyz_form).epsilon(1e-10));
        // the substitution round-trips
        auto back = tits_to_xyz(coords);
        CHECK(back[0] == doctest::Approx(x).epsilon(1e-12));
        CHECK(back[1] == doctest::Approx(y).epsilon(1e-12));
        CHECK(back[2] == doctest::Approx(z).epsilon(1e-12));
    }

    // positive inside, zero on the y = x face
    CHECK(ch.density(tits_from_xyz({kPi / 2, kPi / 4, kPi / 8})) > 0);
    CHECK(ch.density(tits_from_xyz({1.3, 1.3, 0.4})) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(ch.in_range(tits_from_xyz({kPi / 2, kPi / 4, kPi / 8})));
    CHECK(!ch.in_range(tits_from_xyz({kPi / 2, kPi / 4 + 1.0, kPi / 8})));
}

TEST_CASE("split chart") {
    EulerChart ch = chart_split(split(), splitroots());
    CHECK(ch.sine_forms.size() == 63);
    CHECK(ch.ineq_forms.size() == 8);

    // the eighth inequality is 0 < sqrt2 y7 < pi
    for (int k = 0; k < 6; ++k) CHECK(ch.ineq_forms[7][static_cast<std::size_t>(k)] == 0.0);
    CHECK(ch.ineq_forms[7][6] == doctest::Approx(std::sqrt(2.0)));

    // zero at the origin, positive at the interior point
    std::vector<double> zero(7, 0.0);
    CHECK(ch.density(zero) == 0.0);
    CHECK(ch.density(ch.interior_point()) > 0);
    CHECK(ch.in_range(ch.interior_point()));
    CHECK(!ch.in_range(zero));

    // density equals the projected-adjoint determinant at a few points
    Prng rng(11);
    const int m[7] = {2, 2, 3, 4, 3, 2, 1};
    Eigen::MatrixXd S(7, 7);
    for (int i = 0; i < 7; ++i)
        for (int k = 0; k < 7; ++k)
            S(i, k) = ch.ineq_forms[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
    Eigen::MatrixXd Sinv = S.inverse();
    for (int t = 0; t < 5; ++t) {
        double w[8], tot = 0;
        for (auto& v : w) {
            v = rng.gamma2();
            tot += v;
        }
        Eigen::VectorXd u(7);
        for (int i = 0; i < 7; ++i) u(i) = kPi * (w[i] / tot) / m[i];
        Eigen::VectorXd y = Sinv * u;
        std::vector<double> yv(7);
        for (int k = 0; k < 7; ++k) yv[static_cast<std::size_t>(k)] = y(k);
        REQUIRE(ch.in_range(yv));
        double f = ch.density(yv);
        double d = split_density_determinant(split(), ch, yv);
        CHECK(f == doctest::Approx(d).epsilon(1e-9));
    }
}

TEST_CASE("evi chart") {
    EviSet evi = build_basis_evi(y56(), fb());
    EviRootReport er = restricted_roots_evi(evi);
    EulerChart ch = chart_evi(evi, er);
    CHECK(ch.sine_forms.size() == 24);
    CHECK(ch.ineq_forms.size() == 5);
    // the third inequality is 0 < y1 < pi
    CHECK(ch.ineq_forms[2] == std::vector<double>({1, 0, 0, 0}));

    std::vector<double> zero(4, 0.0);
    CHECK(ch.density(zero) == 0.0);
    CHECK(ch.density(ch.interior_point()) > 0);
    CHECK(ch.in_range(ch.interior_point()));

    // torus generators commute and are unit-normalized combinations
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = a + 1; b < 4; ++b)
            CHECK(max_abs(comm(ch.torus_generators[a], ch.torus_generators[b])) < 1e-12);
}

TEST_CASE("assemble") {
    EulerChart ch = chart_split(split(), splitroots());
    Mat id = Mat::Identity(56, 56);

    // identity factors and zero coordinates give the identity (the closure
    // of the polytope is accepted)
    std::vector<double> zero(7, 0.0);
    Mat g = assemble(id, zero, id, ch);
    CHECK(deviation_from_identity(g) < 1e-14);

    // coordinates outside the closed range throw
    std::vector<double> bad(7, 10.0);
    CHECK_THROWS_AS(assemble(id, bad, id, ch), Error);

    // non-unitary factor throws
    Mat notu = 2.0 * id;
    CHECK_THROWS_AS(assemble(notu, zero, id, ch), Error);

    // torus exponential is diagonal with the expected eigenphases
    auto y = ch.interior_point();
    Mat t = assemble(id, y, id, ch);
    CHECK(max_abs(Mat(t - Mat(t.diagonal().asDiagonal()))) < 1e-12);

    // a random assembly is unitary
    Prng rng(23);
    Mat z(8, 8);
    for (int r = 0; r < 8; ++r)
        for (int c = 0; c < 8; ++c) z(r, c) = Cplx(rng.gaussian(), rng.gaussian());
    Eigen::HouseholderQR<Mat> qr(z);
    Mat q = qr.householderQ();
    q *= std::polar(1.0, -std::arg(q.determinant()) / 8.0);
    Mat asm2 = assemble(su8_embed(q), y, su8_embed(q.adjoint()), ch);
    CHECK(unitarity_residual(asm2) < 1e-12);
}

TEST_CASE("su8 embedding") {
    CHECK(deviation_from_identity(su8_embed(Mat::Identity(8, 8))) == 0.0);

    // diagonal phases map to pair sums
    Prng rng(31);
    double theta[8];
    double sum = 0;
    for (int k = 0; k < 7; ++k) {
        theta[k] = rng.uniform(-1.0, 1.0);
        sum += theta[k];
    }
    theta[7] = -sum;
    Mat u = Mat::Zero(8, 8);
    for (int k = 0; k < 8; ++k) u(k, k) = std::polar(1.0, theta[k]);
    Mat g = su8_embed(u);
    auto pair_index = [](int i, int j) { return (i * (15 - i)) / 2 + (j - i - 1); };
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j) {
            CHECK(std::abs(g(pair_index(i, j), pair_index(i, j)) -
                           std::polar(1.0, theta[i] + theta[j])) < 1e-13);
            CHECK(std::abs(g(28 + pair_index(i, j), 28 + pair_index(i, j)) -
                           std::polar(1.0, -theta[i] - theta[j])) < 1e-13);
        }

    // embedding rejects non-special matrices
    Mat bad = Mat::Identity(8, 8);
    bad(0, 0) = std::polar(1.0, 0.3);
    CHECK_THROWS_AS(su8_embed(bad), Error);
}

TEST_CASE("haar sampler") {
    SplitHaarSampler sampler(split(), splitroots());

    auto s1 = sampler.sample(42, 0);
    auto s2 = sampler.sample(42, 0);
    CHECK(max_abs(Mat(s1.g - s2.g)) == 0.0);
    CHECK(s1.torus_coords == s2.torus_coords);

    auto s3 = sampler.sample(43, 0);
    CHECK(max_abs(Mat(s1.g - s3.g)) > 1e-3);

    double worst = 0;
    for (int k = 0; k < 50; ++k) {
        auto s = sampler.sample(7, static_cast<std::uint64_t>(k));
        worst = std::max(worst, unitarity_residual(s.g));
        CHECK(sampler.chart().in_range(s.torus_coords));
    }
    CHECK(worst < 1e-12);
}
