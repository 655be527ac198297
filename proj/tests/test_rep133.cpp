#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "e7forge/rep133.hpp"
#include "e7forge/tits.hpp"

using namespace e7f;

namespace {

const F4E6Basis& fb() {
    static const JordanBasis jb;
    static const F4E6Basis f(jb);
    return f;
}

const GeneratorSet& raw() {
    static const GeneratorSet g = build_adjoint_133(fb(), false);
    return g;
}

double at(const GeneratorSet& g, int A, int C, int B) {
    return g.mats[static_cast<std::size_t>(A - 1)](C - 1, B - 1).real();
}

} // namespace

TEST_CASE("quaternion block of the first three matrices") {
    // [H1,H2] = 2H3 and [H1,H3] = -2H2 appear as the 3x3 corner of M1.
    CHECK(at(raw(), 1, 3, 2) == 2.0);
    CHECK(at(raw(), 1, 2, 3) == -2.0);
    CHECK(at(raw(), 2, 1, 3) == 2.0);
    CHECK(at(raw(), 2, 3, 1) == -2.0);
    CHECK(at(raw(), 3, 2, 1) == 2.0);
    CHECK(at(raw(), 3, 1, 2) == -2.0);

    // [H_L, J_J] = 0: the derivation columns of M1..M3 vanish.
    for (int A = 1; A <= 3; ++A)
        for (int B = 4; B <= 55; ++B)
            for (int C = 1; C <= 133; ++C) CHECK(at(raw(), A, C, B) == 0.0);

    // The h-sector blocks of M1 are -2 I26 and +2 I26.
    for (int a = 1; a <= 26; ++a) {
        CHECK(at(raw(), 1, 81 + a, 107 + a) == -2.0);
        CHECK(at(raw(), 1, 107 + a, 81 + a) == 2.0);
    }
}

TEST_CASE("blocks of the mixed-sector matrices") {
    const F4E6Basis& f = fb();
    // M_{a+55}: quaternion-derivation entries tau/6 = 1/3.
    for (int a = 1; a <= 26; ++a) {
        CHECK(at(raw(), a + 55, 3, 81 + a) == doctest::Approx(1.0 / 3.0));
        CHECK(at(raw(), a + 55, 2, 107 + a) == doctest::Approx(-1.0 / 3.0));
        CHECK(at(raw(), a + 55, 81 + a, 3) == doctest::Approx(-2.0));
        CHECK(at(raw(), a + 55, 107 + a, 2) == doctest::Approx(2.0));
    }
    // (2,3) block: -alpha_{ab}^K, against the derivation expansion.
    int a = 1;
    for (int b = 1; b <= 26; ++b) {
        if (a == b) continue;
        std::vector<double> expect(52, 0.0);
        for (const auto& [K, v] : f.alpha(a, b)) expect[static_cast<std::size_t>(K - 1)] = -v.embed().real();
        for (int K = 1; K <= 52; ++K)
            CHECK(at(raw(), a + 55, K + 3, 55 + b) == doctest::Approx(expect[static_cast<std::size_t>(K - 1)]).epsilon(1e-12));
    }
    // (3,2) block: -(C_J)^c_a.
    for (int J = 1; J <= 52; ++J)
        for (int c = 1; c <= 26; ++c)
            CHECK(at(raw(), a + 55, 55 + c, J + 3) ==
                  doctest::Approx(-f.C(J).at(c - 1, a - 1).embed().real()).epsilon(1e-12));
    // (4,5)/(5,4) blocks carry the right-multiplication matrices.
    for (int c = 1; c <= 26; ++c)
        for (int b = 1; b <= 26; ++b) {
            double r = f.R(a).at(c - 1, b - 1).embed().real();
            CHECK(at(raw(), a + 55, 81 + c, 107 + b) == doctest::Approx(-r).epsilon(1e-12));
            CHECK(at(raw(), a + 55, 107 + c, 81 + b) == doctest::Approx(r).epsilon(1e-12));
        }
}

TEST_CASE("full mixed matrix against the abstract bracket") {
    // Column B of M_56 is the expansion of [Psi_56, Psi_B].
    for (int B = 1; B <= 133; ++B) {
        std::vector<double> expect(133, 0.0);
        if (B != 56)
            for (const auto& [C, v] : tits_basis_bracket(fb(), 56, B))
                expect[static_cast<std::size_t>(C - 1)] = v.embed().real();
        for (int C = 1; C <= 133; ++C)
            CHECK(at(raw(), 56, C, B) == doctest::Approx(expect[static_cast<std::size_t>(C - 1)]).epsilon(1e-12));
    }
}

TEST_CASE("closure and structure constants") {
    StructureConstants sc = structure_constants(raw(), 1e-9);
    CHECK(sc.worst_residual < 1e-10);
    // c_{12}^3 = 2 in the display normalization.
    CHECK(sc.at(0, 1, 2) == doctest::Approx(2.0));
    // [H1, J-range] = 0.
    for (int B = 3; B < 55; ++B)
        for (int C = 0; C < 133; ++C) CHECK(sc.at(0, B, C) == doctest::Approx(0.0).epsilon(1e-12));

    // Independent projection oracle with the exact Gram matrix: random
    // entries from trace projections (the basis is trace-orthogonal).
    GeneratorSet norm = build_adjoint_133(fb(), true);
    StructureConstants scn = structure_constants(norm);
    for (int t = 0; t < 20; ++t) {
        int A = (7 * t + 3) % 133, B = (11 * t + 31) % 133;
        if (A == B) continue;
        Mat br = comm(norm.mats[static_cast<std::size_t>(A)], norm.mats[static_cast<std::size_t>(B)]);
        for (int C = 0; C < 133; ++C) {
            double proj = -(br * norm.mats[static_cast<std::size_t>(C)]).trace().real() / 36.0;
            CHECK(proj == doctest::Approx(scn.at(A, B, C)).epsilon(1e-9));
        }
    }
}

TEST_CASE("normalized set is orthonormal under -tr/36") {
    GeneratorSet norm = build_adjoint_133(fb(), true);
    double worst = 0;
    for (int a = 0; a < 133; ++a)
        for (int b = a; b < 133; ++b) {
            double target = (a == b) ? 1.0 : 0.0;
            double v =
                -(norm.mats[static_cast<std::size_t>(a)] * norm.mats[static_cast<std::size_t>(b)])
                     .trace()
                     .real() /
                36.0;
            worst = std::max(worst, std::abs(v - target));
        }
    CHECK(worst < 1e-12);
}

TEST_CASE("jacobi identity of the mixed product and its coefficient scan") {
    auto residual_for = [&](double alpha, double beta, double gamma) {
        StructureConstants sc;
        sc.n = kTitsDim;
        sc.c = tits_constants_with_coefficients(fb(), alpha, beta, gamma);
        auto trs = jacobi_triples(kTitsDim, 20000, 10, 17);
        return jacobi_residual(sc, trs);
    };
    CHECK(residual_for(0.25, 1.0, 0.5) < 1e-10);
    CHECK(residual_for(1.0, 4.0, 1.0) < 1e-10);
    CHECK(residual_for(1.0, 4.0, 1.01) > 1e-3);
    CHECK(residual_for(1.0, 4.0, 0.99) > 1e-3);
}

TEST_CASE("weyl trick error path") {
    GeneratorSet norm = build_adjoint_133(fb(), true);
    // {M1, M82} does not close: [H1, h2 (x) j1] leaves the span.
    CHECK_THROWS_AS(weyl_trick(norm, {0, 81}), Error);
    // The identity case: the full index set is unchanged.
    std::vector<int> all;
    for (int k = 0; k < 133; ++k) all.push_back(k);
    GeneratorSet same = weyl_trick(norm, all);
    double diff = 0;
    for (int k = 0; k < 133; ++k)
        diff = std::max(diff, max_abs(Mat(same.mats[static_cast<std::size_t>(k)] -
                                          norm.mats[static_cast<std::size_t>(k)])));
    CHECK(diff == 0.0);
}
