#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "e7forge/rep133.hpp"
#include "e7forge/rep56.hpp"

using namespace e7f;

namespace {

const F4E6Basis& fb() {
    static const JordanBasis jb;
    static const F4E6Basis f(jb);
    return f;
}

const GeneratorSet& y56() {
    static const GeneratorSet g = build_56_tits(fb());
    return g;
}

} // namespace

TEST_CASE("orthonormality and antihermiticity") {
    double worst = 0, ah = 0;
    for (int a = 0; a < 133; ++a) {
        ah = std::max(ah, max_abs(Mat(y56().mats[static_cast<std::size_t>(a)] +
                                      y56().mats[static_cast<std::size_t>(a)].adjoint())));
        for (int b = a; b < 133; ++b) {
            double target = (a == b) ? 1.0 : 0.0;
            double v = -(y56().mats[static_cast<std::size_t>(a)] *
                         y56().mats[static_cast<std::size_t>(b)])
                            .trace()
                            .real() /
                       12.0;
            worst = std::max(worst, std::abs(v - target));
        }
    }
    CHECK(worst < 1e-12);
    CHECK(ah == 0.0);

    // Exact spot check of a few inner products.
    for (int a : {0, 1, 55, 72, 81, 98, 120}) {
        ExactScalar t;
        t = sparse_trace_product(y56().exact[static_cast<std::size_t>(a)],
                                 y56().exact[static_cast<std::size_t>(a)]);
        CHECK(t == ExactScalar(-12));
    }
}

TEST_CASE("displayed block values of Y2") {
    // Block (1,3) of Y2 is -(i/2) sqrt(2/3) Itilde.
    const Mat& y2 = y56().mats[1];
    Cplx expect(0, -0.5 * std::sqrt(2.0 / 3.0));
    for (int r = 0; r < 26; ++r) CHECK(std::abs(y2(r, 28 + r) - expect) < 1e-15);
    CHECK(std::abs(y2(26, 54) - Cplx(0, std::sqrt(2.0 / 3.0))) < 1e-15);
    // corner vectors carry i sqrt2/2 at the j27 slot
    CHECK(std::abs(y2(26, 55) - Cplx(0, std::sqrt(2.0) / 2)) < 1e-15);
    CHECK(std::abs(y2(27, 54) - Cplx(0, std::sqrt(2.0) / 2)) < 1e-15);
}

TEST_CASE("structure constants agree with the adjoint set") {
    GeneratorSet m = build_adjoint_133(fb(), true);
    IsoReport rep = verify_iso(y56(), m, fb(), 1e-9);
    CHECK(rep.worst_structure_diff < 1e-12);
    CHECK(rep.closure_residual_56 < 1e-12);
    CHECK(rep.closure_residual_133 < 1e-12);
    CHECK(rep.exact_oracle_diff < 1e-12);
}

TEST_CASE("center, omega and periods") {
    GeneratorSet m = build_adjoint_133(fb(), true);
    CenterPeriodReport cp = center_and_periods(y56(), m, 1e-10);
    CHECK(cp.pass);
    CHECK(cp.minus_identity_residual < 1e-10);
    CHECK(cp.adjoint_identity_residual < 1e-10);
    CHECK(cp.omega_cubed_residual < 1e-10);
    CHECK(cp.omega_equivalence_residual < 1e-8);
    CHECK(cp.omega_nontrivial_gap > 0.5);
    CHECK(cp.worst_period_residual < 1e-10);
    CHECK(cp.exceptional_4pi_gap > 0.5);
    // exp(4 pi Y10) = I (a generic 4pi period)
    bool found = false;
    for (const auto& p : cp.periods)
        if (p.index == 10) {
            CHECK(p.residual < 1e-10);
            CHECK(p.period == doctest::Approx(4 * 3.14159265358979323846));
            found = true;
        }
    CHECK(found);
}

TEST_CASE("split construction invariants") {
    SplitSet sp = build_56_split();
    CHECK(sp.set.count() == 133);
    CHECK(static_cast<int>(sp.tetra.size()) == 35);
    CHECK(static_cast<int>(sp.pairs.size()) == 28);

    // The first 63 are antisymmetric (real), the rest symmetric times i.
    for (int k = 0; k < 63; ++k) {
        const Mat& m = sp.set.mats[static_cast<std::size_t>(k)];
        CHECK(max_abs(Mat(m + m.transpose())) < 1e-15);
        CHECK(max_abs(Mat(m.imag())) == 0.0);
    }
    for (int k = 63; k < 133; ++k) {
        const Mat& m = sp.set.mats[static_cast<std::size_t>(k)];
        CHECK(max_abs(Mat(m - m.transpose())) < 1e-15);
        CHECK(max_abs(Mat(m.real())) == 0.0);
    }

    // lambda^t_I = eps_{I,Itilde} lambda_Itilde, reconstructed from the
    // stored combinations: cA and cS for the same I.
    auto lam = [&](int idx) {
        // lambda_I = sqrt3 (cA - i cS)
        return Mat(std::sqrt(3.0) *
                   (sp.set.mats[static_cast<std::size_t>(28 + idx)] -
                    Cplx(0, 1) * sp.set.mats[static_cast<std::size_t>(98 + idx)]));
    };
    auto lamt = [&](int idx) {
        // eps lambda_Itilde = sqrt3 (-cA - i cS)
        return Mat(std::sqrt(3.0) *
                   (-sp.set.mats[static_cast<std::size_t>(28 + idx)] -
                    Cplx(0, 1) * sp.set.mats[static_cast<std::size_t>(98 + idx)]));
    };
    for (int idx : {0, 7, 20, 34}) {
        Mat l = lam(idx);
        CHECK(max_abs(Mat(l.transpose() - lamt(idx))) < 1e-12);
        // top-right block is the epsilon tensor: check one known entry of
        // lambda_{1234}: epsilon_{12345678} = +1 maps (5,6)^ to (7,8)^.
        if (idx == 0) {
            auto pair_index = [](int i, int j) { return (i * (15 - i)) / 2 + (j - i - 1); };
            CHECK(std::abs(l(pair_index(4, 5), 28 + pair_index(6, 7)) - Cplx(1, 0)) < 1e-12);
            CHECK(std::abs(l(28 + pair_index(0, 1), pair_index(2, 3)) - Cplx(1, 0)) < 1e-12);
        }
    }

    // su(8) part closes; the symmetric part is a Z2 grading.
    StructureConstants sc = structure_constants(sp.set);
    double mixed = 0, even_into_odd = 0;
    for (int a = 0; a < 63; ++a)
        for (int b = 0; b < 63; ++b)
            for (int C = 63; C < 133; ++C) mixed = std::max(mixed, std::abs(sc.at(a, b, C)));
    for (int a = 63; a < 133; ++a)
        for (int b = 63; b < 133; ++b)
            for (int C = 63; C < 133; ++C)
                even_into_odd = std::max(even_into_odd, std::abs(sc.at(a, b, C)));
    CHECK(mixed < 1e-11);
    CHECK(even_into_odd < 1e-11);
}

TEST_CASE("evi basis invariants") {
    EviSet evi = build_basis_evi(y56(), fb());
    CHECK(evi.set.count() == 133);
    CHECK(evi.set.has_exact());

    // Orthonormal under -tr/12.
    double worst = 0;
    for (int a = 0; a < 133; ++a)
        for (int b = a; b < 133; ++b) {
            double target = (a == b) ? 1.0 : 0.0;
            double v = -(evi.set.mats[static_cast<std::size_t>(a)] *
                         evi.set.mats[static_cast<std::size_t>(b)])
                            .trace()
                            .real() /
                       12.0;
            worst = std::max(worst, std::abs(v - target));
        }
    CHECK(worst < 1e-12);

    // su(2) factor: [L67,L68] proportional to L69 cyclically; commutes with
    // the spin(12) block.
    const Mat &l67 = evi.set.mats[66], &l68 = evi.set.mats[67], &l69 = evi.set.mats[68];
    double c = -(comm(l67, l68) * l69).trace().real() / 12.0;
    CHECK(std::abs(c) > 0.1);
    CHECK(max_abs(Mat(comm(l67, l68) - c * l69)) < 1e-12);
    CHECK(max_abs(Mat(comm(l68, l69) - c * l67)) < 1e-12);
    CHECK(max_abs(Mat(comm(l69, l67) - c * l68)) < 1e-12);
    double su2_spin12 = 0;
    for (int s = 66; s < 69; ++s)
        for (int b = 0; b < 66; ++b)
            su2_spin12 = std::max(su2_spin12, max_abs(comm(evi.set.mats[static_cast<std::size_t>(s)],
                                                           evi.set.mats[static_cast<std::size_t>(b)])));
    CHECK(su2_spin12 < 1e-12);

    // The compact 69 close; the torus slots commute.
    GeneratorSet u5;
    u5.rep_dim = 56;
    for (int k = 0; k < 69; ++k) u5.mats.push_back(evi.set.mats[static_cast<std::size_t>(k)]);
    u5.labels.assign(69, "");
    CHECK_NOTHROW(structure_constants(u5, 1e-10));
    for (int a : evi.h4)
        for (int b : evi.h4)
            CHECK(max_abs(comm(evi.set.mats[static_cast<std::size_t>(a - 1)],
                               evi.set.mats[static_cast<std::size_t>(b - 1)])) < 1e-14);
}
