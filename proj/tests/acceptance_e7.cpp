// Acceptance suite: every contract criterion is exercised at its stated
// tolerance and reported as a single pass/fail line.  The process exits
// nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>

#include "e7forge/tits.hpp"
#include "e7forge/verify.hpp"

using namespace e7f;

namespace {

int failures = 0;

void line(int criterion, const std::string& text, bool pass, double worst, double tol) {
    std::printf("[%s] criterion %2d: %s (worst %.3e, tol %.3e)\n", pass ? "PASS" : "FAIL",
                criterion, text.c_str(), worst, tol);
    if (!pass) ++failures;
}

void line_flag(int criterion, const std::string& text, bool pass) {
    std::printf("[%s] criterion %2d: %s\n", pass ? "PASS" : "FAIL", criterion, text.c_str());
    if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

int main() {
    VerifyContext cx;

    // 1. Structure-constant agreement between the 56 and the 133.
    {
        auto t0 = std::chrono::steady_clock::now();
        double diff = 0;
        for (std::size_t k = 0; k < cx.c56().c.size(); ++k)
            diff = std::max(diff, std::abs(cx.c56().c[k] - cx.c133().c[k]));
        double dt = seconds_since(t0);
        line(1, "structure constants of the 56 and the 133 agree entrywise", diff < 1e-9, diff,
             1e-9);
        line_flag(1, "runtime below five minutes (" + std::to_string(dt) + " s)", dt < 300.0);
    }

    // 2. Jacobi suite with the coefficient scan control.
    {
        auto triples = jacobi_triples(kTitsDim, 100000, 10, 20240817);
        StructureConstants sc;
        sc.n = kTitsDim;
        sc.c = tits_constants_with_coefficients(cx.f4e6(), 0.25, 1.0, 0.5);
        double resid = jacobi_residual(sc, triples);
        line(2, "Jacobi residual over 100000 seeded triples plus the low-index block",
             resid < 1e-9, resid, 1e-9);
        sc.c = tits_constants_with_coefficients(cx.f4e6(), 1.0, 4.0, 1.01);
        double control = jacobi_residual(sc, triples);
        line_flag(2, "perturbed coefficient (gamma -> 1.01) fails the identity",
                  control > 1e-3);
    }

    // 3. Killing signatures of the four real forms.
    {
        auto s1 = killing_signature(cx.m133());
        line_flag(3, "compact signature (0,133)", s1 == std::make_pair(0, 133));
        auto s2 = killing_signature(weyl_trick(cx.split().set, cx.split().su8_indices()));
        line_flag(3, "su(8) Weyl trick signature (70,63)", s2 == std::make_pair(70, 63));
        auto s3 = killing_signature(weyl_trick(cx.evi().set, cx.evi().u5_indices()));
        line_flag(3, "spin(12)+su(2) Weyl trick signature (64,69)", s3 == std::make_pair(64, 69));
        std::vector<int> e6u1{0};
        for (int k = 3; k <= 80; ++k) e6u1.push_back(k);
        auto s4 = killing_signature(weyl_trick(cx.y56(), e6u1));
        line_flag(3, "E6+u(1) Weyl trick signature (54,79)", s4 == std::make_pair(54, 79));
    }

    // 4. Center and periods.
    {
        CenterPeriodReport cp = center_and_periods(cx.y56(), cx.m133(), 1e-10);
        line(4, "exp(sqrt6 pi Y1) = -I56", cp.minus_identity_residual < 1e-10,
             cp.minus_identity_residual, 1e-10);
        line(4, "exp(sqrt6 pi M1) = +I133", cp.adjoint_identity_residual < 1e-10,
             cp.adjoint_identity_residual, 1e-10);
        line(4, "omega^3 = I56", cp.omega_cubed_residual < 1e-10, cp.omega_cubed_residual,
             1e-10);
        line(4, "one-parameter periods: 4pi generically, 4pi sqrt3 at 73/99/125",
             cp.worst_period_residual < 1e-10 && cp.exceptional_4pi_gap > 0.5,
             cp.worst_period_residual, 1e-10);
    }

    // 5. Orthonormality of the 56-dimensional basis.
    {
        double worst = 0;
        for (int a = 0; a < 133; ++a)
            for (int b = a; b < 133; ++b) {
                double target = (a == b) ? 1.0 : 0.0;
                double v = -(cx.y56().mats[static_cast<std::size_t>(a)] *
                             cx.y56().mats[static_cast<std::size_t>(b)])
                                .trace()
                                .real() /
                           12.0;
                worst = std::max(worst, std::abs(v - target));
            }
        line(5, "-tr(Y_A Y_B)/12 = delta over all pairs", worst < 1e-12, worst, 1e-12);
    }

    // 6. Split root system.
    {
        E7ClassifyReport rep = classify_e7(cx.split_roots(), cx.split());
        bool pass = rep.root_count == 126 && rep.positive_count == 63 &&
                    rep.worst_norm2_deviation < 1e-9 && rep.simple_roots_match &&
                    rep.cartan_matrix_is_e7 &&
                    rep.longest_coefficients == std::vector<int>({2, 2, 3, 4, 3, 2, 1});
        line(6, "126 roots of squared norm 2, 63 positive, named simple system, "
                "longest root (2,2,3,4,3,2,1)",
             pass, rep.worst_norm2_deviation, 1e-9);
    }

    // 7. Restricted roots and torus commutant.
    {
        const EviRootReport& er = cx.evi_roots();
        CommutantReport cr = commutant_evi(cx.evi());
        bool roots_ok = er.long_positive == 12 && er.short_positive == 12 &&
                        er.multiplicity_sum == 60 && er.f4_cartan &&
                        er.longest_coefficients == std::vector<int>({4, 3, 2, 2});
        line_flag(7, "restricted system of type F4: 24 positive roots, 12x(m=1) + 12x(m=4), sum 60",
                  roots_ok);
        bool comm_ok = cr.dim == 9 && cr.killing_negative_definite &&
                       cr.minimal_ideal_dims == std::vector<int>({3, 3, 3}) &&
                       cr.m_membership_residual < 1e-10;
        line_flag(7, "torus commutant of dimension 9 splitting as ideals 6+3", comm_ok);
    }

    // 8. Exact volumes and covering factor.
    {
        VerificationReport rep = verify_volumes(cx);
        bool vol_ok = true;
        for (const auto& c : rep.checks)
            if (c.name.rfind("vol_", 0) == 0 || c.name.rfind("covering", 0) == 0)
                vol_ok = vol_ok && c.pass;
        line_flag(8, "five exact volumes reproduced; covering factor 2, halved factor 1", vol_ok);
    }

    // 9. Integral values and quadratures.
    {
        mpz_class den = mpz_class(243) * 5 * 11 * 169 * 17;
        Rational want(2, den);
        want.canonicalize();
        Rational got = integral_closed(9, 9, 9) * 8;
        got.canonicalize();
        line_flag(9, "8 I(9,9,9) = 2/(3^5·5·11·13^2·17) exactly", got == want);

        auto t0 = std::chrono::steady_clock::now();
        double exact = integral_closed(9, 9, 9).get_d();
        double quad = integral_quadrature(9, 9, 9, 64);
        double rel = std::abs(quad - exact) / exact;
        double dt = seconds_since(t0);
        line(9, "Gauss-Legendre n=64 agrees with the closed form", rel < 1e-6 && dt < 60.0, rel,
             1e-6);

        double w = w_integral_quadrature(48);
        double expected = Rational(integral_closed(9, 9, 9) * 8).get_d();
        double wrel = std::abs(w - expected) / expected;
        line(9, "numerical integral of the torus weight over the chained range matches I",
             wrel < 1e-4, wrel, 1e-4);
    }

    // 10. Density-determinant oracle.
    {
        VerificationReport rep = verify_euler(cx, 42);
        for (const auto& c : rep.checks)
            if (c.name == "density_determinant")
                line(10, "split weight equals the projected-adjoint determinant at 100 points",
                     c.pass, c.residual, c.tolerance);
        // 11. Haar sampler (records from the same suite).
        double unit = -1;
        bool mean_ok = false, det_ok = false;
        for (const auto& c : rep.checks) {
            if (c.name == "haar_unitarity") unit = c.residual;
            if (c.name == "haar_mean_trace") mean_ok = c.pass;
            if (c.name == "haar_determinism") det_ok = c.pass;
        }
        line(11, "1000 Haar samples unitary", unit < 1e-8 && unit >= 0, unit, 1e-8);
        line_flag(11, "mean trace within three standard errors; equal seeds reproduce",
                  mean_ok && det_ok);
    }

    // 12. Derivation-extension identity suite.
    {
        VerificationReport rep = verify_structure(cx, 1e-9);
        bool ok = true;
        double cub = 0;
        for (const auto& c : rep.checks) {
            if (c.name == "c_antisymmetric" || c.name == "relaz" || c.name == "eq27" ||
                c.name == "a_total_symmetry")
                ok = ok && c.pass;
            if (c.name == "cubic_invariance") {
                ok = ok && c.pass;
                cub = c.residual;
            }
        }
        line(12, "antisymmetry, extension relations, A-tensor symmetry, cubic invariance", ok,
             cub, 1e-12);
    }

    std::printf("%s: %d failing criterion line(s)\n", failures ? "FAILURE" : "SUCCESS", failures);
    return failures ? 1 : 0;
}
