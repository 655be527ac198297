#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "e7forge/measures.hpp"
#include "e7forge/prng.hpp"

using namespace e7f;

namespace {

mpz_class pw(long b, int e) {
    mpz_class v = 1;
    for (int k = 0; k < e; ++k) v *= b;
    return v;
}

} // namespace

TEST_CASE("symbol ring laws") {
    Prng rng(3);
    auto rnd = [&]() {
        return SymbolicVolume(Rational(rng.uniform_int(19) - 9, 1 + rng.uniform_int(7)),
                              rng.uniform_int(5) - 2, rng.uniform_int(5) - 2,
                              rng.uniform_int(7) - 3);
    };
    for (int t = 0; t < 500; ++t) {
        SymbolicVolume a = rnd(), b = rnd(), c = rnd();
        CHECK((a * b) == (b * a));
        CHECK(((a * b) * c) == (a * (b * c)));
        if (b.rational() != 0) {
            CHECK(((a / b) * b) == a);
            double lhs = (a / b).to_double();
            double rhs = b.to_double() == 0 ? 0 : a.to_double() / b.to_double();
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
        }
    }
    // folding: sqrt2^2 = 2
    CHECK(SymbolicVolume(1, 2, 0, 0) == SymbolicVolume(2, 0, 0, 0));
    CHECK(SymbolicVolume(1, -1, 0, 0) == SymbolicVolume(Rational(1, 2), 1, 0, 0));
}

TEST_CASE("macdonald volumes") {
    CHECK(macdonald_volume(descriptor_e7()) ==
          SymbolicVolume(Rational(pw(2, 23), pw(3, 22) * pw(5, 10) * pw(7, 6) * pw(11, 3) *
                                                  pw(13, 2) * 17),
                         1, 0, 70));
    CHECK(macdonald_volume(descriptor_e6()) ==
          SymbolicVolume(Rational(pw(2, 17), pw(3, 10) * pw(5, 5) * pw(7, 3) * 11), 0, 1, 42));
    CHECK(macdonald_volume(descriptor_so8()) ==
          SymbolicVolume(Rational(pw(2, 12), pw(3, 3) * 5), 0, 0, 16));
    CHECK(volume_u() ==
          SymbolicVolume(Rational(pw(2, 18), pw(3, 10) * pw(5, 5) * pw(7, 3) * 11), 1, 0, 43));
    CHECK(volume_e7_mod_u() ==
          SymbolicVolume(Rational(pw(2, 5), pw(3, 12) * pw(5, 5) * pw(7, 3) * pw(11, 2) *
                                                pw(13, 2) * 17),
                         0, 0, 27));
    // g/g = 1
    SymbolicVolume v = macdonald_volume(descriptor_e7());
    CHECK((v / v) == SymbolicVolume::one());
    // string rendering of the quotient volume
    CHECK(volume_e7_mod_u().to_string() == "2^5/(3^12*5^5*7^3*11^2*13^2*17) · pi^27");
}

TEST_CASE("ordered simplex integral") {
    CHECK(integral_closed(1, 1, 1) == Rational(1, 6));
    Rational i999 = integral_closed(9, 9, 9);
    Rational want(2, pw(3, 5) * 5 * 11 * pw(13, 2) * 17);
    want.canonicalize();
    Rational got = i999 * 8;
    got.canonicalize();
    CHECK(got == want);
    // I(9,9,9) = (8!)^2/(27·26·17!)
    mpz_class f8 = 40320;
    mpz_class f17("355687428096000");
    Rational direct(f8 * f8, mpz_class(27) * 26 * f17);
    direct.canonicalize();
    CHECK(i999 == direct);
    CHECK_THROWS_AS(integral_closed(0, 1, 1), Error);
}

TEST_CASE("quadrature against the closed form") {
    struct Case {
        int a, b, c, n;
        double tol;
    } cases[] = {{1, 1, 1, 32, 1e-9}, {2, 3, 4, 32, 1e-6}, {9, 9, 9, 64, 1e-6}};
    for (const auto& cs : cases) {
        double exact = integral_closed(cs.a, cs.b, cs.c).get_d();
        double quad = integral_quadrature(cs.a, cs.b, cs.c, cs.n);
        CHECK(std::abs(quad - exact) / exact < cs.tol);
    }
    // agreement is monotone in n
    double exact = integral_closed(5, 6, 7).get_d();
    double prev = 1e300;
    for (int n : {8, 12, 16, 24, 32}) {
        double err = std::abs(integral_quadrature(5, 6, 7, n) - exact) / exact;
        CHECK(err <= prev + 1e-15);
        prev = err;
    }
    CHECK_THROWS_AS(integral_quadrature(1, 1, 1, 4), Error);
}

TEST_CASE("torus weight integral and covering factor") {
    double expected = Rational(integral_closed(9, 9, 9) * 8).get_d();
    double w = w_integral_quadrature(48);
    CHECK(std::abs(w - expected) / expected < 1e-6);

    CHECK(covering_check(false) == 2);
    CHECK(covering_check(true) == 1);
    // the full chart integral value
    SymbolicVolume want(Rational(pw(2, 6), pw(3, 12) * pw(5, 5) * pw(7, 3) * pw(11, 2) *
                                               pw(13, 2) * 17),
                        0, 0, 27);
    CHECK(covering_integral(false) == want);
}

TEST_CASE("not representable error") {
    SymbolicVolume v(1, 1, 0, 0);
    CHECK_THROWS_AS(v.as_rational(), Error);
    SymbolicVolume p(1, 0, 0, 1);
    CHECK_THROWS_AS(p.as_rational(), Error);
    CHECK(SymbolicVolume(Rational(7, 3), 0, 0, 0).as_rational() == Rational(7, 3));
}
