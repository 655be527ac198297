#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "e7forge/e7mat.hpp"
#include "e7forge/rep56.hpp"
#include "e7forge/prng.hpp"

using namespace e7f;

namespace {

GeneratorSet small_exact_set() {
    GeneratorSet g;
    g.construction = Construction::Tits;
    g.rep_dim = 4;
    Prng rng(5);
    for (int k = 0; k < 3; ++k) {
        SparseExactMatrix m;
        m.dim = 4;
        for (int t = 0; t < 6; ++t) {
            ExactScalar v = ExactScalar::basis(rng.uniform_int(4),
                                               Rational(rng.uniform_int(9) - 4, 1 + rng.uniform_int(4))) +
                            ExactScalar::imag_basis(rng.uniform_int(4), Rational(rng.uniform_int(5) - 2));
            m.add(rng.uniform_int(4), rng.uniform_int(4), v);
        }
        m.normalize();
        g.mats.push_back(m.embed());
        g.exact.push_back(std::move(m));
        g.labels.push_back("T" + std::to_string(k + 1));
    }
    return g;
}

std::string run_cli(const std::string& args, int& exit_code) {
    const char* bin = std::getenv("E7FORGE_BIN");
    REQUIRE(bin != nullptr);
    std::string cmd = std::string(bin) + " " + args + " 2>&1 > /tmp/e7f_cli_out.txt";
    int rc = std::system(cmd.c_str());
    exit_code = WEXITSTATUS(rc);
    std::ifstream is("/tmp/e7f_cli_out.txt");
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("exact round trip is byte identical") {
    E7MatFile f;
    f.set = small_exact_set();
    f.exact_mode = true;
    std::string once = e7mat_write(f);
    E7MatFile back = e7mat_read(once);
    std::string twice = e7mat_write(back);
    CHECK(once == twice);
    CHECK(back.set.count() == 3);
    CHECK(back.set.labels[1] == "T2");
    for (int k = 0; k < 3; ++k)
        CHECK(sparse_equal(back.set.exact[static_cast<std::size_t>(k)],
                           f.set.exact[static_cast<std::size_t>(k)]));
}

TEST_CASE("float round trip is byte identical") {
    E7MatFile f;
    f.set = small_exact_set();
    f.exact_mode = false;
    std::string once = e7mat_write(f);
    E7MatFile back = e7mat_read(once);
    std::string twice = e7mat_write(back);
    CHECK(once == twice);
    double diff = 0;
    for (int k = 0; k < 3; ++k)
        diff = std::max(diff, max_abs(Mat(back.set.mats[static_cast<std::size_t>(k)] -
                                          f.set.mats[static_cast<std::size_t>(k)])));
    CHECK(diff == 0.0);
}

TEST_CASE("reader error paths") {
    CHECK_THROWS_AS(e7mat_read("garbage"), Error);
    CHECK_THROWS_AS(e7mat_read("#E7MAT v1\n"), Error);
    CHECK_THROWS_AS(
        e7mat_read("#E7MAT v1\nconstruction=tits rep=4 count=2 dim=4 scalar=exact\n"),
        Error);
}

TEST_CASE("cli exit codes and outputs") {
    int rc = 0;
    // usage errors -> 2
    run_cli("volume --target NOPE", rc);
    CHECK(rc == 2);
    run_cli("sample --n 0 --seed 1 --out /tmp/e7f_s.mat", rc);
    CHECK(rc == 2);
    run_cli("build --construction split --rep 133 --out /tmp/e7f_b.mat", rc);
    CHECK(rc == 2);
    run_cli("nonsense", rc);
    CHECK(rc == 2);
    run_cli("integral --a 0 --b 1 --c 1", rc);
    CHECK(rc == 2);

    // success paths
    std::string out = run_cli("volume --target E7modU", rc);
    CHECK(rc == 0);
    CHECK(out.find("2^5/(3^12*5^5*7^3*11^2*13^2*17)") != std::string::npos);
    CHECK(out.find("pi^27") != std::string::npos);

    out = run_cli("integral --a 9 --b 9 --c 9", rc);
    CHECK(rc == 0);
    CHECK(out.find("2/38397645") != std::string::npos);

    out = run_cli("ranges", rc);
    CHECK(rc == 0);
    CHECK(out.find("52,(x+y-z)/sqrt6") != std::string::npos);
}

TEST_CASE("cli exact build round trip") {
    int rc = 0;
    run_cli("build --construction split --rep 56 --scalar exact --out /tmp/e7f_split.mat", rc);
    REQUIRE(rc == 0);
    E7MatFile f = e7mat_load("/tmp/e7f_split.mat");
    CHECK(f.exact_mode);
    CHECK(f.set.count() == 133);
    CHECK(f.set.rep_dim == 56);
    // writing the parsed file reproduces the bytes
    std::ifstream is("/tmp/e7f_split.mat", std::ios::binary);
    std::ostringstream ss;
    ss << is.rdbuf();
    CHECK(e7mat_write(f) == ss.str());
    // the parsed exact entries embed to the same floats as a fresh build
    SplitSet sp = build_56_split();
    double diff = 0;
    for (int k = 0; k < 133; ++k)
        diff = std::max(diff, max_abs(Mat(f.set.mats[static_cast<std::size_t>(k)] -
                                          sp.set.mats[static_cast<std::size_t>(k)])));
    CHECK(diff == 0.0);
}

TEST_CASE("cli sampling determinism") {
    int rc = 0;
    run_cli("sample --n 4 --seed 42 --out /tmp/e7f_s1.mat", rc);
    REQUIRE(rc == 0);
    run_cli("sample --n 4 --seed 42 --out /tmp/e7f_s2.mat", rc);
    REQUIRE(rc == 0);
    auto slurp = [](const char* p) {
        std::ifstream is(p, std::ios::binary);
        std::ostringstream ss;
        ss << is.rdbuf();
        return ss.str();
    };
    std::string a = slurp("/tmp/e7f_s1.mat");
    std::string b = slurp("/tmp/e7f_s2.mat");
    CHECK(a == b);
    CHECK(a.find("manifest seed=42") != std::string::npos);

    // the samples parse back and are unitary
    E7MatFile f = e7mat_load("/tmp/e7f_s1.mat");
    CHECK(f.set.count() == 4);
    for (const auto& m : f.set.mats) CHECK(unitarity_residual(m) < 1e-8);
}
