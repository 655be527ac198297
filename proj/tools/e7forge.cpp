#include <fstream>
#include <sstream>
#include <iostream>

#include <CLI11.hpp>

#include "e7forge/verify.hpp"

using namespace e7f;

namespace {

int cmd_build(const std::string& construction, int rep, const std::string& scalar,
              const std::string& out) {
    auto c = construction_from_name(construction);
    if (!c) {
        std::cerr << "unknown construction '" << construction << "'\n";
        return 2;
    }
    if (rep != 56 && rep != 133) {
        std::cerr << "rep must be 56 or 133\n";
        return 2;
    }
    if (*c != Construction::Tits && rep == 133) {
        std::cerr << "the adjoint set is only built for the tits construction\n";
        return 2;
    }
    if (scalar != "exact" && scalar != "float") {
        std::cerr << "scalar must be exact or float\n";
        return 2;
    }

    try {
        VerifyContext cx;
        E7MatFile f;
        f.exact_mode = (scalar == "exact");
        if (*c == Construction::Tits && rep == 133)
            f.set = cx.m133();
        else if (*c == Construction::Tits)
            f.set = cx.y56();
        else if (*c == Construction::Split)
            f.set = cx.split().set;
        else
            f.set = cx.evi().set;
        e7mat_save(f, out);
        std::cout << "wrote " << out << " (" << f.set.count() << " matrices, dim "
                  << f.set.rep_dim << ", " << scalar << ")\n";
        return 0;
    } catch (const Error& e) {
        std::cerr << "build failed: " << e.what() << "\n";
        return 1;
    }
}

int cmd_verify(const std::string& suite, const std::string& construction, double tol,
               bool exhaustive, std::uint64_t seed, const std::string& report_path) {
    try {
        VerifyContext cx;
        std::vector<VerificationReport> reports = verify_suite(cx, suite, tol, exhaustive, seed);
        bool all_pass = true;
        std::string json = "[\n";
        for (std::size_t k = 0; k < reports.size(); ++k) {
            reports[k].construction = construction;
            all_pass = all_pass && reports[k].pass();
            json += reports[k].to_json();
            if (k + 1 < reports.size()) json += ",\n";
        }
        json += "]\n";
        if (!report_path.empty()) {
            std::ofstream os(report_path, std::ios::binary);
            os << json;
        }
        for (const auto& r : reports) {
            for (const auto& c : r.checks)
                std::cout << (c.pass ? "[pass] " : "[FAIL] ") << r.suite << "/" << c.name
                          << "  residual " << c.residual << "  tol " << c.tolerance << "\n";
        }
        if (!all_pass) {
            for (const auto& r : reports)
                if (!r.pass())
                    std::cerr << "suite " << r.suite << " failed, worst check: "
                              << r.worst()->name << "\n";
            return 1;
        }
        return 0;
    } catch (const Error& e) {
        std::cerr << "verification error: " << e.what() << "\n";
        return 1;
    }
}

int cmd_sample(int n, std::uint64_t seed, const std::string& out) {
    if (n < 1) {
        std::cerr << "need n >= 1\n";
        return 2;
    }
    try {
        VerifyContext cx;
        const SplitHaarSampler& smp = cx.sampler();
        E7MatFile f;
        f.exact_mode = false;
        f.set.construction = Construction::Split;
        f.set.rep_dim = 56;
        double worst = 0;
        for (int k = 0; k < n; ++k) {
            auto s = smp.sample(seed, static_cast<std::uint64_t>(k));
            worst = std::max(worst, unitarity_residual(s.g));
            f.set.mats.push_back(s.g);
            f.set.labels.push_back("sample" + std::to_string(k + 1));
        }
        char manifest[128];
        std::snprintf(manifest, sizeof(manifest), "manifest seed=%llu n=%d max_residual=%.3e",
                      static_cast<unsigned long long>(seed), n, worst);
        f.manifest = manifest;
        e7mat_save(f, out);
        std::cout << "wrote " << n << " samples to " << out << ", max unitarity residual "
                  << worst << "\n";
        return 0;
    } catch (const Error& e) {
        std::cerr << "sampling failed: " << e.what() << "\n";
        return 1;
    }
}

int cmd_volume(const std::string& target) {
    SymbolicVolume v;
    if (target == "E7")
        v = macdonald_volume(descriptor_e7());
    else if (target == "E6")
        v = macdonald_volume(descriptor_e6());
    else if (target == "SO8")
        v = macdonald_volume(descriptor_so8());
    else if (target == "U")
        v = volume_u();
    else if (target == "E7modU")
        v = volume_e7_mod_u();
    else {
        std::cerr << "unknown target '" << target << "' (E7, E6, SO8, U, E7modU)\n";
        return 2;
    }
    std::cout << target << " = " << v.to_string() << "\n";
    std::cout << "  numeric: " << v.to_double() << "\n";
    return 0;
}

int cmd_integral(int a, int b, int c, int n) {
    if (a < 1 || b < 1 || c < 1) {
        std::cerr << "parameters must be >= 1\n";
        return 2;
    }
    Rational exact = integral_closed(a, b, c);
    std::cout << "I(" << a << "," << b << "," << c << ") = " << exact.get_str() << " = "
              << exact.get_d() << "\n";
    if (a == 9 && b == 9 && c == 9) {
        Rational scaled = exact * 8;
        scaled.canonicalize();
        std::cout << "8 I(9,9,9) = " << scaled.get_str() << "\n";
    }
    if (n > 0) {
        double q = integral_quadrature(a, b, c, n);
        std::cout << "quadrature n=" << n << ": " << q << "  (relative discrepancy "
                  << std::abs(q - exact.get_d()) / exact.get_d() << ")\n";
    }
    return 0;
}

int cmd_ranges(const std::string& out) {
    // Machine-readable parameter ranges of the tits Euler chart: one line
    // per coordinate with lower/upper bounds; the three torus coordinates
    // are expressed through the chained substitution.
    std::ostringstream os;
    os << "index,lower,upper,note\n";
    os << "1,0,sqrt(2/3)*pi,u1 halved by the covering identification\n";
    const char* rows[] = {
        "2,0,2pi,", "3,0,2pi,", "4,0,2pi,", "5,0,pi,", "6,-pi/2,pi/2,", "7,0,pi/2,",
        "8,0,pi/2,", "9,0,pi,", "10,0,2pi,", "11,0,2pi,", "12,0,2pi,", "13,0,pi,",
        "14,-pi/2,pi/2,", "15,0,pi/2,", "16,0,pi/2,", "17,0,pi,", "18,0,2pi,", "19,0,2pi,",
        "20,0,2pi,", "21,0,pi,", "22,-pi/2,pi/2,", "23,0,pi/2,", "24,0,pi/2,", "25,0,pi,",
        "26,0,pi,", "27,-x26/sqrt3,x26/sqrt3,coupled to x26", "28,0,2pi,", "29,0,2pi,",
        "30,0,2pi,", "31,0,pi,", "32,-pi/2,pi/2,", "33,0,pi/2,", "34,0,pi/2,", "35,0,pi,",
        "36,0,2pi,", "37,0,2pi,", "38,0,2pi,", "39,0,pi,", "40,-pi/2,pi/2,", "41,0,pi/2,",
        "42,0,pi/2,", "43,0,pi,", "44,0,2pi,", "45,0,2pi,", "46,0,2pi,", "47,0,pi,",
        "48,-pi/2,pi/2,", "49,0,pi/2,", "50,0,pi/2,", "51,0,pi,",
        "52,(x+y-z)/sqrt6,,x in [0-pi] y in [0-x] z in [0-y]",
        "53,(y+z)/2,,same chained range",
        "54,-x/sqrt3+(y-z)/(2 sqrt3),,same chained range",
        "55,0,2*sqrt(2/3)*pi,", "56,0,2pi,", "57,0,2pi,", "58,0,2pi,", "59,0,pi,",
        "60,-pi/2,pi/2,", "61,0,pi/2,", "62,0,pi/2,", "63,0,pi,", "64,0,2pi,", "65,0,2pi,",
        "66,0,2pi,", "67,0,pi,", "68,-pi/2,pi/2,", "69,0,pi/2,", "70,0,pi/2,", "71,0,pi,",
        "72,0,2pi,", "73,0,2pi,", "74,0,2pi,", "75,0,pi,", "76,-pi/2,pi/2,", "77,0,pi/2,",
        "78,0,pi/2,", "79,0,pi,", "80,0,pi,", "81,-x80/sqrt3,x80/sqrt3,coupled to x80",
        "82,0,2pi,", "83,0,2pi,", "84,0,2pi,", "85,0,pi,", "86,-pi/2,pi/2,", "87,0,pi/2,",
        "88,0,pi/2,", "89,0,pi,", "90,0,2pi,", "91,0,2pi,", "92,0,2pi,", "93,0,pi,",
        "94,-pi/2,pi/2,", "95,0,pi/2,", "96,0,pi/2,", "97,0,pi,", "98,0,2pi,", "99,0,2pi,",
        "100,0,2pi,", "101,0,pi,", "102,-pi/2,pi/2,", "103,0,pi/2,", "104,0,pi/2,",
        "105,0,pi,", "106,0,2pi,", "107,0,2pi,", "108,0,2pi,", "109,0,pi,",
        "110,-pi/2,pi/2,", "111,0,pi/2,", "112,0,pi/2,", "113,0,2pi,", "114,0,pi,",
        "115,-pi/2,pi/2,", "116,-pi/2,pi/2,", "117,-pi/2,pi/2,", "118,0,pi,", "119,0,2pi,",
        "120,0,pi,", "121,-pi/2,pi/2,", "122,-pi/2,pi/2,", "123,0,pi,", "124,0,2pi,",
        "125,0,pi,", "126,-pi/2,pi/2,", "127,0,pi,", "128,0,2pi,", "129,0,pi,", "130,0,pi,",
        "131,0,2pi,", "132,0,pi,", "133,0,4pi,"};
    for (const char* r : rows) os << r << "\n";
    if (out.empty()) {
        std::cout << os.str();
    } else {
        std::ofstream f(out, std::ios::binary);
        f << os.str();
        std::cout << "wrote " << out << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"e7forge: explicit matrix realizations of the compact E7 group"};
    app.require_subcommand(1);

    std::string construction = "tits", scalar = "float", out, suite = "all", report_path,
                target;
    int rep = 56, n = 1, a = 1, b = 1, c = 1, quad_n = 0;
    double tol = 1e-9;
    bool exhaustive = false;
    std::uint64_t seed = 42;

    auto* build = app.add_subcommand("build", "build a generator set and export it");
    build->add_option("--construction", construction, "tits | split | evi");
    build->add_option("--rep", rep, "56 or 133");
    build->add_option("--scalar", scalar, "exact | float");
    build->add_option("--out", out, "output path")->required();

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite,
                       "all | structure | jacobi | roots | volumes | euler | center");
    verify->add_option("--construction", construction, "context tag for the report");
    verify->add_option("--tol", tol, "tolerance for the main residuals");
    verify->add_flag("--exhaustive", exhaustive, "run every generator triple in the jacobi suite");
    verify->add_option("--seed", seed, "seed for randomized checks");
    verify->add_option("--report", report_path, "write the JSON report here");

    auto* sample = app.add_subcommand("sample", "draw Haar samples in the split construction");
    sample->add_option("--n", n, "number of samples");
    sample->add_option("--seed", seed, "sampler seed");
    sample->add_option("--out", out, "output path")->required();

    auto* volume = app.add_subcommand("volume", "print an exact group volume");
    volume->add_option("--target", target, "E7 | E6 | SO8 | U | E7modU")->required();

    auto* integral = app.add_subcommand("integral", "the ordered-simplex integral I(a,b,c)");
    integral->add_option("--a", a);
    integral->add_option("--b", b);
    integral->add_option("--c", c);
    integral->add_option("--n", quad_n, "optional quadrature size");

    auto* ranges = app.add_subcommand("ranges", "export the tits Euler parameter ranges");
    ranges->add_option("--out", out, "output path (stdout if omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (build->parsed()) return cmd_build(construction, rep, scalar, out);
    if (verify->parsed()) return cmd_verify(suite, construction, tol, exhaustive, seed, report_path);
    if (sample->parsed()) return cmd_sample(n, seed, out);
    if (volume->parsed()) return cmd_volume(target);
    if (integral->parsed()) return cmd_integral(a, b, c, quad_n);
    if (ranges->parsed()) return cmd_ranges(out);
    return 2;
}
