#include "e7forge/rep56.hpp"

#include <algorithm>
#include <functional>
#include <cmath>

#include "e7forge/parallel.hpp"
#include "e7forge/prng.hpp"
#include "e7forge/tits.hpp"

namespace e7f {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Block offsets of the 56 = 27 + 1 + 27 + 1 layout.
constexpr int kJ1 = 0, kMu1 = 27, kJ2 = 28, kMu2 = 55;

void put_block27(SparseExactMatrix& m, int row0, int col0, const ExactMatrix& b,
                 const ExactScalar& scale, bool transpose = false) {
    for (int r = 0; r < 27; ++r)
        for (int c = 0; c < 27; ++c) {
            const ExactScalar& v = transpose ? b.at(c, r) : b.at(r, c);
            if (!v.is_zero()) m.add(row0 + r, col0 + c, scale * v);
        }
}

} // namespace

GeneratorSet build_56_tits(const F4E6Basis& fb) {
    GeneratorSet g;
    g.construction = Construction::Tits;
    g.rep_dim = 56;

    ExactScalar i = ExactScalar::i();
    ExactScalar half(Rational(1, 2));
    ExactScalar s23 = ExactScalar::sqrt2over3();
    ExactScalar s32 = ExactScalar::sqrt3over2();
    ExactScalar is6 = i * ExactScalar::sqrt6().inverse();
    ExactScalar hs2 = half * ExactScalar::sqrt2(); // sqrt2/2

    auto itilde = [&](int r) { return r < 26 ? ExactScalar::one() : ExactScalar(-2); };

    for (int A = 1; A <= 133; ++A) {
        SparseExactMatrix m;
        m.dim = 56;
        if (A == 1) {
            for (int r = 0; r < 27; ++r) {
                m.add(kJ1 + r, kJ1 + r, is6);
                m.add(kJ2 + r, kJ2 + r, -is6);
            }
            m.add(kMu1, kMu1, -(i * s32));
            m.add(kMu2, kMu2, i * s32);
        } else if (A == 2 || A == 3) {
            // Y2 carries the i factors, Y3 the real ones with signs.
            ExactScalar d13 = (A == 2) ? -(half * i * s23) : half * s23;
            ExactScalar d31 = (A == 2) ? -(half * i * s23) : -(half * s23);
            ExactScalar v14 = (A == 2) ? i * hs2 : hs2;
            ExactScalar v23 = v14;
            ExactScalar v32 = (A == 2) ? i * hs2 : -hs2;
            ExactScalar v41 = v32;
            for (int r = 0; r < 27; ++r) {
                m.add(kJ1 + r, kJ2 + r, d13 * itilde(r));
                m.add(kJ2 + r, kJ1 + r, d31 * itilde(r));
            }
            m.add(kJ1 + 26, kMu2, v14);
            m.add(kMu1, kJ2 + 26, v23);
            m.add(kJ2 + 26, kMu1, v32);
            m.add(kMu2, kJ1 + 26, v41);
        } else if (A <= 81) {
            int I = A - 3;
            const ExactMatrix& phi = (I <= 52) ? fb.C(I) : fb.Ctilde(I - 52);
            put_block27(m, kJ1, kJ1, phi, ExactScalar::one());
            put_block27(m, kJ2, kJ2, phi, ExactScalar(-1), /*transpose=*/true);
        } else if (A <= 107) {
            int a = A - 81;
            put_block27(m, kJ1, kJ2, fb.A(a), i);
            put_block27(m, kJ2, kJ1, fb.A(a), i);
            m.add(kJ1 + (a - 1), kMu2, i * hs2);
            m.add(kMu1, kJ2 + (a - 1), i * hs2);
            m.add(kJ2 + (a - 1), kMu1, i * hs2);
            m.add(kMu2, kJ1 + (a - 1), i * hs2);
        } else {
            int a = A - 107;
            put_block27(m, kJ1, kJ2, fb.A(a), ExactScalar(-1));
            put_block27(m, kJ2, kJ1, fb.A(a), ExactScalar::one());
            m.add(kJ1 + (a - 1), kMu2, hs2);
            m.add(kMu1, kJ2 + (a - 1), hs2);
            m.add(kJ2 + (a - 1), kMu1, -hs2);
            m.add(kMu2, kJ1 + (a - 1), -hs2);
        }
        m.normalize();
        g.mats.push_back(m.embed());
        g.exact.push_back(std::move(m));
        g.labels.push_back("Y" + std::to_string(A));
    }
    return g;
}

CenterPeriodReport center_and_periods(const GeneratorSet& y56, const GeneratorSet& m133,
                                      double tol, bool raise_on_failure) {
    CenterPeriodReport rep;
    const Mat& y1 = y56.mats[0];
    Mat c = expm(std::sqrt(6.0) * kPi * y1);
    rep.minus_identity_residual = max_abs(c + Mat::Identity(56, 56));
    rep.adjoint_identity_residual =
        deviation_from_identity(expm(std::sqrt(6.0) * kPi * m133.mats[0]));

    Mat omega = expm((4.0 * kPi / std::sqrt(3.0)) * y56.mats[72]);
    rep.omega_cubed_residual = deviation_from_identity(omega * omega * omega);
    Mat omega_b = expm(2.0 * std::sqrt(2.0 / 3.0) * kPi * y1);
    rep.omega_equivalence_residual = max_abs(omega - omega_b);
    rep.omega_nontrivial_gap = deviation_from_identity(omega);

    rep.h_period_residual = 0;
    for (int L = 0; L < 3; ++L)
        rep.h_period_residual =
            std::max(rep.h_period_residual,
                     deviation_from_identity(expm(2.0 * std::sqrt(6.0) * kPi * y56.mats[static_cast<std::size_t>(L)])));

    rep.exceptional_4pi_gap = 1e300;
    for (int A : {73, 99, 125})
        rep.exceptional_4pi_gap =
            std::min(rep.exceptional_4pi_gap,
                     deviation_from_identity(expm(4.0 * kPi * y56.mats[static_cast<std::size_t>(A - 1)])));

    rep.periods.resize(130);
    parallel_for(130, [&](long k) {
        int A = static_cast<int>(k) + 4;
        bool exceptional = (A == 73 || A == 99 || A == 125);
        double period = exceptional ? 4.0 * kPi * std::sqrt(3.0) : 4.0 * kPi;
        double resid = deviation_from_identity(expm(period * y56.mats[static_cast<std::size_t>(A - 1)]));
        rep.periods[static_cast<std::size_t>(k)] = {A, period, resid};
    });
    rep.worst_period_residual = 0;
    for (const auto& p : rep.periods)
        rep.worst_period_residual = std::max(rep.worst_period_residual, p.residual);

    rep.pass = rep.minus_identity_residual < tol && rep.adjoint_identity_residual < tol &&
               rep.omega_cubed_residual < tol && rep.omega_equivalence_residual < 1e-8 &&
               rep.omega_nontrivial_gap > 0.5 && rep.h_period_residual < tol &&
               rep.exceptional_4pi_gap > 0.5 && rep.worst_period_residual < tol;

    if (!rep.pass && raise_on_failure) {
        for (const auto& p : rep.periods)
            if (p.residual >= tol)
                throw Error(ErrorKind::PeriodMismatch,
                            "one-parameter subgroup " + std::to_string(p.index));
        throw Error(ErrorKind::PeriodMismatch, "center or omega check");
    }
    return rep;
}

IsoReport verify_iso(const GeneratorSet& y56, const GeneratorSet& m133, const F4E6Basis& fb,
                     double tol) {
    IsoReport rep;
    StructureConstants c56 = structure_constants(y56);
    StructureConstants c133 = structure_constants(m133);
    rep.closure_residual_56 = c56.worst_residual;
    rep.closure_residual_133 = c133.worst_residual;

    double worst = 0;
    int wa = 0, wb = 0, wc = 0;
    for (std::size_t k = 0; k < c56.c.size(); ++k) {
        double d = std::abs(c56.c[k] - c133.c[k]);
        if (d > worst) {
            worst = d;
            int n = c56.n;
            wa = static_cast<int>(k) / (n * n);
            wb = (static_cast<int>(k) / n) % n;
            wc = static_cast<int>(k) % n;
        }
    }
    rep.worst_structure_diff = worst;

    // Independent oracle: the exact bracket of the abstract algebra.
    Prng rng(2024);
    double oracle = 0;
    for (int t = 0; t < 400; ++t) {
        int A = 1 + rng.uniform_int(133), B = 1 + rng.uniform_int(133);
        if (A == B) continue;
        std::vector<double> row(133, 0.0);
        for (const auto& [C, v] : tits_basis_bracket_normalized(fb, A, B))
            row[static_cast<std::size_t>(C - 1)] = v.embed().real();
        for (int C = 0; C < 133; ++C)
            oracle = std::max(oracle, std::abs(row[static_cast<std::size_t>(C)] -
                                               c56.at(A - 1, B - 1, C)));
    }
    rep.exact_oracle_diff = oracle;

    if (worst > tol)
        throw Error(ErrorKind::StructureMismatch,
                    "worst constants mismatch at (" + std::to_string(wa + 1) + "," +
                        std::to_string(wb + 1) + "," + std::to_string(wc + 1) + "): " +
                        std::to_string(worst));
    return rep;
}

namespace {

int pair_index(int i, int j) {
    // 0-based i<j<8, lexicographic
    int idx = 0;
    for (int a = 0; a < 8; ++a)
        for (int b = a + 1; b < 8; ++b) {
            if (a == i && b == j) return idx;
            ++idx;
        }
    return -1;
}

int perm_sign(std::vector<int> v) {
    int sign = 1;
    for (std::size_t a = 0; a < v.size(); ++a)
        for (std::size_t b = a + 1; b < v.size(); ++b)
            if (v[a] > v[b]) {
                std::swap(v[a], v[b]);
                sign = -sign;
            }
    for (std::size_t a = 0; a + 1 < v.size(); ++a)
        if (v[a] == v[a + 1]) return 0;
    return sign;
}

// wedge-square action: X on V induces X^ on V^V.
ExactMatrix wedge28(const ExactMatrix& x) {
    ExactMatrix m(28, 28);
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j)
            for (int k = 0; k < 8; ++k)
                for (int l = k + 1; l < 8; ++l) {
                    ExactScalar v;
                    if (j == l) v += x.at(i, k);
                    if (i == k) v += x.at(j, l);
                    if (j == k) v -= x.at(i, l);
                    if (i == l) v -= x.at(j, k);
                    if (!v.is_zero()) m.at(pair_index(i, j), pair_index(k, l)) = v;
                }
    return m;
}

void put_block28(SparseExactMatrix& m, int row0, int col0, const ExactMatrix& b,
                 const ExactScalar& scale) {
    for (int r = 0; r < 28; ++r)
        for (int c = 0; c < 28; ++c)
            if (!b.at(r, c).is_zero()) m.add(row0 + r, col0 + c, scale * b.at(r, c));
}

// lambda_I as a 56x56 sparse matrix: top-right block epsilon_{I,ij,kl},
// bottom-left block delta^{ij,kl}_I.
SparseExactMatrix lambda_matrix(const std::array<int, 4>& I) {
    SparseExactMatrix m;
    m.dim = 56;
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j)
            for (int k = 0; k < 8; ++k)
                for (int l = k + 1; l < 8; ++l) {
                    int e = perm_sign({I[0], I[1], I[2], I[3], i, j, k, l});
                    if (e != 0)
                        m.add(pair_index(i, j), 28 + pair_index(k, l), ExactScalar(e));
                    // delta: {i,j,k,l} must equal I as a set
                    int d = 0;
                    std::array<int, 4> q{i, j, k, l};
                    if (std::is_permutation(q.begin(), q.end(), I.begin())) {
                        // parity of (i,j,k,l) relative to sorted I
                        std::vector<int> rel;
                        for (int t : q)
                            rel.push_back(static_cast<int>(
                                std::find(I.begin(), I.end(), t) - I.begin()));
                        d = perm_sign(rel);
                    }
                    if (d != 0) m.add(28 + pair_index(i, j), pair_index(k, l), ExactScalar(d));
                }
    return m;
}

} // namespace

SplitSet build_56_split() {
    SplitSet out;
    out.set.construction = Construction::Split;
    out.set.rep_dim = 56;

    for (int k = 0; k < 8; ++k)
        for (int l = k + 1; l < 8; ++l) out.pairs.emplace_back(k + 1, l + 1);

    // I0: sorted tetra indices whose third entry is <= 4 (0-based).
    for (int a = 0; a < 8; ++a)
        for (int b = a + 1; b < 8; ++b)
            for (int c = b + 1; c < 8; ++c)
                for (int d = c + 1; d < 8; ++d)
                    if (c <= 4) out.tetra.push_back({a + 1, b + 1, c + 1, d + 1});

    ExactScalar i = ExactScalar::i();
    ExactScalar scale = ExactScalar::basis(2, Rational(1, 6));    // 1/sqrt12 = sqrt3/6
    ExactScalar s6inv = ExactScalar::basis(3, Rational(1, 6));   // 1/sqrt6 = sqrt6/6
    ExactScalar half(Rational(1, 2));
    ExactScalar hs2 = half * ExactScalar::sqrt2();

    auto push = [&](SparseExactMatrix m, const std::string& label) {
        m.normalize();
        out.set.mats.push_back(m.embed());
        out.set.exact.push_back(std::move(m));
        out.set.labels.push_back(label);
    };

    auto sl8_block = [&](const ExactMatrix& x, bool symmetric) {
        // A-type: diag(W, W); symmetric-type: diag(iW, -iW), all times scale.
        ExactMatrix w = wedge28(x);
        SparseExactMatrix m;
        m.dim = 56;
        ExactScalar up = symmetric ? i * scale : scale;
        ExactScalar dn = symmetric ? -(i * scale) : scale;
        put_block28(m, 0, 0, w, up);
        put_block28(m, 28, 28, w, dn);
        return m;
    };

    // Antisymmetric rotations A_kl.
    for (auto [k, l] : out.pairs) {
        ExactMatrix x(8, 8);
        x.at(k - 1, l - 1) = ExactScalar::one();
        x.at(l - 1, k - 1) = ExactScalar(-1);
        push(sl8_block(x, false), "A(" + std::to_string(k) + "," + std::to_string(l) + ")");
    }
    // cA_I.
    auto tilde_of = [&](const std::array<int, 4>& I) {
        std::array<int, 4> t{};
        int n = 0;
        for (int v = 1; v <= 8; ++v)
            if (std::find(I.begin(), I.end(), v) == I.end()) t[static_cast<std::size_t>(n++)] = v;
        return t;
    };
    for (const auto& I : out.tetra) {
        std::array<int, 4> T = tilde_of(I);
        std::array<int, 4> I0{I[0] - 1, I[1] - 1, I[2] - 1, I[3] - 1};
        std::array<int, 4> T0{T[0] - 1, T[1] - 1, T[2] - 1, T[3] - 1};
        int eps_it = perm_sign({I0[0], I0[1], I0[2], I0[3], T0[0], T0[1], T0[2], T0[3]});
        SparseExactMatrix li = lambda_matrix(I0);
        SparseExactMatrix lt = lambda_matrix(T0);
        SparseExactMatrix a = sparse_axpy(li, ExactScalar(-eps_it), lt);
        a = sparse_scale(hs2 * s6inv, a); // (1/sqrt2)*(1/sqrt6)
        push(std::move(a), "cA(" + std::to_string(I[0]) + "," + std::to_string(I[1]) + "," +
                               std::to_string(I[2]) + "," + std::to_string(I[3]) + ")");
    }
    // D_alpha.
    const int dvals[7][8] = {{1, -1, -1, 1, 0, 0, 0, 0}, {1, -1, 1, -1, 0, 0, 0, 0},
                             {1, 1, -1, -1, 0, 0, 0, 0}, {0, 0, 0, 0, 1, -1, -1, 1},
                             {0, 0, 0, 0, 1, -1, 1, -1}, {0, 0, 0, 0, 1, 1, -1, -1},
                             {1, 1, 1, 1, -1, -1, -1, -1}};
    for (int al = 0; al < 7; ++al) {
        ExactScalar unit = (al < 6) ? ExactScalar::sqrt2().inverse() : half;
        ExactMatrix x(8, 8);
        for (int k = 0; k < 8; ++k) {
            ExactScalar v = ExactScalar(dvals[al][k]) * unit;
            x.at(k, k) = v;
            out.d_diag[static_cast<std::size_t>(al)][static_cast<std::size_t>(k)] = v;
        }
        push(sl8_block(x, true), "D" + std::to_string(al + 1));
    }
    // S_kl.
    for (auto [k, l] : out.pairs) {
        ExactMatrix x(8, 8);
        x.at(k - 1, l - 1) = ExactScalar::one();
        x.at(l - 1, k - 1) = ExactScalar::one();
        push(sl8_block(x, true), "S(" + std::to_string(k) + "," + std::to_string(l) + ")");
    }
    // cS_I.
    for (const auto& I : out.tetra) {
        std::array<int, 4> T = tilde_of(I);
        std::array<int, 4> I0{I[0] - 1, I[1] - 1, I[2] - 1, I[3] - 1};
        std::array<int, 4> T0{T[0] - 1, T[1] - 1, T[2] - 1, T[3] - 1};
        int eps_it = perm_sign({I0[0], I0[1], I0[2], I0[3], T0[0], T0[1], T0[2], T0[3]});
        SparseExactMatrix li = lambda_matrix(I0);
        SparseExactMatrix lt = lambda_matrix(T0);
        SparseExactMatrix s = sparse_axpy(li, ExactScalar(eps_it), lt);
        s = sparse_scale(i * hs2 * s6inv, s);
        push(std::move(s), "cS(" + std::to_string(I[0]) + "," + std::to_string(I[1]) + "," +
                               std::to_string(I[2]) + "," + std::to_string(I[3]) + ")");
    }
    return out;
}

namespace {

using Coeffs = std::vector<ExactScalar>; // length 133, over the Y basis

SparseExactMatrix assemble_from_coeffs(const GeneratorSet& y, const Coeffs& co) {
    SparseExactMatrix m;
    m.dim = 56;
    for (int k = 0; k < 133; ++k) {
        const ExactScalar& v = co[static_cast<std::size_t>(k)];
        if (v.is_zero()) continue;
        for (const auto& [r, c, w] : y.exact[static_cast<std::size_t>(k)].entries)
            m.entries.emplace_back(r, c, v * w);
    }
    m.normalize();
    return m;
}

Coeffs unit_coeffs(int index1) {
    Coeffs c(133);
    c[static_cast<std::size_t>(index1 - 1)] = ExactScalar::one();
    return c;
}

void add_to(Coeffs& c, int index1, const ExactScalar& v) {
    c[static_cast<std::size_t>(index1 - 1)] += v;
}

// Coordinates of a (real-span) algebra element over the orthonormal Y basis,
// with an exact reconstruction guard.
Coeffs y_coordinates(const GeneratorSet& y, const SparseExactMatrix& x) {
    Coeffs out(133);
    ExactScalar minus_twelfth(Rational(-1, 12));
    for (int k = 0; k < 133; ++k)
        out[static_cast<std::size_t>(k)] =
            minus_twelfth * sparse_trace_product(x, y.exact[static_cast<std::size_t>(k)]);
    SparseExactMatrix recon = assemble_from_coeffs(y, out);
    if (!sparse_equal(recon, x))
        throw Error(ErrorKind::StructureMismatch,
                    "element does not expand over the Y basis");
    return out;
}

} // namespace

EviSet build_basis_evi(const GeneratorSet& y56, const F4E6Basis& fb) {
    if (!y56.has_exact())
        throw Error(ErrorKind::WrongType, "evi basis needs the exact tits generators");

    EviSet out;
    out.set.construction = Construction::Evi;
    out.set.rep_dim = 56;

    // Parity of every Y under conjugation by the reflection that flips the
    // off-diagonal positions (1,2) and (1,3) of the Jordan algebra.
    std::array<int, 56> sgn;
    sgn.fill(1);
    for (int r = 1; r <= 16; ++r) {
        sgn[static_cast<std::size_t>(kJ1 + r)] = -1;
        sgn[static_cast<std::size_t>(kJ2 + r)] = -1;
    }
    auto parity = [&](int A) {
        int p = 0;
        for (const auto& [r, c, v] : y56.exact[static_cast<std::size_t>(A - 1)].entries) {
            int q = sgn[static_cast<std::size_t>(r)] * sgn[static_cast<std::size_t>(c)];
            if (p == 0)
                p = q;
            else if (p != q)
                throw Error(ErrorKind::WrongType,
                            "Y" + std::to_string(A) + " is not a reflection eigenvector");
        }
        return p;
    };

    std::vector<int> even, odd;
    for (int A = 1; A <= 133; ++A) (parity(A) >= 0 ? even : odd).push_back(A);
    if (even.size() != 69 || odd.size() != 64)
        throw Error(ErrorKind::DimensionMismatch, "sigma eigenspace split is not 69+64");

    ExactScalar half(Rational(1, 2));
    ExactScalar third(Rational(1, 3));
    ExactScalar sixth(Rational(1, 6));
    ExactScalar s2 = ExactScalar::sqrt2(), s3 = ExactScalar::sqrt3(), s6 = ExactScalar::sqrt6();

    // Fixed slot plan for the compact part (69 generators).
    std::vector<Coeffs> L(134, Coeffs(133));
    for (int b = 1; b <= 36; ++b) L[static_cast<std::size_t>(b)] = unit_coeffs(b + 3);
    for (int k = 0; k < 8; ++k) L[static_cast<std::size_t>(37 + k)] = unit_coeffs(74 + k);
    add_to(L[45], 73, half * s3);
    add_to(L[45], 56, -half);
    // The u(1) direction orthogonal to both L45 and the su(2) ideal.  The
    // sign of the Y1 term is fixed by requiring L69 to be an ideal member
    // (commuting with all of spin(12)); L46 is then the orthogonal partner.
    add_to(L[46], 56, half);
    add_to(L[46], 73, sixth * s3);
    add_to(L[46], 1, -(third * s6));
    add_to(L[47], 82, -(half * s2));
    add_to(L[47], 99, sixth * s6);
    add_to(L[47], 2, third * s3);
    add_to(L[48], 108, -(half * s2));
    add_to(L[48], 125, sixth * s6);
    add_to(L[48], 3, third * s3);
    add_to(L[49], 99, -(third * s6));
    add_to(L[49], 2, third * s3);
    add_to(L[50], 125, -(third * s6));
    add_to(L[50], 3, third * s3);
    for (int k = 0; k < 8; ++k) L[static_cast<std::size_t>(51 + k)] = unit_coeffs(100 + k);
    for (int k = 0; k < 8; ++k) L[static_cast<std::size_t>(59 + k)] = unit_coeffs(126 + k);
    add_to(L[67], 82, half * s2);
    add_to(L[67], 99, sixth * s6);
    add_to(L[67], 2, third * s3);
    add_to(L[68], 108, half * s2);
    add_to(L[68], 125, sixth * s6);
    add_to(L[68], 3, third * s3);
    add_to(L[69], 56, half * s2);
    add_to(L[69], 73, sixth * s6);
    add_to(L[69], 1, third * s3);

    // Torus selection.  Three structured commuting directions: the octonion
    // units 1, e1, e2 at position (1,2), tensored with the three quaternion
    // slots (Y83 = h2 (x) j2, Y110 = h3 (x) j3, Y59 = h1 (x) j4 in the Psi
    // layout).  The fourth is the exact centralizer of these three inside
    // the complement.
    const int nodd = 64;
    using Vec = std::vector<ExactScalar>;
    auto odd_position = [&](int yindex) {
        auto it = std::find(odd.begin(), odd.end(), yindex);
        if (it == odd.end())
            throw Error(ErrorKind::WrongType, "torus seed not in the odd sector");
        return static_cast<int>(it - odd.begin());
    };
    auto odd_matrix = [&](const Vec& v) {
        Coeffs co(133);
        for (int e = 0; e < nodd; ++e)
            co[static_cast<std::size_t>(odd[static_cast<std::size_t>(e)] - 1)] =
                v[static_cast<std::size_t>(e)];
        return assemble_from_coeffs(y56, co);
    };

    // The su(2) ideal combinations of the torus commutant, needed as extra
    // constraints on the fourth torus direction.
    ExactScalar inv_s2 = s2.inverse();
    Coeffs m7co(133);
    for (int k = 0; k < 133; ++k)
        m7co[static_cast<std::size_t>(k)] =
            inv_s2 * (L[45][static_cast<std::size_t>(k)] + L[46][static_cast<std::size_t>(k)]);
    std::vector<Coeffs> ideal{m7co, L[49], L[50]};
    std::vector<SparseExactMatrix> ideal_mats;
    for (const auto& co : ideal) ideal_mats.push_back(assemble_from_coeffs(y56, co));

    std::vector<Vec> torus;
    std::vector<SparseExactMatrix> torus_mats;
    for (int yindex : {83, 110, 59}) {
        Vec v(static_cast<std::size_t>(nodd));
        v[static_cast<std::size_t>(odd_position(yindex))] = ExactScalar::one();
        torus_mats.push_back(odd_matrix(v));
        torus.push_back(std::move(v));
    }
    for (std::size_t a = 0; a < torus.size(); ++a)
        for (std::size_t b = a + 1; b < torus.size(); ++b)
            if (!sparse_commutator(torus_mats[a], torus_mats[b]).is_zero())
                throw Error(ErrorKind::NotCommuting, "structured torus seeds do not commute");
    for (const auto& im : ideal_mats)
        for (const auto& tm : torus_mats)
            if (!sparse_commutator(im, tm).is_zero())
                throw Error(ErrorKind::NotCommuting, "ideal does not centralize the torus seeds");

    // Exact joint centralizer of the three seeds and the ideal inside the
    // odd sector.
    ExactMatrix constraints(6 * 133, nodd);
    for (int e = 0; e < nodd; ++e) {
        Vec unit(static_cast<std::size_t>(nodd));
        unit[static_cast<std::size_t>(e)] = ExactScalar::one();
        SparseExactMatrix ym = odd_matrix(unit);
        for (int j = 0; j < 6; ++j) {
            const SparseExactMatrix& target =
                j < 3 ? torus_mats[static_cast<std::size_t>(j)]
                      : ideal_mats[static_cast<std::size_t>(j - 3)];
            Coeffs coords = y_coordinates(y56, sparse_commutator(ym, target));
            for (int C = 0; C < 133; ++C) {
                const ExactScalar& v = coords[static_cast<std::size_t>(C)];
                if (!v.is_real())
                    throw Error(ErrorKind::StructureMismatch, "bracket coordinates not real");
                constraints.at(j * 133 + C, e) = v;
            }
        }
    }
    std::vector<Vec> central = kernel_basis(constraints);
    // Remove the seed span and pick the first remaining direction that
    // commutes with everything chosen so far.
    bool found = false;
    for (const auto& cand : central) {
        // independence from the seeds
        ExactMatrix m(4, nodd);
        for (int r = 0; r < 3; ++r)
            for (int e = 0; e < nodd; ++e)
                m.at(r, e) = torus[static_cast<std::size_t>(r)][static_cast<std::size_t>(e)];
        for (int e = 0; e < nodd; ++e) m.at(3, e) = cand[static_cast<std::size_t>(e)];
        if (static_cast<int>(rref(m).size()) != 4) continue;
        SparseExactMatrix cm = odd_matrix(cand);
        bool commutes = true;
        for (const auto& t : torus_mats)
            if (!sparse_commutator(cm, t).is_zero()) {
                commutes = false;
                break;
            }
        if (!commutes) continue;
        torus.push_back(cand);
        torus_mats.push_back(std::move(cm));
        found = true;
        break;
    }
    if (!found)
        throw Error(ErrorKind::DimensionMismatch, "no fourth commuting torus direction");

    // Orthonormalize the torus and complete the odd sector, exactly when the
    // normalizers stay inside the field.
    bool exact_ok = true;
    auto dot = [](const std::vector<ExactScalar>& a, const std::vector<ExactScalar>& b) {
        ExactScalar s;
        for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
        return s;
    };
    std::vector<std::vector<ExactScalar>> ortho; // orthonormal odd-coefficient vectors
    auto gs_insert = [&](std::vector<ExactScalar> v) -> bool {
        for (const auto& u : ortho) {
            ExactScalar p = dot(v, u);
            if (p.is_zero()) continue;
            for (std::size_t k = 0; k < v.size(); ++k) v[k] -= p * u[static_cast<std::size_t>(k)];
        }
        ExactScalar n2 = dot(v, v);
        if (n2.is_zero()) return false;
        auto inv = n2.rational_inv_sqrt();
        if (!inv) {
            exact_ok = false;
            return false;
        }
        for (auto& x : v) x = (*inv) * x;
        ortho.push_back(std::move(v));
        return true;
    };
    for (const auto& t : torus)
        if (!gs_insert(t))
            throw Error(ErrorKind::ExactFieldOverflow, "torus normalization left the field");
    for (int e = 0; e < nodd && static_cast<int>(ortho.size()) < nodd; ++e) {
        std::vector<ExactScalar> unit(static_cast<std::size_t>(nodd));
        unit[static_cast<std::size_t>(e)] = ExactScalar::one();
        gs_insert(std::move(unit));
    }
    if (!exact_ok || static_cast<int>(ortho.size()) != nodd)
        throw Error(ErrorKind::ExactFieldOverflow, "odd-sector completion left the field");

    // Place the torus at slots 70, 86, 103, 120 and the completion elsewhere.
    std::vector<int> slots;
    for (int s = 70; s <= 133; ++s) slots.push_back(s);
    std::array<int, 4> h4slots{70, 86, 103, 120};
    std::vector<int> rest;
    for (int s : slots)
        if (std::find(h4slots.begin(), h4slots.end(), s) == h4slots.end()) rest.push_back(s);
    for (int k = 0; k < 4; ++k) {
        Coeffs co(133);
        for (int e = 0; e < nodd; ++e)
            co[static_cast<std::size_t>(odd[static_cast<std::size_t>(e)] - 1)] =
                ortho[static_cast<std::size_t>(k)][static_cast<std::size_t>(e)];
        L[static_cast<std::size_t>(h4slots[static_cast<std::size_t>(k)])] = std::move(co);
    }
    for (int k = 4; k < nodd; ++k) {
        Coeffs co(133);
        for (int e = 0; e < nodd; ++e)
            co[static_cast<std::size_t>(odd[static_cast<std::size_t>(e)] - 1)] =
                ortho[static_cast<std::size_t>(k)][static_cast<std::size_t>(e)];
        L[static_cast<std::size_t>(rest[static_cast<std::size_t>(k - 4)])] = std::move(co);
    }

    for (int b = 1; b <= 133; ++b) {
        SparseExactMatrix m = assemble_from_coeffs(y56, L[static_cast<std::size_t>(b)]);
        out.set.mats.push_back(m.embed());
        out.set.exact.push_back(std::move(m));
        out.set.labels.push_back("L" + std::to_string(b));
        out.coeffs.push_back(L[static_cast<std::size_t>(b)]);
    }

    out.ideal_combos = std::move(ideal);
    return out;
}

} // namespace e7f
