#include "e7forge/roots.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "e7forge/errors.hpp"

namespace e7f {

namespace {

constexpr double kZeroTol = 1e-6;

bool lex_positive(const std::vector<double>& r) {
    for (int k = static_cast<int>(r.size()) - 1; k >= 0; --k) {
        if (std::abs(r[static_cast<std::size_t>(k)]) > kZeroTol)
            return r[static_cast<std::size_t>(k)] > 0;
    }
    return false;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}

} // namespace

std::vector<int> RootDatum::positive_indices() const {
    std::vector<int> out;
    for (int k = 0; k < static_cast<int>(roots.size()); ++k)
        if (positive[static_cast<std::size_t>(k)]) out.push_back(k);
    return out;
}

std::vector<int> RootDatum::simple_indices() const {
    std::vector<int> pos = positive_indices();
    std::vector<int> simple;
    for (int i : pos) {
        bool decomposable = false;
        for (int a : pos) {
            for (int b : pos) {
                bool sum = true;
                for (int k = 0; k < rank; ++k)
                    if (std::abs(roots[static_cast<std::size_t>(a)][static_cast<std::size_t>(k)] +
                                 roots[static_cast<std::size_t>(b)][static_cast<std::size_t>(k)] -
                                 roots[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]) >
                        1e-6) {
                        sum = false;
                        break;
                    }
                if (sum) {
                    decomposable = true;
                    break;
                }
            }
            if (decomposable) break;
        }
        if (!decomposable) simple.push_back(i);
    }
    return simple;
}

std::vector<int> RootDatum::simple_coefficients(const std::vector<double>& root,
                                                const std::vector<int>& simple) const {
    const int n = static_cast<int>(simple.size());
    Eigen::MatrixXd S(rank, n);
    Eigen::VectorXd r(rank);
    for (int k = 0; k < rank; ++k) {
        r(k) = root[static_cast<std::size_t>(k)];
        for (int j = 0; j < n; ++j)
            S(k, j) = roots[static_cast<std::size_t>(simple[static_cast<std::size_t>(j)])]
                           [static_cast<std::size_t>(k)];
    }
    Eigen::VectorXd x = S.colPivHouseholderQr().solve(r);
    std::vector<int> out(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        double v = x(j);
        int iv = static_cast<int>(std::lround(v));
        if (std::abs(v - iv) > 1e-6)
            throw Error(ErrorKind::WrongType, "root has non-integer simple coefficients");
        out[static_cast<std::size_t>(j)] = iv;
    }
    return out;
}

int RootDatum::highest_root_index(const std::vector<int>& simple) const {
    int best = -1, height = -1;
    for (int i : positive_indices()) {
        auto co = simple_coefficients(roots[static_cast<std::size_t>(i)], simple);
        int h = 0;
        for (int c : co) h += c;
        if (h > height) {
            height = h;
            best = i;
        }
    }
    return best;
}

std::vector<std::vector<double>> RootDatum::cartan_matrix(const std::vector<int>& simple) const {
    const std::size_t n = simple.size();
    std::vector<std::vector<double>> cm(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto& ai = roots[static_cast<std::size_t>(simple[i])];
            const auto& aj = roots[static_cast<std::size_t>(simple[j])];
            cm[i][j] = 2.0 * dot(ai, aj) / dot(aj, aj);
        }
    return cm;
}

RootDatum extract_roots(const GeneratorSet& g, const std::vector<int>& cartan,
                        double cluster_tol) {
    const int n = g.count();
    const int rank = static_cast<int>(cartan.size());

    for (std::size_t a = 0; a < cartan.size(); ++a)
        for (std::size_t b = a + 1; b < cartan.size(); ++b) {
            double r = max_abs(comm(g.mats[static_cast<std::size_t>(cartan[a])],
                                    g.mats[static_cast<std::size_t>(cartan[b])]));
            if (r > 1e-12)
                throw Error(ErrorKind::NotCommuting,
                            "cartan elements " + std::to_string(cartan[a]) + "," +
                                std::to_string(cartan[b]));
        }

    // Orthonormalize the full generator basis (Cholesky of the Gram) so the
    // adjoint matrices act on an orthonormal frame.
    const double nu = g.inner_norm();
    Eigen::MatrixXd G(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) {
            double v = -(g.mats[static_cast<std::size_t>(a)] * g.mats[static_cast<std::size_t>(b)])
                            .trace()
                            .real() /
                       nu;
            G(a, b) = v;
            G(b, a) = v;
        }
    Eigen::LLT<Eigen::MatrixXd> llt(G);
    if (llt.info() != Eigen::Success)
        throw Error(ErrorKind::WrongType, "generator Gram matrix not positive definite");
    Eigen::MatrixXd Lc = llt.matrixL();

    // Adjoint matrices of the cartan elements over the generator basis.
    StructureConstants sc = structure_constants(g);
    std::vector<Eigen::MatrixXd> ads;
    for (int c : cartan) {
        Eigen::MatrixXd ad(n, n);
        for (int B = 0; B < n; ++B)
            for (int C = 0; C < n; ++C) ad(C, B) = sc.at(c, B, C);
        // transform to the orthonormal frame: ad' = L^{-1} ad L
        Eigen::MatrixXd adp = Lc.triangularView<Eigen::Lower>().solve(ad * Lc);
        ads.push_back(adp);
    }

    // Orthonormalize the cartan covector frame itself: Gram of the cartan
    // elements, inverse square root applied to the ad family.
    Eigen::MatrixXd Gc(rank, rank);
    for (int a = 0; a < rank; ++a)
        for (int b = 0; b < rank; ++b)
            Gc(a, b) = G(cartan[static_cast<std::size_t>(a)], cartan[static_cast<std::size_t>(b)]);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ges(Gc);
    Eigen::MatrixXd gis = ges.operatorInverseSqrt();
    std::vector<Eigen::MatrixXd> adsh(static_cast<std::size_t>(rank));
    for (int a = 0; a < rank; ++a) {
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
        for (int b = 0; b < rank; ++b) m += gis(a, b) * ads[static_cast<std::size_t>(b)];
        adsh[static_cast<std::size_t>(a)] = m;
    }

    // Simultaneous diagonalization by recursive eigenspace splitting: for
    // each Cartan direction, refine every joint eigenspace found so far.
    struct Block {
        Mat basis;                // 56x.. orthonormal columns spanning the block
        std::vector<double> beta; // eigenvalues recorded so far
    };
    std::vector<Block> blocks;
    blocks.push_back({Mat::Identity(n, n), {}});
    for (int a = 0; a < rank; ++a) {
        std::vector<Block> refined;
        for (auto& blk : blocks) {
            Mat sub = blk.basis.adjoint() *
                      (Cplx(0, 1) * (adsh[static_cast<std::size_t>(a)] * blk.basis));
            Eigen::SelfAdjointEigenSolver<Mat> es(sub);
            const auto& ev = es.eigenvalues();
            int start = 0;
            for (int k = 1; k <= static_cast<int>(ev.size()); ++k) {
                if (k == static_cast<int>(ev.size()) || ev(k) - ev(start) > 1e-7) {
                    Block nb;
                    nb.basis = blk.basis * es.eigenvectors().middleCols(start, k - start);
                    nb.beta = blk.beta;
                    double mean = 0;
                    for (int t = start; t < k; ++t) mean += ev(t);
                    nb.beta.push_back(mean / (k - start));
                    refined.push_back(std::move(nb));
                    start = k;
                }
            }
        }
        blocks = std::move(refined);
    }

    RootDatum rd;
    rd.rank = rank;
    double worst_offdiag = 0;
    std::vector<std::vector<double>> covecs;
    for (const auto& blk : blocks) {
        for (int a = 0; a < rank; ++a) {
            Mat resid = Cplx(0, 1) * (adsh[static_cast<std::size_t>(a)] * blk.basis) -
                        blk.beta[static_cast<std::size_t>(a)] * blk.basis;
            worst_offdiag = std::max(worst_offdiag, max_abs(resid));
        }
        for (int k = 0; k < blk.basis.cols(); ++k) covecs.push_back(blk.beta);
    }
    if (worst_offdiag > 1e-8)
        throw Error(ErrorKind::NotDiagonalizable,
                    "simultaneous diagonalization residual " + std::to_string(worst_offdiag));

    // Cluster.
    for (const auto& beta : covecs) {
        double norm = std::sqrt(dot(beta, beta));
        if (norm < kZeroTol) {
            ++rd.zero_dim;
            continue;
        }
        bool merged = false;
        for (std::size_t r = 0; r < rd.roots.size(); ++r) {
            double d = 0;
            for (int a = 0; a < rank; ++a)
                d = std::max(d, std::abs(rd.roots[r][static_cast<std::size_t>(a)] -
                                         beta[static_cast<std::size_t>(a)]));
            if (d < cluster_tol) {
                ++rd.multiplicities[r];
                merged = true;
                break;
            }
        }
        if (!merged) {
            rd.roots.push_back(beta);
            rd.multiplicities.push_back(1);
        }
    }
    for (const auto& r : rd.roots) rd.positive.push_back(lex_positive(r));
    return rd;
}

E7ClassifyReport classify_e7(const RootDatum& rd, const SplitSet& split) {
    E7ClassifyReport rep;
    rep.root_count = static_cast<int>(rd.roots.size());
    rep.positive_count = static_cast<int>(rd.positive_indices().size());
    for (std::size_t r = 0; r < rd.roots.size(); ++r) {
        double n2 = dot(rd.roots[r], rd.roots[r]);
        rep.worst_norm2_deviation = std::max(rep.worst_norm2_deviation, std::abs(n2 - 2.0));
        if (rd.multiplicities[r] != 1)
            throw Error(ErrorKind::WrongType, "split root with multiplicity != 1");
    }
    if (rep.root_count != 126 || rep.positive_count != 63)
        throw Error(ErrorKind::WrongType, "split root count is not 126/63");

    // Named covectors: beta_kl components (D^k - D^l)/sqrt2, beta_I
    // components (D^i1+..+D^i4)/sqrt2.
    auto beta_pair = [&](int k, int l) {
        std::vector<double> v(7);
        for (int al = 0; al < 7; ++al) {
            double dk = split.d_diag[static_cast<std::size_t>(al)][static_cast<std::size_t>(k - 1)]
                            .embed()
                            .real();
            double dl = split.d_diag[static_cast<std::size_t>(al)][static_cast<std::size_t>(l - 1)]
                            .embed()
                            .real();
            v[static_cast<std::size_t>(al)] = (dk - dl) / std::sqrt(2.0);
        }
        return v;
    };
    auto beta_tetra = [&](std::array<int, 4> I) {
        std::vector<double> v(7);
        for (int al = 0; al < 7; ++al) {
            double s = 0;
            for (int t : I)
                s += split.d_diag[static_cast<std::size_t>(al)][static_cast<std::size_t>(t - 1)]
                         .embed()
                         .real();
            v[static_cast<std::size_t>(al)] = s / std::sqrt(2.0);
        }
        return v;
    };
    std::vector<std::vector<double>> named = {
        beta_pair(4, 5),           beta_pair(1, 2), beta_pair(3, 4), beta_pair(2, 3),
        beta_tetra({3, 4, 5, 8}),  beta_pair(7, 8), beta_pair(6, 7)};

    std::vector<int> simple = rd.simple_indices();
    if (simple.size() != 7) throw Error(ErrorKind::WrongType, "split simple system size != 7");

    // Match computed simple roots to the named list (as +-covectors; the
    // named ones are positive in the lexicographic convention).
    std::vector<int> order(7, -1);
    for (int j = 0; j < 7; ++j) {
        for (int i : simple) {
            double d = 0;
            for (int k = 0; k < 7; ++k)
                d = std::max(d, std::abs(rd.roots[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] -
                                         named[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)]));
            if (d < 1e-7) {
                order[static_cast<std::size_t>(j)] = i;
                break;
            }
        }
    }
    rep.simple_roots_match =
        std::all_of(order.begin(), order.end(), [](int v) { return v >= 0; });
    if (!rep.simple_roots_match)
        throw Error(ErrorKind::WrongType, "simple roots do not match the named covectors");

    // Cartan matrix in the named order must be E7's (Bourbaki).
    const int e7cm[7][7] = {{2, 0, -1, 0, 0, 0, 0},  {0, 2, 0, -1, 0, 0, 0},
                            {-1, 0, 2, -1, 0, 0, 0}, {0, -1, -1, 2, -1, 0, 0},
                            {0, 0, 0, -1, 2, -1, 0}, {0, 0, 0, 0, -1, 2, -1},
                            {0, 0, 0, 0, 0, -1, 2}};
    auto cm = rd.cartan_matrix(order);
    rep.cartan_matrix_is_e7 = true;
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j)
            if (std::abs(cm[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
                         e7cm[i][j]) > 1e-7)
                rep.cartan_matrix_is_e7 = false;
    if (!rep.cartan_matrix_is_e7)
        throw Error(ErrorKind::WrongType, "Cartan matrix is not of type E7");

    int hi = rd.highest_root_index(order);
    rep.longest_coefficients =
        rd.simple_coefficients(rd.roots[static_cast<std::size_t>(hi)], order);

    // Fundamental weights from the inverse Cartan matrix; duality check.
    Eigen::MatrixXd A(7, 7), CM(7, 7);
    for (int i = 0; i < 7; ++i) {
        for (int k = 0; k < 7; ++k)
            A(k, i) = rd.roots[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])]
                              [static_cast<std::size_t>(k)];
        for (int j = 0; j < 7; ++j)
            CM(i, j) = cm[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    // lambda^j = sum_i (C^{-1})_{ij} alpha_i  (all roots have |alpha|^2 = 2)
    Eigen::MatrixXd lam = A * CM.inverse();
    double worst = 0;
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) {
            double hook = 2.0 * A.col(i).dot(lam.col(j)) / A.col(i).squaredNorm();
            worst = std::max(worst, std::abs(hook - (i == j ? 1.0 : 0.0)));
        }
    rep.weight_duality_residual = worst;
    return rep;
}

EviRootReport restricted_roots_evi(const EviSet& evi) {
    EviRootReport rep;
    std::vector<int> cartan;
    for (int s : evi.h4) cartan.push_back(s - 1);
    rep.datum = extract_roots(evi.set, cartan);

    for (std::size_t r = 0; r < rep.datum.roots.size(); ++r) {
        if (!rep.datum.positive[r]) continue;
        double n2 = dot(rep.datum.roots[r], rep.datum.roots[r]);
        int m = rep.datum.multiplicities[r];
        rep.multiplicity_sum += m;
        if (std::abs(n2 - 2.0) < 1e-6 && m == 1)
            ++rep.long_positive;
        else if (std::abs(n2 - 1.0) < 1e-6 && m == 4)
            ++rep.short_positive;
        else
            throw Error(ErrorKind::WrongType, "restricted root outside the F4 pattern");
    }

    std::vector<int> simple = rep.datum.simple_indices();
    if (simple.size() != 4) throw Error(ErrorKind::WrongType, "restricted simple system != 4");

    // F4 Cartan matrix in the display order: chain a3 - a1 - a2 - a4 with
    // norms (1, 1, 2, 2); order the computed simple roots to match the
    // displayed alphas via the Dynkin structure.
    const std::vector<std::vector<double>> target = {{0.5, -0.5, -0.5, 0.5},
                                                     {0, 0, 1, -1},
                                                     {-1, 0, 0, 0},
                                                     {0, 1, -1, 0}};
    // Determine the matching by graph position: alpha3 short end, alpha1
    // short middle, alpha2 long middle, alpha4 long end.
    auto norm2 = [&](int i) {
        return dot(rep.datum.roots[static_cast<std::size_t>(i)],
                   rep.datum.roots[static_cast<std::size_t>(i)]);
    };
    auto adjacent = [&](int i, int j) {
        return std::abs(dot(rep.datum.roots[static_cast<std::size_t>(i)],
                            rep.datum.roots[static_cast<std::size_t>(j)])) > 1e-6;
    };
    int a1 = -1, a2 = -1, a3 = -1, a4 = -1;
    for (int i : simple) {
        int nbrs = 0;
        for (int j : simple)
            if (j != i && adjacent(i, j)) ++nbrs;
        bool shrt = std::abs(norm2(i) - 1.0) < 1e-6;
        if (shrt && nbrs == 1) a3 = i;
        if (shrt && nbrs == 2) a1 = i;
        if (!shrt && nbrs == 2) a2 = i;
        if (!shrt && nbrs == 1) a4 = i;
    }
    if (a1 < 0 || a2 < 0 || a3 < 0 || a4 < 0)
        throw Error(ErrorKind::WrongType, "restricted system is not an F4 chain");
    std::vector<int> order{a1, a2, a3, a4};

    const int f4cm[4][4] = {{2, -1, -1, 0}, {-2, 2, 0, -1}, {-1, 0, 2, 0}, {0, -1, 0, 2}};
    auto cm = rep.datum.cartan_matrix(order);
    rep.f4_cartan = true;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (std::abs(cm[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
                         f4cm[i][j]) > 1e-7)
                rep.f4_cartan = false;

    int hi = rep.datum.highest_root_index(order);
    rep.longest_coefficients =
        rep.datum.simple_coefficients(rep.datum.roots[static_cast<std::size_t>(hi)], order);

    // Orthogonal frame aligning computed simple roots with the display.
    Eigen::MatrixXd S(4, 4), T(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) {
            S(k, i) = rep.datum.roots[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])]
                                     [static_cast<std::size_t>(k)];
            T(k, i) = target[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
        }
    Eigen::MatrixXd R = T * S.inverse();
    if ((R * R.transpose() - Eigen::MatrixXd::Identity(4, 4)).cwiseAbs().maxCoeff() > 1e-7)
        throw Error(ErrorKind::WrongType, "frame alignment is not orthogonal");
    rep.frame.assign(4, std::vector<double>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) rep.frame[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = R(i, j);
    return rep;
}

CommutantReport commutant_evi(const EviSet& evi) {
    CommutantReport rep;
    const int nu5 = 69;

    // Kernel of X -> [X, T_k] within the compact subalgebra, over the
    // structure constants of the L basis.
    StructureConstants sc = structure_constants(evi.set);
    Eigen::MatrixXd rows(4 * 133, nu5);
    for (int e = 0; e < nu5; ++e)
        for (int t = 0; t < 4; ++t)
            for (int C = 0; C < 133; ++C)
                rows(t * 133 + C, e) = sc.at(e, evi.h4[static_cast<std::size_t>(t)] - 1, C);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(rows);
    lu.setThreshold(1e-8);
    Eigen::MatrixXd ker = lu.kernel();
    rep.dim = static_cast<int>(ker.cols());
    if (rep.dim != 9)
        throw Error(ErrorKind::DimensionMismatch,
                    "torus commutant dimension " + std::to_string(rep.dim));

    // Orthonormalize the kernel columns and assemble the 56-dim matrices.
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(ker);
    Eigen::MatrixXd Q = qr.householderQ() * Eigen::MatrixXd::Identity(nu5, rep.dim);
    rep.algebra.construction = Construction::Evi;
    rep.algebra.rep_dim = 56;
    for (int k = 0; k < rep.dim; ++k) {
        Mat m = Mat::Zero(56, 56);
        for (int e = 0; e < nu5; ++e) m += Q(e, k) * evi.set.mats[static_cast<std::size_t>(e)];
        rep.algebra.mats.push_back(m);
        rep.algebra.labels.push_back("K" + std::to_string(k + 1));
    }

    // Membership of the distinguished combinations: convert their Y
    // coordinates to L coordinates and project on the kernel.
    double worst = 0;
    std::vector<Eigen::VectorXd> mvecs;
    for (const auto& combo : evi.ideal_combos) {
        Eigen::VectorXd v(nu5);
        for (int b = 0; b < nu5; ++b) {
            double s = 0;
            for (int k = 0; k < 133; ++k) {
                const ExactScalar& c1 = evi.coeffs[static_cast<std::size_t>(b)][static_cast<std::size_t>(k)];
                const ExactScalar& c2 = combo[static_cast<std::size_t>(k)];
                if (!c1.is_zero() && !c2.is_zero()) s += (c1 * c2).embed().real();
            }
            v(b) = s;
        }
        Eigen::VectorXd resid = v - Q * (Q.transpose() * v);
        worst = std::max(worst, resid.cwiseAbs().maxCoeff());
        mvecs.push_back(v);
    }
    rep.m_membership_residual = worst;

    // Killing form and minimal ideals of the 9-dimensional algebra.
    StructureConstants k9 = structure_constants(rep.algebra, 1e-8);
    Eigen::MatrixXd K(9, 9);
    for (int a = 0; a < 9; ++a)
        for (int b = 0; b < 9; ++b) {
            double s = 0;
            for (int c = 0; c < 9; ++c)
                for (int d = 0; d < 9; ++d) s += k9.at(a, c, d) * k9.at(b, d, c);
            K(a, b) = s;
        }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> kes(K);
    rep.killing_negative_definite = kes.eigenvalues().maxCoeff() < -1e-6;

    // Centroid: T with T[x,y] = [Tx,y]; eigenspaces of a generic centroid
    // element are the minimal ideals.
    Eigen::MatrixXd centro(81 * 9, 81);
    centro.setZero();
    // unknown T as 9x9; equations over all pairs (x=e_a, y=e_b), comps D:
    // sum_e T(e,a) c_{e b}^D - sum_e c_{a b}^e T(D, e) = 0
    {
        int row = 0;
        for (int a = 0; a < 9; ++a)
            for (int b = 0; b < 9; ++b)
                for (int D = 0; D < 9; ++D) {
                    for (int e = 0; e < 9; ++e) {
                        centro(row, e * 9 + a) += k9.at(e, b, D);
                        centro(row, D * 9 + e) -= k9.at(a, b, e);
                    }
                    ++row;
                }
    }
    Eigen::FullPivLU<Eigen::MatrixXd> clu(centro);
    clu.setThreshold(1e-8);
    Eigen::MatrixXd cker = clu.kernel();
    // generic centroid element
    Eigen::MatrixXd Tgen = Eigen::MatrixXd::Zero(9, 9);
    for (int k = 0; k < cker.cols(); ++k) {
        double w = 1.0 / (2.0 + k);
        for (int i = 0; i < 9; ++i)
            for (int j = 0; j < 9; ++j) Tgen(i, j) += w * cker(i * 9 + j, k);
    }
    Eigen::EigenSolver<Eigen::MatrixXd> tes(Tgen);
    // cluster eigenvalues
    std::vector<double> evs;
    for (int k = 0; k < 9; ++k) evs.push_back(tes.eigenvalues()(k).real());
    std::vector<double> centers;
    std::vector<int> sizes;
    for (double v : evs) {
        bool merged = false;
        for (std::size_t c = 0; c < centers.size(); ++c)
            if (std::abs(centers[c] - v) < 1e-6) {
                ++sizes[c];
                merged = true;
                break;
            }
        if (!merged) {
            centers.push_back(v);
            sizes.push_back(1);
        }
    }
    rep.minimal_ideal_dims = sizes;
    std::sort(rep.minimal_ideal_dims.begin(), rep.minimal_ideal_dims.end());

    // Which ideal contains M7: project M7 (in the Q frame) on each
    // eigenspace.
    if (!mvecs.empty()) {
        Eigen::VectorXd m7q = Q.transpose() * mvecs[0];
        double best = -1;
        for (std::size_t c = 0; c < centers.size(); ++c) {
            Eigen::VectorXd proj = Eigen::VectorXd::Zero(9);
            for (int k = 0; k < 9; ++k) {
                if (std::abs(tes.eigenvalues()(k).real() - centers[c]) < 1e-6) {
                    Eigen::VectorXd ev = tes.eigenvectors().col(k).real();
                    ev.normalize();
                    proj += ev * ev.dot(m7q);
                }
            }
            double mass = proj.norm();
            if (mass > best) {
                best = mass;
                rep.ideal_of_m7 = static_cast<int>(c);
            }
        }
    }
    return rep;
}

} // namespace e7f
