#include "e7forge/genset.hpp"

#include <algorithm>

#include <Eigen/Eigenvalues>

#include "e7forge/errors.hpp"
#include "e7forge/parallel.hpp"
#include "e7forge/prng.hpp"

namespace e7f {

std::optional<Construction> construction_from_name(const std::string& s) {
    if (s == "tits") return Construction::Tits;
    if (s == "split") return Construction::Split;
    if (s == "evi") return Construction::Evi;
    return std::nullopt;
}

void SparseExactMatrix::sort_entries() {
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
        if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
        return std::get<1>(a) < std::get<1>(b);
    });
}

Mat SparseExactMatrix::embed() const {
    Mat m = Mat::Zero(dim, dim);
    for (const auto& [r, c, v] : entries) m(r, c) += v.embed();
    return m;
}

void SparseExactMatrix::normalize() {
    sort_entries();
    std::vector<std::tuple<int, int, ExactScalar>> merged;
    for (auto& e : entries) {
        if (!merged.empty() && std::get<0>(merged.back()) == std::get<0>(e) &&
            std::get<1>(merged.back()) == std::get<1>(e)) {
            std::get<2>(merged.back()) += std::get<2>(e);
        } else {
            merged.push_back(e);
        }
    }
    entries.clear();
    for (auto& e : merged)
        if (!std::get<2>(e).is_zero()) entries.push_back(std::move(e));
}

bool SparseExactMatrix::is_zero() const {
    for (const auto& [r, c, v] : entries)
        if (!v.is_zero()) return false;
    return true;
}

SparseExactMatrix sparse_mul(const SparseExactMatrix& a, const SparseExactMatrix& b) {
    // rows of b indexed by leading index for the inner join
    std::vector<std::vector<std::pair<int, const ExactScalar*>>> brows(
        static_cast<std::size_t>(b.dim));
    for (const auto& [r, c, v] : b.entries) brows[static_cast<std::size_t>(r)].emplace_back(c, &v);
    SparseExactMatrix out;
    out.dim = a.dim;
    for (const auto& [r, k, v] : a.entries)
        for (const auto& [c, w] : brows[static_cast<std::size_t>(k)])
            out.entries.emplace_back(r, c, v * (*w));
    out.normalize();
    return out;
}

SparseExactMatrix sparse_scale(const ExactScalar& s, const SparseExactMatrix& a) {
    SparseExactMatrix out;
    out.dim = a.dim;
    for (const auto& [r, c, v] : a.entries) out.add(r, c, s * v);
    return out;
}

SparseExactMatrix sparse_axpy(const SparseExactMatrix& a, const ExactScalar& s,
                              const SparseExactMatrix& b) {
    SparseExactMatrix out = a;
    for (const auto& [r, c, v] : b.entries) out.entries.emplace_back(r, c, s * v);
    out.normalize();
    return out;
}

SparseExactMatrix sparse_commutator(const SparseExactMatrix& a, const SparseExactMatrix& b) {
    return sparse_axpy(sparse_mul(a, b), ExactScalar(-1), sparse_mul(b, a));
}

ExactScalar sparse_trace_product(const SparseExactMatrix& a, const SparseExactMatrix& b) {
    std::vector<std::vector<std::pair<int, const ExactScalar*>>> brows(
        static_cast<std::size_t>(b.dim));
    for (const auto& [r, c, v] : b.entries) brows[static_cast<std::size_t>(r)].emplace_back(c, &v);
    ExactScalar t;
    for (const auto& [r, c, v] : a.entries)
        for (const auto& [c2, w] : brows[static_cast<std::size_t>(c)])
            if (c2 == r) t += v * (*w);
    return t;
}

bool sparse_equal(const SparseExactMatrix& a, const SparseExactMatrix& b) {
    return sparse_axpy(a, ExactScalar(-1), b).is_zero();
}

namespace {

// Rows of F: vec(g_C) as flat vectors; F^H F and F^H x drive both the
// coefficient solve and the residual.
struct FlatBasis {
    int n = 0;
    Eigen::Index d2 = 0;
    Eigen::MatrixXcd rows; // n x d2
    Eigen::LDLT<Eigen::MatrixXcd> gram;

    explicit FlatBasis(const GeneratorSet& g) {
        n = g.count();
        d2 = static_cast<Eigen::Index>(g.rep_dim) * g.rep_dim;
        rows.resize(n, d2);
        for (int k = 0; k < n; ++k)
            rows.row(k) = Eigen::Map<const Eigen::VectorXcd>(g.mats[static_cast<std::size_t>(k)].data(), d2).transpose();
        Eigen::MatrixXcd G = rows.conjugate() * rows.transpose();
        gram.compute(G);
    }
};

} // namespace

StructureConstants structure_constants(const GeneratorSet& g, double tol) {
    const int n = g.count();
    StructureConstants sc;
    sc.n = n;
    sc.c.assign(static_cast<std::size_t>(n) * n * n, 0.0);

    FlatBasis F(g);

    std::vector<double> residuals(static_cast<std::size_t>(n), 0.0);
    parallel_for(n, [&](long A) {
        double worst = 0;
        for (int B = A + 1; B < n; ++B) {
            Mat X = comm(g.mats[static_cast<std::size_t>(A)], g.mats[static_cast<std::size_t>(B)]);
            Eigen::Map<const Eigen::VectorXcd> x(X.data(), F.d2);
            Eigen::VectorXcd proj = F.rows.conjugate() * x; // F^H x
            Eigen::VectorXcd coef = F.gram.solve(proj);
            double imag = coef.imag().cwiseAbs().maxCoeff();
            double resid = (x - F.rows.transpose() * coef).cwiseAbs().maxCoeff();
            worst = std::max(worst, std::max(resid, imag));
            for (int C = 0; C < n; ++C) {
                double v = coef(C).real();
                sc.c[(static_cast<std::size_t>(A) * n + static_cast<std::size_t>(B)) * n +
                     static_cast<std::size_t>(C)] = v;
                sc.c[(static_cast<std::size_t>(B) * n + static_cast<std::size_t>(A)) * n +
                     static_cast<std::size_t>(C)] = -v;
            }
        }
        residuals[static_cast<std::size_t>(A)] = worst;
    });

    sc.worst_residual = *std::max_element(residuals.begin(), residuals.end());
    if (sc.worst_residual > tol)
        throw Error(ErrorKind::NotClosed, "commutator reconstruction residual " +
                                              std::to_string(sc.worst_residual));
    return sc;
}

std::pair<int, int> killing_signature(const GeneratorSet& g) {
    StructureConstants sc = structure_constants(g);
    const int n = sc.n;
    Eigen::MatrixXd K = Eigen::MatrixXd::Zero(n, n);
    parallel_for(n, [&](long A) {
        for (int B = A; B < n; ++B) {
            double v = 0;
            for (int C = 0; C < n; ++C)
                for (int D = 0; D < n; ++D)
                    v += sc.at(static_cast<int>(A), C, D) * sc.at(B, D, C);
            K(A, B) = v;
            K(B, A) = v;
        }
    });
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(K);
    double scale = es.eigenvalues().cwiseAbs().maxCoeff();
    int plus = 0, minus = 0;
    for (int k = 0; k < n; ++k) {
        double lam = es.eigenvalues()(k);
        if (lam > 1e-9 * scale)
            ++plus;
        else if (lam < -1e-9 * scale)
            ++minus;
    }
    return {plus, minus};
}

std::pair<int, int> trace_form_signature(const GeneratorSet& g) {
    const int n = g.count();
    Eigen::MatrixXd B(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) {
            double v = (g.mats[static_cast<std::size_t>(a)] * g.mats[static_cast<std::size_t>(b)])
                           .trace()
                           .real();
            B(a, b) = v;
            B(b, a) = v;
        }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(B);
    double scale = es.eigenvalues().cwiseAbs().maxCoeff();
    int plus = 0, minus = 0;
    for (int k = 0; k < n; ++k) {
        double lam = es.eigenvalues()(k);
        if (lam > 1e-9 * scale)
            ++plus;
        else if (lam < -1e-9 * scale)
            ++minus;
    }
    return {plus, minus};
}

GeneratorSet weyl_trick(const GeneratorSet& g, const std::vector<int>& compact_subset) {
    // Closure check of the subset: expand subset commutators in the subset.
    GeneratorSet sub;
    sub.construction = g.construction;
    sub.rep_dim = g.rep_dim;
    for (int k : compact_subset) {
        sub.mats.push_back(g.mats[static_cast<std::size_t>(k)]);
        sub.labels.push_back(g.labels.empty() ? "" : g.labels[static_cast<std::size_t>(k)]);
    }
    try {
        structure_constants(sub, 1e-8);
    } catch (const Error&) {
        throw Error(ErrorKind::NotSubalgebra, "compact subset does not close under the bracket");
    }

    std::vector<bool> keep(static_cast<std::size_t>(g.count()), false);
    for (int k : compact_subset) keep[static_cast<std::size_t>(k)] = true;

    GeneratorSet out;
    out.construction = g.construction;
    out.rep_dim = g.rep_dim;
    out.labels = g.labels;
    out.mats.reserve(g.mats.size());
    for (int k = 0; k < g.count(); ++k) {
        if (keep[static_cast<std::size_t>(k)])
            out.mats.push_back(g.mats[static_cast<std::size_t>(k)]);
        else
            out.mats.push_back(Cplx(0, 1) * g.mats[static_cast<std::size_t>(k)]);
    }
    return out;
}

double jacobi_residual(const StructureConstants& sc,
                       const std::vector<std::array<int, 3>>& triples) {
    const int n = sc.n;
    std::vector<double> worst(triples.size(), 0.0);
    parallel_for(static_cast<long>(triples.size()), [&](long t) {
        auto [A, B, C] = triples[static_cast<std::size_t>(t)];
        double w = 0;
        for (int D = 0; D < n; ++D) {
            double s = 0;
            for (int E = 0; E < n; ++E) {
                s += sc.at(A, B, E) * sc.at(E, C, D);
                s += sc.at(C, A, E) * sc.at(E, B, D);
                s += sc.at(B, C, E) * sc.at(E, A, D);
            }
            w = std::max(w, std::abs(s));
        }
        worst[static_cast<std::size_t>(t)] = w;
    });
    return triples.empty() ? 0.0 : *std::max_element(worst.begin(), worst.end());
}

std::vector<std::array<int, 3>> jacobi_triples(int n, int count, int low, std::uint64_t seed) {
    std::vector<std::array<int, 3>> out;
    out.reserve(static_cast<std::size_t>(count) + 200);
    for (int a = 0; a < low; ++a)
        for (int b = a + 1; b < low; ++b)
            for (int c = b + 1; c < low; ++c) out.push_back({a, b, c});
    Prng rng(seed);
    for (int k = 0; k < count; ++k) {
        int a = rng.uniform_int(n), b = rng.uniform_int(n), c = rng.uniform_int(n);
        out.push_back({a, b, c});
    }
    return out;
}

std::vector<std::array<int, 3>> all_triples(int n) {
    std::vector<std::array<int, 3>> out;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) out.push_back({a, b, c});
    return out;
}

} // namespace e7f
