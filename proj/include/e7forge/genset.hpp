#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "e7forge/exact.hpp"
#include "e7forge/linalg.hpp"

namespace e7f {

enum class Construction { Tits, Split, Evi };

inline const char* construction_name(Construction c) {
    switch (c) {
        case Construction::Tits: return "tits";
        case Construction::Split: return "split";
        case Construction::Evi: return "evi";
    }
    return "?";
}

std::optional<Construction> construction_from_name(const std::string& s);

/// Sparse matrix with exact entries (row, col, value), row-major sorted.
struct SparseExactMatrix {
    int dim = 0;
    std::vector<std::tuple<int, int, ExactScalar>> entries;

    void add(int r, int c, const ExactScalar& v) {
        if (!v.is_zero()) entries.emplace_back(r, c, v);
    }
    void sort_entries();
    /// Merge duplicate slots and drop exact zeros; leaves entries sorted.
    void normalize();
    Mat embed() const;
    bool is_zero() const;
};

SparseExactMatrix sparse_mul(const SparseExactMatrix& a, const SparseExactMatrix& b);
SparseExactMatrix sparse_commutator(const SparseExactMatrix& a, const SparseExactMatrix& b);
/// a + s*b
SparseExactMatrix sparse_axpy(const SparseExactMatrix& a, const ExactScalar& s,
                              const SparseExactMatrix& b);
SparseExactMatrix sparse_scale(const ExactScalar& s, const SparseExactMatrix& a);
ExactScalar sparse_trace_product(const SparseExactMatrix& a, const SparseExactMatrix& b);
bool sparse_equal(const SparseExactMatrix& a, const SparseExactMatrix& b);

/// Ordered list of generator matrices with metadata.  `exact` carries the
/// same matrices entry-exactly when the construction permits it.
struct GeneratorSet {
    Construction construction = Construction::Tits;
    int rep_dim = 56; // representation the matrices act on (56 or 133)
    std::vector<std::string> labels;
    std::vector<Mat> mats;
    std::vector<SparseExactMatrix> exact;

    int count() const { return static_cast<int>(mats.size()); }
    bool has_exact() const { return exact.size() == mats.size(); }
    /// Normalization nu of the invariant product <X,Y> = -tr(XY)/nu.
    double inner_norm() const { return rep_dim == 133 ? 36.0 : 12.0; }
};

struct StructureConstants {
    int n = 0;
    std::vector<double> c; // c[(A*n + B)*n + C]
    double worst_residual = 0;

    double at(int A, int B, int C) const {
        return c[(static_cast<std::size_t>(A) * static_cast<std::size_t>(n) +
                  static_cast<std::size_t>(B)) *
                     static_cast<std::size_t>(n) +
                 static_cast<std::size_t>(C)];
    }
};

/// Expand all commutators in the span of the generators by least squares
/// against the exact Gram matrix.  Throws NotClosed when the reconstruction
/// residual exceeds `tol`.
StructureConstants structure_constants(const GeneratorSet& g, double tol = 1e-10);

/// Signature (n_plus, n_minus) of the Killing form K(X,Y) = tr(ad X ad Y)
/// computed from the structure constants.
std::pair<int, int> killing_signature(const GeneratorSet& g);

/// Same signature from the invariant trace form -Re tr(g_A g_B); agrees with
/// killing_signature for every simple real form and is much cheaper.
std::pair<int, int> trace_form_signature(const GeneratorSet& g);

/// Multiplies the complement of `compact_subset` (0-based indices) by i.
/// Throws NotSubalgebra if the subset does not close under the bracket.
GeneratorSet weyl_trick(const GeneratorSet& g, const std::vector<int>& compact_subset);

/// Max Jacobi residual of a structure-constant tensor over the given index
/// triples.
double jacobi_residual(const StructureConstants& sc, const std::vector<std::array<int, 3>>& triples);

/// Deterministic triple sample: `count` seeded pseudo-random triples plus the
/// exhaustive block over the `low` lowest indices.
std::vector<std::array<int, 3>> jacobi_triples(int n, int count, int low, std::uint64_t seed);

/// All unordered triples (exhaustive mode).
std::vector<std::array<int, 3>> all_triples(int n);

} // namespace e7f
