#pragma once

#include <vector>

#include <Eigen/Dense>

#include "e7forge/exact.hpp"

namespace e7f {

/// Dense matrix over ExactScalar.  Multiplication skips zero entries, which
/// keeps the sparse generator matrices cheap without a separate sparse type.
class ExactMatrix {
  public:
    ExactMatrix() = default;
    ExactMatrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {}

    static ExactMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    ExactScalar& at(int r, int c) {
        return a_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
                  static_cast<std::size_t>(c)];
    }
    const ExactScalar& at(int r, int c) const {
        return a_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
                  static_cast<std::size_t>(c)];
    }

    bool is_zero() const;
    bool operator==(const ExactMatrix& o) const { return rows_ == o.rows_ && a_ == o.a_; }

    ExactMatrix operator+(const ExactMatrix& o) const;
    ExactMatrix operator-(const ExactMatrix& o) const;
    ExactMatrix operator-() const;
    ExactMatrix operator*(const ExactMatrix& o) const;
    ExactMatrix transpose() const;
    ExactMatrix conj_transpose() const;

    ExactScalar trace() const;

    Eigen::MatrixXcd embed() const;

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<ExactScalar> a_;
};

ExactMatrix operator*(const ExactScalar& s, const ExactMatrix& m);
ExactMatrix commutator(const ExactMatrix& x, const ExactMatrix& y);
/// tr(x y) with zero skipping.
ExactScalar trace_product(const ExactMatrix& x, const ExactMatrix& y);

/// Reduced row echelon form in place; returns pivot column indices.
std::vector<int> rref(ExactMatrix& m);
/// Basis of the right kernel of m (as column vectors).
std::vector<std::vector<ExactScalar>> kernel_basis(const ExactMatrix& m);

} // namespace e7f
