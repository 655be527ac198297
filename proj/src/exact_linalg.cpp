#include "e7forge/exact_linalg.hpp"

namespace e7f {

ExactMatrix ExactMatrix::identity(int n) {
    ExactMatrix m(n, n);
    for (int k = 0; k < n; ++k) m.at(k, k) = ExactScalar::one();
    return m;
}

bool ExactMatrix::is_zero() const {
    for (const auto& s : a_)
        if (!s.is_zero()) return false;
    return true;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
    ExactMatrix r(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
    return r;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
    ExactMatrix r(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
    return r;
}

ExactMatrix ExactMatrix::operator-() const {
    ExactMatrix r(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = -a_[k];
    return r;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    ExactMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const ExactScalar& x = at(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const ExactScalar& y = o.at(k, j);
                if (y.is_zero()) continue;
                r.at(i, j) += x * y;
            }
        }
    return r;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

ExactMatrix ExactMatrix::conj_transpose() const {
    ExactMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j).conj();
    return r;
}

ExactScalar ExactMatrix::trace() const {
    ExactScalar t;
    for (int k = 0; k < rows_; ++k) t += at(k, k);
    return t;
}

Eigen::MatrixXcd ExactMatrix::embed() const {
    Eigen::MatrixXcd m(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m(i, j) = at(i, j).embed();
    return m;
}

ExactMatrix operator*(const ExactScalar& s, const ExactMatrix& m) {
    ExactMatrix r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero()) r.at(i, j) = s * m.at(i, j);
    return r;
}

ExactMatrix commutator(const ExactMatrix& x, const ExactMatrix& y) {
    return x * y - y * x;
}

ExactScalar trace_product(const ExactMatrix& x, const ExactMatrix& y) {
    ExactScalar t;
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j) {
            const ExactScalar& a = x.at(i, j);
            if (a.is_zero()) continue;
            const ExactScalar& b = y.at(j, i);
            if (b.is_zero()) continue;
            t += a * b;
        }
    return t;
}

std::vector<int> rref(ExactMatrix& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int pivot = -1;
        for (int r = row; r < m.rows(); ++r)
            if (!m.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != row)
            for (int c = 0; c < m.cols(); ++c) std::swap(m.at(pivot, c), m.at(row, c));
        ExactScalar inv = m.at(row, col).inverse();
        for (int c = 0; c < m.cols(); ++c)
            if (!m.at(row, c).is_zero()) m.at(row, c) = inv * m.at(row, c);
        for (int r = 0; r < m.rows(); ++r) {
            if (r == row || m.at(r, col).is_zero()) continue;
            ExactScalar f = m.at(r, col);
            for (int c = 0; c < m.cols(); ++c)
                if (!m.at(row, c).is_zero()) m.at(r, c) -= f * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::vector<std::vector<ExactScalar>> kernel_basis(const ExactMatrix& m) {
    ExactMatrix r = m;
    std::vector<int> pivots = rref(r);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;

    std::vector<std::vector<ExactScalar>> basis;
    for (int free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[static_cast<std::size_t>(free_col)]) continue;
        std::vector<ExactScalar> v(static_cast<std::size_t>(m.cols()));
        v[static_cast<std::size_t>(free_col)] = ExactScalar::one();
        for (std::size_t prow = 0; prow < pivots.size(); ++prow)
            v[static_cast<std::size_t>(pivots[prow])] =
                -r.at(static_cast<int>(prow), free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace e7f
