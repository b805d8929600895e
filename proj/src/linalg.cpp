#include "wha/linalg.hpp"

#include <utility>

namespace wha {

Matrix::Matrix(int level, int rows, int cols)
    : level_(level), rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

Matrix Matrix::identity(int level, int n) {
    Matrix m(level, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = CycloScalar(level, 1);
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(level_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw InputError("matrix product: shape mismatch");
    Matrix c(a.level_ ? a.level_ : b.level_, a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const auto& x = a.at(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j)
                if (!b.at(k, j).is_zero()) c.at(i, j) += x * b.at(k, j);
        }
    return c;
}

Matrix operator*(const CycloScalar& c, Matrix m) {
    for (auto& x : m.data_) x = c * x;
    return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix difference: shape mismatch");
    Matrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
    return c;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix row_reduce(Matrix m, std::vector<int>* pivots) {
    int row = 0;
    if (pivots) pivots->clear();
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int sel = -1;
        for (int i = row; i < m.rows(); ++i)
            if (!m.at(i, col).is_zero()) { sel = i; break; }
        if (sel < 0) continue;
        for (int j = 0; j < m.cols(); ++j) std::swap(m.at(row, j), m.at(sel, j));
        CycloScalar inv = m.at(row, col).inverse();
        for (int j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            CycloScalar f = m.at(i, col);
            for (int j = col; j < m.cols(); ++j)
                if (!m.at(row, j).is_zero()) m.at(i, j) -= f * m.at(row, j);
        }
        if (pivots) pivots->push_back(col);
        ++row;
    }
    return m;
}

int rank(const Matrix& m) {
    std::vector<int> piv;
    row_reduce(m, &piv);
    return static_cast<int>(piv.size());
}

CycloScalar determinant(Matrix m) {
    if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
    const int n = m.rows();
    CycloScalar det(m.level(), 1);
    for (int col = 0; col < n; ++col) {
        int sel = -1;
        for (int i = col; i < n; ++i)
            if (!m.at(i, col).is_zero()) { sel = i; break; }
        if (sel < 0) return CycloScalar(m.level(), 0);
        if (sel != col) {
            for (int j = 0; j < n; ++j) std::swap(m.at(col, j), m.at(sel, j));
            det = -det;
        }
        det *= m.at(col, col);
        CycloScalar inv = m.at(col, col).inverse();
        for (int i = col + 1; i < n; ++i) {
            if (m.at(i, col).is_zero()) continue;
            CycloScalar f = m.at(i, col) * inv;
            for (int j = col; j < n; ++j)
                if (!m.at(col, j).is_zero()) m.at(i, j) -= f * m.at(col, j);
        }
    }
    return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    const int n = m.rows();
    Matrix aug(m.level(), n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = CycloScalar(m.level(), 1);
    }
    std::vector<int> piv;
    aug = row_reduce(aug, &piv);
    if (static_cast<int>(piv.size()) < n || piv[n - 1] != n - 1) return std::nullopt;
    Matrix out(m.level(), n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
    return out;
}

ImageBasis column_space(const Matrix& m) {
    std::vector<int> piv;
    Matrix red = row_reduce(m.transpose(), &piv);
    const int k = static_cast<int>(piv.size());
    ImageBasis out{Matrix(m.level(), m.rows(), k), piv};
    for (int c = 0; c < k; ++c)
        for (int i = 0; i < m.rows(); ++i) out.basis.at(i, c) = red.at(c, i);
    return out;
}

std::vector<CycloScalar> ImageBasis::coordinates(const std::vector<CycloScalar>& v) const {
    std::vector<CycloScalar> out;
    out.reserve(pivot_rows.size());
    for (int p : pivot_rows) out.push_back(v.at(p));
    return out;
}

}  // namespace wha
