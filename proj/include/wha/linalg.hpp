#pragma once

#include <optional>
#include <vector>

#include "wha/cyclo.hpp"

namespace wha {

// Dense row-major matrix over Q(A).
class Matrix {
public:
    Matrix() = default;
    Matrix(int level, int rows, int cols);
    static Matrix identity(int level, int n);

    int level() const { return level_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    CycloScalar& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const CycloScalar& at(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    Matrix transpose() const;
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const CycloScalar& c, Matrix m);
    bool operator==(const Matrix& o) const;
    bool is_zero() const;

private:
    int level_ = 0;
    int rows_ = 0;
    int cols_ = 0;
    std::vector<CycloScalar> data_;
};

// Reduced row echelon form; pivot columns returned in order.
Matrix row_reduce(Matrix m, std::vector<int>* pivots = nullptr);
int rank(const Matrix& m);
CycloScalar determinant(Matrix m);
std::optional<Matrix> inverse(const Matrix& m);

// Column space basis from the reduced echelon form of the transpose: the
// returned columns are the identity on the pivot rows, so selecting those
// rows is a left inverse on the image.
struct ImageBasis {
    Matrix basis;                  // rows x k
    std::vector<int> pivot_rows;   // k entries
    // Coordinates of a vector lying in the image.
    std::vector<CycloScalar> coordinates(const std::vector<CycloScalar>& v) const;
};
ImageBasis column_space(const Matrix& m);

}  // namespace wha
