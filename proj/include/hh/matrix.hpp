#pragma once

#include "hh/field.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hh {

using Vector = std::vector<Scalar>;

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, Field f);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return field_; }

    Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector column(std::size_t c) const;
    Vector apply(const Vector& x) const;
    Matrix transpose() const;
    Matrix operator*(const Matrix& o) const;
    bool is_zero() const;

    static Matrix identity(std::size_t n, Field f);
    static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows, Field f);

private:
    std::size_t rows_ = 0, cols_ = 0;
    Field field_;
    std::vector<Scalar> data_;
};

// Reduced row echelon data; columns scanned left to right, pivot row = first nonzero.
struct Echelon {
    std::vector<std::vector<Scalar>> rows;  // the rank nonzero RREF rows
    std::vector<std::size_t> pivots;        // pivot column of each row
    std::size_t cols = 0;
};

Echelon row_reduce(const Matrix& A);

struct RankNullspace {
    std::size_t rank = 0;
    std::vector<Vector> nullspace;
};

RankNullspace rank_nullspace(const Matrix& A);
std::size_t rank(const Matrix& A);
// indices of the pivot columns of A (a basis of the column space taken from A itself)
std::vector<std::size_t> pivot_columns(const Matrix& A);
std::optional<Vector> solve_linear(const Matrix& A, const Vector& b);

bool is_zero(const Vector& v);

// Solves A x = b for many right-hand sides. Stores E with E*A in reduced row echelon
// form; the answer has free variables set to zero.
class LinearSolver {
public:
    LinearSolver() = default;
    explicit LinearSolver(const Matrix& A);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t rank() const { return pivots_.size(); }

    // sparse right-hand side given as (row, value) pairs
    std::optional<std::vector<std::pair<std::size_t, Scalar>>> solve_sparse(
        const std::vector<std::pair<std::size_t, Scalar>>& b) const;
    std::optional<Vector> solve(const Vector& b) const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    Field field_;
    std::vector<std::size_t> pivots_;
    // column k of the transformation restricted to pivot rows: (pivot index, value)
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> ecols_;
    // E restricted to non-pivot rows, same layout; used for the consistency test
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> zcols_;
};

// Incremental row echelon form over sparse rows. Used for rank computations on
// large, very sparse maps (bimodule differentials, bar complex).
class SparseEchelon {
public:
    using Row = std::vector<std::pair<std::size_t, Scalar>>;  // sorted by column

    explicit SparseEchelon(std::size_t cols) : pivot_of_(cols, npos) {}

    // returns true if the row was independent of those inserted so far
    bool insert(Row row);
    std::size_t rank() const { return rows_.size(); }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::vector<std::size_t> pivot_of_;
    std::vector<Row> rows_;
};

}  // namespace hh
