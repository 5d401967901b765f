#include "hh/matrix.hpp"

#include <algorithm>

namespace hh {

Matrix::Matrix(std::size_t rows, std::size_t cols, Field f)
    : rows_(rows), cols_(cols), field_(f), data_(rows * cols, f.zero()) {}

Vector Matrix::column(std::size_t c) const {
    Vector v(rows_, field_.zero());
    for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

Vector Matrix::apply(const Vector& x) const {
    if (x.size() != cols_) throw DimensionMismatch("matrix-vector size mismatch");
    Vector y(rows_, field_.zero());
    for (std::size_t c = 0; c < cols_; ++c) {
        if (x[c].is_zero()) continue;
        for (std::size_t r = 0; r < rows_; ++r)
            if (!at(r, c).is_zero()) y[r].add_mul(at(r, c), x[c]);
    }
    return y;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_, field_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("matrix product size mismatch");
    Matrix p(rows_, o.cols_, field_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(r, k);
            if (a.is_zero()) continue;
            for (std::size_t c = 0; c < o.cols_; ++c)
                if (!o.at(k, c).is_zero()) p.at(r, c).add_mul(a, o.at(k, c));
        }
    return p;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix Matrix::identity(std::size_t n, Field f) {
    Matrix m(n, n, f);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows, Field f) {
    Matrix m(rows, cols.size(), f);
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows) throw DimensionMismatch("column length mismatch");
        for (std::size_t r = 0; r < rows; ++r) m.at(r, c) = cols[c][r];
    }
    return m;
}

bool is_zero(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

namespace {

// In-place RREF of `rows` using the first `ncols` columns for pivots; the remaining
// columns ride along. Returns the pivot columns; pivot rows are moved to the front.
std::vector<std::size_t> rref(std::vector<Vector>& rows, std::size_t ncols) {
    std::vector<std::size_t> pivots;
    std::size_t next = 0;
    std::vector<std::size_t> nz;
    for (std::size_t c = 0; c < ncols && next < rows.size(); ++c) {
        std::size_t piv = next;
        while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[next], rows[piv]);
        Vector& pr = rows[next];
        Scalar inv = pr[c].inverse();
        nz.clear();
        for (std::size_t k = c; k < pr.size(); ++k)
            if (!pr[k].is_zero()) {
                pr[k] *= inv;
                nz.push_back(k);
            }
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == next || rows[r][c].is_zero()) continue;
            Scalar f = -rows[r][c];
            Vector& row = rows[r];
            for (std::size_t k : nz) row[k].add_mul(f, pr[k]);
        }
        pivots.push_back(c);
        ++next;
    }
    return pivots;
}

std::vector<Vector> rows_of(const Matrix& A) {
    std::vector<Vector> rows(A.rows(), Vector(A.cols()));
    for (std::size_t r = 0; r < A.rows(); ++r)
        for (std::size_t c = 0; c < A.cols(); ++c) rows[r][c] = A.at(r, c);
    return rows;
}

}  // namespace

Echelon row_reduce(const Matrix& A) {
    Echelon e;
    e.cols = A.cols();
    auto rows = rows_of(A);
    e.pivots = rref(rows, A.cols());
    rows.resize(e.pivots.size());
    e.rows = std::move(rows);
    return e;
}

RankNullspace rank_nullspace(const Matrix& A) {
    Echelon e = row_reduce(A);
    RankNullspace out;
    out.rank = e.pivots.size();
    std::vector<bool> is_pivot(A.cols(), false);
    for (auto c : e.pivots) is_pivot[c] = true;
    for (std::size_t f = 0; f < A.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector v(A.cols(), A.field().zero());
        v[f] = A.field().one();
        for (std::size_t t = 0; t < e.pivots.size(); ++t)
            if (!e.rows[t][f].is_zero()) v[e.pivots[t]] = -e.rows[t][f];
        out.nullspace.push_back(std::move(v));
    }
    return out;
}

std::size_t rank(const Matrix& A) {
    auto rows = rows_of(A);
    return rref(rows, A.cols()).size();
}

std::vector<std::size_t> pivot_columns(const Matrix& A) {
    auto rows = rows_of(A);
    return rref(rows, A.cols());
}

std::optional<Vector> solve_linear(const Matrix& A, const Vector& b) {
    if (b.size() != A.rows()) throw DimensionMismatch("right-hand side length mismatch");
    auto rows = rows_of(A);
    for (std::size_t r = 0; r < A.rows(); ++r) rows[r].push_back(b[r]);
    auto pivots = rref(rows, A.cols());
    for (std::size_t r = pivots.size(); r < rows.size(); ++r)
        if (!rows[r][A.cols()].is_zero()) return std::nullopt;
    Vector x(A.cols(), A.field().zero());
    for (std::size_t t = 0; t < pivots.size(); ++t) x[pivots[t]] = rows[t][A.cols()];
    return x;
}

LinearSolver::LinearSolver(const Matrix& A) : rows_(A.rows()), cols_(A.cols()), field_(A.field()) {
    auto rows = rows_of(A);
    for (std::size_t r = 0; r < rows_; ++r) {
        rows[r].resize(cols_ + rows_, field_.zero());
        rows[r][cols_ + r] = field_.one();
    }
    pivots_ = rref(rows, cols_);
    ecols_.assign(rows_, {});
    zcols_.assign(rows_, {});
    for (std::size_t t = 0; t < rows_; ++t)
        for (std::size_t k = 0; k < rows_; ++k) {
            const Scalar& e = rows[t][cols_ + k];
            if (e.is_zero()) continue;
            if (t < pivots_.size())
                ecols_[k].emplace_back(t, e);
            else
                zcols_[k].emplace_back(t, e);
        }
}

std::optional<std::vector<std::pair<std::size_t, Scalar>>> LinearSolver::solve_sparse(
    const std::vector<std::pair<std::size_t, Scalar>>& b) const {
    std::vector<Scalar> z(rows_, field_.zero());
    bool touched = false;
    for (const auto& [k, v] : b) {
        if (k >= rows_) throw DimensionMismatch("right-hand side index out of range");
        for (const auto& [t, e] : zcols_[k]) {
            z[t].add_mul(v, e);
            touched = true;
        }
    }
    if (touched)
        for (const auto& s : z)
            if (!s.is_zero()) return std::nullopt;
    std::vector<Scalar> c(pivots_.size(), field_.zero());
    for (const auto& [k, v] : b)
        for (const auto& [t, e] : ecols_[k]) c[t].add_mul(v, e);
    std::vector<std::pair<std::size_t, Scalar>> x;
    for (std::size_t t = 0; t < pivots_.size(); ++t)
        if (!c[t].is_zero()) x.emplace_back(pivots_[t], c[t]);
    std::sort(x.begin(), x.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return x;
}

std::optional<Vector> LinearSolver::solve(const Vector& b) const {
    if (b.size() != rows_) throw DimensionMismatch("right-hand side length mismatch");
    std::vector<std::pair<std::size_t, Scalar>> sb;
    for (std::size_t k = 0; k < b.size(); ++k)
        if (!b[k].is_zero()) sb.emplace_back(k, b[k]);
    auto xs = solve_sparse(sb);
    if (!xs) return std::nullopt;
    Vector x(cols_, field_.zero());
    for (auto& [c, v] : *xs) x[c] = v;
    return x;
}

bool SparseEchelon::insert(Row row) {
    Row tmp;
    while (!row.empty()) {
        std::size_t lead = row.front().first;
        std::size_t pr = pivot_of_[lead];
        if (pr == npos) {
            Scalar inv = row.front().second.inverse();
            for (auto& e : row) e.second *= inv;
            pivot_of_[lead] = rows_.size();
            rows_.push_back(std::move(row));
            return true;
        }
        // row -= row[lead] * rows_[pr]  (merge of two sorted sparse rows)
        const Row& p = rows_[pr];
        Scalar f = -row.front().second;
        tmp.clear();
        std::size_t a = 0, b = 0;
        while (a < row.size() || b < p.size()) {
            if (b == p.size() || (a < row.size() && row[a].first < p[b].first)) {
                tmp.push_back(std::move(row[a++]));
            } else if (a == row.size() || p[b].first < row[a].first) {
                tmp.emplace_back(p[b].first, f * p[b].second);
                ++b;
            } else {
                Scalar v = std::move(row[a].second);
                v.add_mul(f, p[b].second);
                if (!v.is_zero()) tmp.emplace_back(row[a].first, std::move(v));
                ++a;
                ++b;
            }
        }
        std::swap(row, tmp);
    }
    return false;
}

}  // namespace hh
