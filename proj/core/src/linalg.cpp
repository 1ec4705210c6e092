#include "permuto/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace permuto {

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (x != 0) return false;
    return true;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix+: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix-: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

Matrix& Matrix::operator*=(const Rat& s) {
    for (auto& x : data_) x *= s;
    return *this;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Matrix*: shape mismatch");
    Matrix out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Rat& b = o.at(k, j);
                if (b != 0) out.at(i, j) += a * b;
            }
        }
    return out;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

RowSpan::RowSpan(std::vector<std::vector<Rat>> rows, int dim) : dim_(dim) {
    for (const auto& r : rows)
        if (static_cast<int>(r.size()) != dim) throw std::invalid_argument("RowSpan: row size mismatch");
    // Gauss-Jordan to RREF, discarding dependent rows.
    std::size_t rank = 0;
    for (int col = 0; col < dim && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][static_cast<std::size_t>(col)] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        const Rat inv = Rat(1) / rows[rank][static_cast<std::size_t>(col)];
        for (auto& x : rows[rank]) x *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank) continue;
            const Rat f = rows[r][static_cast<std::size_t>(col)];
            if (f == 0) continue;
            for (int c = col; c < dim; ++c)
                rows[r][static_cast<std::size_t>(c)] -= f * rows[rank][static_cast<std::size_t>(c)];
        }
        pivots_.push_back(col);
        ++rank;
    }
    rows.resize(rank);
    rows_ = std::move(rows);
}

bool RowSpan::contains(std::vector<Rat> vec) const {
    if (static_cast<int>(vec.size()) != dim_) throw std::invalid_argument("RowSpan::contains: size");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const int p = pivots_[r];
        const Rat f = vec[static_cast<std::size_t>(p)];
        if (f == 0) continue;
        for (int c = p; c < dim_; ++c) {
            const Rat& rc = rows_[r][static_cast<std::size_t>(c)];
            if (rc != 0) vec[static_cast<std::size_t>(c)] -= f * rc;
        }
    }
    for (const auto& x : vec)
        if (x != 0) return false;
    return true;
}

int rank_bareiss(std::vector<std::vector<BigInt>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    for (const auto& r : m)
        if (r.size() != cols) throw std::invalid_argument("rank_bareiss: ragged matrix");
    BigInt prev = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        const BigInt piv = m[rank][col];
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t c = col + 1; c < cols; ++c)
                m[r][c] = (m[r][c] * piv - m[r][col] * m[rank][c]) / prev;
            m[r][col] = 0;
        }
        prev = piv;
        ++rank;
    }
    return static_cast<int>(rank);
}

std::optional<std::vector<Rat>> solve_in_column_span(
    const std::vector<std::vector<Rat>>& columns, const std::vector<Rat>& rhs) {
    const std::size_t n = rhs.size();
    const std::size_t k = columns.size();
    for (const auto& c : columns)
        if (c.size() != n) throw std::invalid_argument("solve_in_column_span: column size mismatch");
    // Augmented matrix [columns | rhs], Gauss-Jordan.
    std::vector<std::vector<Rat>> aug(n, std::vector<Rat>(k + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j) aug[i][j] = columns[j][i];
        aug[i][k] = rhs[i];
    }
    std::vector<int> pivot_col_of_row;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < k && rank < n; ++col) {
        std::size_t pivot = rank;
        while (pivot < n && aug[pivot][col] == 0) ++pivot;
        if (pivot == n) continue;
        std::swap(aug[rank], aug[pivot]);
        const Rat inv = Rat(1) / aug[rank][col];
        for (auto& x : aug[rank]) x *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == rank) continue;
            const Rat f = aug[r][col];
            if (f == 0) continue;
            for (std::size_t c = col; c <= k; ++c) aug[r][c] -= f * aug[rank][c];
        }
        pivot_col_of_row.push_back(static_cast<int>(col));
        ++rank;
    }
    for (std::size_t r = rank; r < n; ++r)
        if (aug[r][k] != 0) return std::nullopt;  // inconsistent
    std::vector<Rat> x(k, Rat(0));
    for (std::size_t r = 0; r < rank; ++r)
        x[static_cast<std::size_t>(pivot_col_of_row[r])] = aug[r][k];
    return x;
}

}  // namespace permuto
