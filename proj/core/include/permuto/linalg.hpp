#pragma once

#include <optional>
#include <vector>

#include "permuto/rational.hpp"

namespace permuto {

// Dense matrix of exact rationals. Used both for small linear algebra over
// cone coordinates and as the value type of matrix correlators.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Rat& at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    bool is_zero() const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const Rat& s);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const Rat& s) { return a *= s; }
    friend Matrix operator*(const Rat& s, Matrix a) { return a *= s; }
    Matrix operator*(const Matrix& o) const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    int rows_, cols_;
    std::vector<Rat> data_;
};

Matrix commutator(const Matrix& a, const Matrix& b);

// Row space of a set of vectors, kept in reduced row echelon form.
// Built once per relation grade and then shared by membership queries.
class RowSpan {
public:
    RowSpan(std::vector<std::vector<Rat>> rows, int dim);

    int dim() const { return dim_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::vector<std::vector<Rat>>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    // True iff vec lies in the row space (vec.size() == dim).
    bool contains(std::vector<Rat> vec) const;

private:
    int dim_;
    std::vector<std::vector<Rat>> rows_;  // RREF, pivot columns strictly increasing
    std::vector<int> pivots_;
};

// Rank of an integer matrix by fraction-free (Bareiss) elimination.
int rank_bareiss(std::vector<std::vector<BigInt>> m);

// Solve sum_k x_k * columns[k] = rhs exactly. Columns need not be
// independent; returns one solution, or nullopt when rhs is outside the
// column span. All columns and rhs must have the same length.
std::optional<std::vector<Rat>> solve_in_column_span(
    const std::vector<std::vector<Rat>>& columns, const std::vector<Rat>& rhs);

}  // namespace permuto
