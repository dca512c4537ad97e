#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace greend4::linalg {

using Integer = mpz_class;
using Rat = mpq_class;
using RatVector = std::vector<Rat>;

/// Dense row-major matrix of exact rationals.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols);
    RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rat> entries);

    static RatMatrix identity(std::size_t n);
    static RatMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
    /// Builds a matrix from nested integer rows, e.g. {{1, 2}, {3, 4}}.
    static RatMatrix from_rows(const std::vector<std::vector<Rat>>& rows);
    /// Matrix whose columns are the given vectors (all of length `rows`).
    static RatMatrix from_columns(std::size_t rows, const std::vector<RatVector>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    RatVector column(std::size_t j) const;
    std::vector<RatVector> columns() const;
    RatMatrix transpose() const;
    bool is_zero() const;

    RatMatrix& operator+=(const RatMatrix& other);
    RatMatrix& operator-=(const RatMatrix& other);
    RatMatrix& operator*=(const Rat& scalar);

    friend RatMatrix operator+(RatMatrix lhs, const RatMatrix& rhs) { return lhs += rhs; }
    friend RatMatrix operator-(RatMatrix lhs, const RatMatrix& rhs) { return lhs -= rhs; }
    friend RatMatrix operator*(RatMatrix lhs, const Rat& s) { return lhs *= s; }
    friend RatMatrix operator*(const Rat& s, RatMatrix rhs) { return rhs *= s; }
    friend RatMatrix operator*(const RatMatrix& lhs, const RatMatrix& rhs);
    friend RatVector operator*(const RatMatrix& lhs, const RatVector& v);
    friend bool operator==(const RatMatrix& lhs, const RatMatrix& rhs);

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rat> data_;
};

struct RrefResult {
    RatMatrix form;
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
};

/// Reduced row echelon form; pivots on the first nonzero entry of each column.
RrefResult rref(RatMatrix m);
std::size_t rank(const RatMatrix& m);

/// Basis of the right null space, one vector per free column.
std::vector<RatVector> kernel_basis(const RatMatrix& m);

/// Some x with A x = b, or nullopt when the system is inconsistent.
/// Throws std::invalid_argument when b.size() != A.rows().
std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b);

/// (A⊗B)[i·rB + k, j·cB + l] = A[i,j]·B[k,l]
RatMatrix kron(const RatMatrix& a, const RatMatrix& b);

bool is_invertible(const RatMatrix& m);
/// Throws std::domain_error on singular or non-square input.
RatMatrix inverse(const RatMatrix& m);

RatMatrix hstack(const RatMatrix& left, const RatMatrix& right);
RatMatrix vstack(const RatMatrix& top, const RatMatrix& bottom);
/// Block-diagonal sum.
RatMatrix block_diag(const std::vector<RatMatrix>& blocks);
RatMatrix power(const RatMatrix& m, std::size_t exponent);

// Subspaces of Q^n are carried as n×k matrices whose columns form a basis.

/// Columns of m that form a basis of its column space.
RatMatrix column_space(const RatMatrix& m);
/// Basis of the null space as the columns of an n×k matrix.
RatMatrix null_space(const RatMatrix& m);
/// Basis of the intersection of two column spaces.
RatMatrix intersect(const RatMatrix& u, const RatMatrix& v);
/// Columns of `candidates` that extend `base` to a basis of base + span(candidates).
/// Returns the selected column indices.
std::vector<std::size_t> extend_basis(const RatMatrix& base, const RatMatrix& candidates);
/// Solves basis·Y = targets for Y; throws std::domain_error if a column lies outside the span.
RatMatrix coordinates(const RatMatrix& basis, const RatMatrix& targets);
RatMatrix select_columns(const RatMatrix& m, const std::vector<std::size_t>& cols);

}  // namespace greend4::linalg
