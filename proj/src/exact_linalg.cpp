#include "greend4/exact_linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace greend4::linalg {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rat> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols) {
        throw std::invalid_argument("RatMatrix: entry count does not match shape");
    }
    for (auto& x : data_) x.canonicalize();
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rat>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    RatMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("from_rows: ragged rows");
        for (std::size_t j = 0; j < c; ++j) {
            m(i, j) = rows[i][j];
            m(i, j).canonicalize();
        }
    }
    return m;
}

RatMatrix RatMatrix::from_columns(std::size_t rows, const std::vector<RatVector>& cols) {
    RatMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw std::invalid_argument("from_columns: length mismatch");
        for (std::size_t i = 0; i < rows; ++i) {
            m(i, j) = cols[j][i];
            m(i, j).canonicalize();
        }
    }
    return m;
}

RatVector RatMatrix::column(std::size_t j) const {
    RatVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

std::vector<RatVector> RatMatrix::columns() const {
    std::vector<RatVector> out;
    out.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
    return out;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool RatMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rat& x) { return sgn(x) == 0; });
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("matrix add: shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
    return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("matrix sub: shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
    return *this;
}

RatMatrix& RatMatrix::operator*=(const Rat& scalar) {
    for (auto& x : data_) x *= scalar;
    return *this;
}

RatMatrix operator*(const RatMatrix& lhs, const RatMatrix& rhs) {
    if (lhs.cols_ != rhs.rows_) throw std::invalid_argument("matrix mul: shape mismatch");
    RatMatrix out(lhs.rows_, rhs.cols_);
    Rat tmp;
    for (std::size_t i = 0; i < lhs.rows_; ++i) {
        for (std::size_t k = 0; k < lhs.cols_; ++k) {
            const Rat& a = lhs(i, k);
            if (sgn(a) == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                const Rat& b = rhs(k, j);
                if (sgn(b) == 0) continue;
                tmp = a * b;
                out(i, j) += tmp;
            }
        }
    }
    return out;
}

RatVector operator*(const RatMatrix& lhs, const RatVector& v) {
    if (lhs.cols_ != v.size()) throw std::invalid_argument("matrix-vector mul: shape mismatch");
    RatVector out(lhs.rows_);
    for (std::size_t i = 0; i < lhs.rows_; ++i)
        for (std::size_t k = 0; k < lhs.cols_; ++k)
            if (sgn(lhs(i, k)) != 0 && sgn(v[k]) != 0) out[i] += lhs(i, k) * v[k];
    return out;
}

bool operator==(const RatMatrix& lhs, const RatMatrix& rhs) {
    return lhs.rows_ == rhs.rows_ && lhs.cols_ == rhs.cols_ && lhs.data_ == rhs.data_;
}

std::string RatMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
        os << ']';
    }
    os << ']';
    return os.str();
}

RrefResult rref(RatMatrix m) {
    RrefResult result;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::size_t pivot_row = 0;
    Rat factor;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        std::size_t found = rows;
        for (std::size_t i = pivot_row; i < rows; ++i) {
            if (sgn(m(i, col)) != 0) {
                found = i;
                break;
            }
        }
        if (found == rows) continue;
        if (found != pivot_row)
            for (std::size_t j = col; j < cols; ++j) std::swap(m(found, j), m(pivot_row, j));

        const Rat inv = 1 / m(pivot_row, col);
        for (std::size_t j = col; j < cols; ++j)
            if (sgn(m(pivot_row, j)) != 0) m(pivot_row, j) *= inv;

        for (std::size_t i = 0; i < rows; ++i) {
            if (i == pivot_row || sgn(m(i, col)) == 0) continue;
            factor = m(i, col);
            for (std::size_t j = col; j < cols; ++j) {
                const Rat& p = m(pivot_row, j);
                if (sgn(p) != 0) m(i, j) -= factor * p;
            }
        }
        result.pivots.push_back(col);
        ++pivot_row;
    }
    result.rank = result.pivots.size();
    result.form = std::move(m);
    return result;
}

std::size_t rank(const RatMatrix& m) { return rref(m).rank; }

std::vector<RatVector> kernel_basis(const RatMatrix& m) {
    const auto r = rref(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto p : r.pivots) is_pivot[p] = true;

    std::vector<RatVector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        RatVector v(cols);
        v[free] = 1;
        for (std::size_t k = 0; k < r.pivots.size(); ++k) v[r.pivots[k]] = -r.form(k, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve: right-hand side length does not match rows");
    RatMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    const auto r = rref(std::move(aug));
    if (!r.pivots.empty() && r.pivots.back() == a.cols()) return std::nullopt;
    RatVector x(a.cols());
    for (std::size_t k = 0; k < r.pivots.size(); ++k) x[r.pivots[k]] = r.form(k, a.cols());
    return x;
}

RatMatrix kron(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Rat& x = a(i, j);
            if (sgn(x) == 0) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    if (sgn(b(k, l)) != 0) out(i * b.rows() + k, j * b.cols() + l) = x * b(k, l);
        }
    return out;
}

bool is_invertible(const RatMatrix& m) { return m.is_square() && rank(m) == m.rows(); }

RatMatrix inverse(const RatMatrix& m) {
    if (!m.is_square()) throw std::domain_error("inverse: matrix is not square");
    const std::size_t n = m.rows();
    const auto r = rref(hstack(m, RatMatrix::identity(n)));
    if (r.rank < n || r.pivots[n - 1] != n - 1) throw std::domain_error("inverse: matrix is singular");
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.form(i, n + j);
    return inv;
}

RatMatrix hstack(const RatMatrix& left, const RatMatrix& right) {
    if (left.rows() != right.rows()) throw std::invalid_argument("hstack: row mismatch");
    RatMatrix out(left.rows(), left.cols() + right.cols());
    for (std::size_t i = 0; i < left.rows(); ++i) {
        for (std::size_t j = 0; j < left.cols(); ++j) out(i, j) = left(i, j);
        for (std::size_t j = 0; j < right.cols(); ++j) out(i, left.cols() + j) = right(i, j);
    }
    return out;
}

RatMatrix vstack(const RatMatrix& top, const RatMatrix& bottom) {
    if (top.cols() != bottom.cols()) throw std::invalid_argument("vstack: column mismatch");
    RatMatrix out(top.rows() + bottom.rows(), top.cols());
    for (std::size_t j = 0; j < top.cols(); ++j) {
        for (std::size_t i = 0; i < top.rows(); ++i) out(i, j) = top(i, j);
        for (std::size_t i = 0; i < bottom.rows(); ++i) out(top.rows() + i, j) = bottom(i, j);
    }
    return out;
}

RatMatrix block_diag(const std::vector<RatMatrix>& blocks) {
    std::size_t rows = 0, cols = 0;
    for (const auto& b : blocks) {
        rows += b.rows();
        cols += b.cols();
    }
    RatMatrix out(rows, cols);
    std::size_t r0 = 0, c0 = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) out(r0 + i, c0 + j) = b(i, j);
        r0 += b.rows();
        c0 += b.cols();
    }
    return out;
}

RatMatrix power(const RatMatrix& m, std::size_t exponent) {
    RatMatrix result = RatMatrix::identity(m.rows());
    RatMatrix base = m;
    while (exponent > 0) {
        if (exponent & 1U) result = result * base;
        exponent >>= 1U;
        if (exponent > 0) base = base * base;
    }
    return result;
}

RatMatrix select_columns(const RatMatrix& m, const std::vector<std::size_t>& cols) {
    RatMatrix out(m.rows(), cols.size());
    for (std::size_t k = 0; k < cols.size(); ++k)
        for (std::size_t i = 0; i < m.rows(); ++i) out(i, k) = m(i, cols[k]);
    return out;
}

RatMatrix column_space(const RatMatrix& m) { return select_columns(m, rref(m).pivots); }

RatMatrix null_space(const RatMatrix& m) { return RatMatrix::from_columns(m.cols(), kernel_basis(m)); }

RatMatrix intersect(const RatMatrix& u, const RatMatrix& v) {
    // x in both iff x = U p = V q, i.e. [U | -V](p; q) = 0
    if (u.cols() == 0 || v.cols() == 0) return RatMatrix(u.rows(), 0);
    const auto ker = kernel_basis(hstack(u, v * Rat(-1)));
    std::vector<RatVector> vecs;
    for (const auto& k : ker) {
        RatVector p(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(u.cols()));
        vecs.push_back(u * p);
    }
    return column_space(RatMatrix::from_columns(u.rows(), vecs));
}

std::vector<std::size_t> extend_basis(const RatMatrix& base, const RatMatrix& candidates) {
    const auto r = rref(hstack(base, candidates));
    std::vector<std::size_t> chosen;
    for (auto p : r.pivots)
        if (p >= base.cols()) chosen.push_back(p - base.cols());
    return chosen;
}

RatMatrix coordinates(const RatMatrix& basis, const RatMatrix& targets) {
    const std::size_t k = basis.cols();
    const auto r = rref(hstack(basis, targets));
    if (r.rank > 0 && r.pivots.back() >= k) throw std::domain_error("coordinates: target outside the span");
    if (r.rank != k) throw std::domain_error("coordinates: basis columns are dependent");
    RatMatrix y(k, targets.cols());
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < targets.cols(); ++j) y(i, j) = r.form(i, k + j);
    return y;
}

}  // namespace greend4::linalg
