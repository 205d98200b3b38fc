#pragma once

#include "torloc/numeric.hpp"

namespace torloc {

// Dense matrix over Z with row-major storage.  Rows are lattice vectors.
class IntMat {
public:
    IntMat() : rows_(0), cols_(0) {}
    IntMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}

    static IntMat identity(std::size_t n) {
        IntMat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static IntMat from_rows(const std::vector<Vec>& rows, std::size_t cols) {
        IntMat m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            check_internal(rows[i].size() == cols, "from_rows: ragged input");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vec row(std::size_t i) const {
        Vec v(cols_);
        for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
        return v;
    }

    Vec col(std::size_t j) const {
        Vec v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    std::vector<Vec> row_list() const {
        std::vector<Vec> out;
        out.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
        return out;
    }

    IntMat transpose() const {
        IntMat t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    // matrix * column vector
    Vec apply(const Vec& v) const {
        check_internal(v.size() == cols_, "apply: size mismatch");
        Vec out(rows_, Int(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
        return out;
    }

    IntMat mul(const IntMat& other) const {
        check_internal(cols_ == other.rows_, "mul: size mismatch");
        IntMat out(rows_, other.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                if ((*this)(i, k) == 0) continue;
                for (std::size_t j = 0; j < other.cols_; ++j)
                    out(i, j) += (*this)(i, k) * other(k, j);
            }
        return out;
    }

    bool operator==(const IntMat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Int> data_;
};

struct HnfResult {
    IntMat h;  // row Hermite normal form, zero rows last
    IntMat u;  // unimodular, u * input = h
    std::size_t rank = 0;
};

// Row-style Hermite normal form: pivots are the leftmost nonzero entries,
// strictly moving right, positive, with entries above each pivot reduced
// into [0, pivot).  Canonical representative of the row span over Z.
HnfResult hnf(const IntMat& m);

// Rank over Q of an integer matrix.
std::size_t rank_z(const IntMat& m);

struct SnfResult {
    IntMat d;  // diagonal, u * input * v = d
    IntMat u;  // unimodular rows x rows
    IntMat v;  // unimodular cols x cols
    std::size_t rank = 0;
};

SnfResult snf(const IntMat& m);

// Z-basis of {x in Z^cols : m x = 0}.  Saturated by construction.
std::vector<Vec> integer_kernel_basis(const IntMat& m);

// Exact inverse of a unimodular integer matrix.
IntMat inverse_unimodular(const IntMat& m);

// Determinant of a square integer matrix (fraction-free Gauss-Bareiss).
Int det(const IntMat& m);

// Dense matrix over Q; only what the exact solvers need.
class QMat {
public:
    QMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

    static QMat from_int(const IntMat& m) {
        QMat q(m.rows(), m.cols());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = Rat(m(i, j));
        return q;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

private:
    std::size_t rows_, cols_;
    std::vector<Rat> data_;
};

// Exact Gaussian-elimination rank.
std::size_t rank_q(const QMat& m);

// Solves m x = b exactly.  Returns false when inconsistent; when the system
// is underdetermined an arbitrary solution (free variables = 0) is produced.
bool solve_q(const QMat& m, const std::vector<Rat>& b, std::vector<Rat>& x);

}  // namespace torloc
