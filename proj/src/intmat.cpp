#include "torloc/intmat.hpp"

#include <algorithm>
#include <sstream>

namespace torloc {

std::string vec_to_string(const Vec& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    os << ")";
    return os.str();
}

namespace {

void swap_rows(IntMat& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void negate_row(IntMat& m, std::size_t r) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

// row[dst] += c * row[src]
void add_row(IntMat& m, std::size_t dst, std::size_t src, const Int& c) {
    if (c == 0) return;
    for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += c * m(src, j);
}

void swap_cols(IntMat& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

void negate_col(IntMat& m, std::size_t c) {
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, c) = -m(i, c);
}

void add_col(IntMat& m, std::size_t dst, std::size_t src, const Int& c) {
    if (c == 0) return;
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += c * m(i, src);
}

}  // namespace

HnfResult hnf(const IntMat& m) {
    HnfResult res;
    res.h = m;
    res.u = IntMat::identity(m.rows());
    IntMat& h = res.h;
    IntMat& u = res.u;

    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
        // Euclidean elimination below the pivot row within this column.
        while (true) {
            std::size_t best = m.rows();
            for (std::size_t i = pivot_row; i < m.rows(); ++i) {
                if (h(i, col) == 0) continue;
                if (best == m.rows() || cmp(abs(h(i, col)), abs(h(best, col))) < 0) best = i;
            }
            if (best == m.rows()) break;  // column is zero below pivot_row
            swap_rows(h, pivot_row, best);
            swap_rows(u, pivot_row, best);
            bool done = true;
            for (std::size_t i = pivot_row + 1; i < m.rows(); ++i) {
                if (h(i, col) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), h(i, col).get_mpz_t(), h(pivot_row, col).get_mpz_t());
                add_row(h, i, pivot_row, -q);
                add_row(u, i, pivot_row, -q);
                if (h(i, col) != 0) done = false;
            }
            if (done) break;
        }
        if (h(pivot_row, col) == 0) continue;
        if (h(pivot_row, col) < 0) {
            negate_row(h, pivot_row);
            negate_row(u, pivot_row);
        }
        // Reduce the entries above the pivot into [0, pivot).
        for (std::size_t i = 0; i < pivot_row; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), h(i, col).get_mpz_t(), h(pivot_row, col).get_mpz_t());
            add_row(h, i, pivot_row, -q);
            add_row(u, i, pivot_row, -q);
        }
        ++pivot_row;
    }
    res.rank = pivot_row;
    return res;
}

std::size_t rank_z(const IntMat& m) { return hnf(m).rank; }

SnfResult snf(const IntMat& m) {
    SnfResult res;
    res.d = m;
    res.u = IntMat::identity(m.rows());
    res.v = IntMat::identity(m.cols());
    IntMat& d = res.d;
    IntMat& u = res.u;
    IntMat& v = res.v;

    std::size_t t = 0;
    const std::size_t nmin = std::min(m.rows(), m.cols());
    while (t < nmin) {
        // locate a nonzero entry of minimal absolute value in the trailing block
        std::size_t pi = m.rows(), pj = m.cols();
        for (std::size_t i = t; i < m.rows(); ++i)
            for (std::size_t j = t; j < m.cols(); ++j) {
                if (d(i, j) == 0) continue;
                if (pi == m.rows() || cmp(abs(d(i, j)), abs(d(pi, pj))) < 0) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi == m.rows()) break;  // trailing block is zero
        swap_rows(d, t, pi);
        swap_rows(u, t, pi);
        swap_cols(d, t, pj);
        swap_cols(v, t, pj);

        bool clean = true;
        for (std::size_t i = t + 1; i < m.rows(); ++i) {
            if (d(i, t) == 0) continue;
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
            add_row(d, i, t, -q);
            add_row(u, i, t, -q);
            if (d(i, t) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < m.cols(); ++j) {
            if (d(t, j) == 0) continue;
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
            add_col(d, j, t, -q);
            add_col(v, j, t, -q);
            if (d(t, j) != 0) clean = false;
        }
        if (!clean) continue;  // reselect the pivot

        // divisibility fix: pivot must divide the whole trailing block
        bool fixed = false;
        for (std::size_t i = t + 1; i < m.rows() && !fixed; ++i)
            for (std::size_t j = t + 1; j < m.cols() && !fixed; ++j)
                if (d(i, j) % d(t, t) != 0) {
                    add_row(d, t, i, 1);
                    add_row(u, t, i, 1);
                    fixed = true;
                }
        if (fixed) continue;

        if (d(t, t) < 0) {
            negate_row(d, t);
            negate_row(u, t);
        }
        ++t;
    }
    res.rank = t;
    return res;
}

std::vector<Vec> integer_kernel_basis(const IntMat& m) {
    // Rows of U matching zero rows of hnf(m^T) form a basis of ker(m).
    HnfResult r = hnf(m.transpose());
    std::vector<Vec> basis;
    for (std::size_t i = r.rank; i < r.u.rows(); ++i) basis.push_back(r.u.row(i));
    return basis;
}

IntMat inverse_unimodular(const IntMat& m) {
    check_internal(m.rows() == m.cols(), "inverse_unimodular: not square");
    const std::size_t n = m.rows();
    QMat a = QMat::from_int(m);
    QMat inv(n, n);
    for (std::size_t i = 0; i < n; ++i) inv(i, i) = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a(piv, col) == 0) ++piv;
        check_internal(piv < n, "inverse_unimodular: singular");
        for (std::size_t j = 0; j < n; ++j) {
            std::swap(a(col, j), a(piv, j));
            std::swap(inv(col, j), inv(piv, j));
        }
        Rat p = a(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) /= p;
            inv(col, j) /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a(i, col) == 0) continue;
            Rat f = a(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    IntMat out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            check_internal(inv(i, j).get_den() == 1, "inverse_unimodular: non-integer inverse");
            out(i, j) = inv(i, j).get_num();
        }
    return out;
}

Int det(const IntMat& m) {
    check_internal(m.rows() == m.cols(), "det: not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMat a = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && a(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            swap_rows(a, k, piv);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                check_internal(num % prev == 0, "det: Bareiss division");
                a(i, j) = num / prev;
            }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

std::size_t rank_q(const QMat& m) {
    QMat a = m;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
        std::size_t piv = rank;
        while (piv < a.rows() && a(piv, col) == 0) ++piv;
        if (piv == a.rows()) continue;
        for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(rank, j), a(piv, j));
        for (std::size_t i = rank + 1; i < a.rows(); ++i) {
            if (a(i, col) == 0) continue;
            Rat f = a(i, col) / a(rank, col);
            for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= f * a(rank, j);
        }
        ++rank;
    }
    return rank;
}

bool solve_q(const QMat& m, const std::vector<Rat>& b, std::vector<Rat>& x) {
    check_internal(b.size() == m.rows(), "solve_q: rhs size");
    QMat a(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) a(i, j) = m(i, j);
        a(i, m.cols()) = b[i];
    }
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < a.rows(); ++col) {
        std::size_t piv = rank;
        while (piv < a.rows() && a(piv, col) == 0) ++piv;
        if (piv == a.rows()) continue;
        for (std::size_t j = 0; j <= m.cols(); ++j) std::swap(a(rank, j), a(piv, j));
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == rank || a(i, col) == 0) continue;
            Rat f = a(i, col) / a(rank, col);
            for (std::size_t j = col; j <= m.cols(); ++j) a(i, j) -= f * a(rank, j);
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (std::size_t i = rank; i < a.rows(); ++i)
        if (a(i, m.cols()) != 0) return false;
    x.assign(m.cols(), Rat(0));
    for (std::size_t r = 0; r < rank; ++r) x[pivot_col[r]] = a(r, m.cols()) / a(r, pivot_col[r]);
    return true;
}

}  // namespace torloc
