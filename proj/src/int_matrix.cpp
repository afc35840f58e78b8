#include "latkit/int_matrix.hpp"

#include <algorithm>
#include <utility>

namespace latkit {

mpz_class IntVector::sup_norm() const {
    mpz_class m = 0;
    mpz_class a;
    for (const auto& x : entries_) {
        mpz_abs(a.get_mpz_t(), x.get_mpz_t());
        if (a > m) m = a;
    }
    return m;
}

bool IntVector::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const mpz_class& x) { return sgn(x) == 0; });
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    if (rows_ == 0 || cols_ == 0)
        throw dimension_error("IntMatrix: rows and cols must be >= 1");
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw dimension_error("IntMatrix: ragged initializer rows");
        for (long v : r) entries_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix I(n, n);
    for (std::size_t i = 0; i < n; ++i) I(i, i) = 1;
    return I;
}

IntMatrix IntMatrix::from_strings(std::size_t rows, std::size_t cols,
                                  const std::vector<std::string>& entries) {
    IntMatrix M(rows, cols);
    if (entries.size() != rows * cols)
        throw dimension_error("IntMatrix::from_strings: entry count mismatch");
    for (std::size_t i = 0; i < entries.size(); ++i)
        M.entries_[i] = mpz_class(entries[i], 10);
    return M;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix T(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) T(j, i) = (*this)(i, j);
    return T;
}

IntVector IntMatrix::row(std::size_t i) const {
    std::vector<mpz_class> r(entries_.begin() + static_cast<long>(i * cols_),
                             entries_.begin() + static_cast<long>((i + 1) * cols_));
    return IntVector(std::move(r));
}

IntMatrix IntMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr,
                           std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_)
        throw dimension_error("IntMatrix::block: out of range");
    IntMatrix B(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) B(i, j) = (*this)(r0 + i, c0 + j);
    return B;
}

bool IntMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const mpz_class& x) { return sgn(x) == 0; });
}

mpz_class IntMatrix::max_abs_entry() const {
    mpz_class m = 0;
    mpz_class a;
    for (const auto& x : entries_) {
        mpz_abs(a.get_mpz_t(), x.get_mpz_t());
        if (a > m) m = a;
    }
    return m;
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i)
        mpz_swap((*this)(i, a).get_mpz_t(), (*this)(i, b).get_mpz_t());
}

void IntMatrix::negate_col(std::size_t c) {
    for (std::size_t i = 0; i < rows_; ++i) {
        mpz_class& e = (*this)(i, c);
        mpz_neg(e.get_mpz_t(), e.get_mpz_t());
    }
}

void IntMatrix::addmul_col(std::size_t dst, std::size_t src, const mpz_class& f) {
    for (std::size_t i = 0; i < rows_; ++i)
        mpz_addmul((*this)(i, dst).get_mpz_t(), (*this)(i, src).get_mpz_t(),
                   f.get_mpz_t());
}

namespace {

// Bareiss elimination on a scratch copy. Each intermediate entry is a minor of
// the (row-permuted) input, so every division below is exact.
mpz_class det_bareiss(IntMatrix W) {
    const std::size_t n = W.rows();
    int sign = 1;
    mpz_class prev = 1;
    mpz_class t1, t2;
    for (std::size_t p = 0; p + 1 < n; ++p) {
        if (sgn(W(p, p)) == 0) {
            std::size_t r = p + 1;
            while (r < n && sgn(W(r, p)) == 0) ++r;
            if (r == n) return 0;
            for (std::size_t j = p; j < n; ++j)
                mpz_swap(W(p, j).get_mpz_t(), W(r, j).get_mpz_t());
            sign = -sign;
        }
        for (std::size_t i = p + 1; i < n; ++i) {
            for (std::size_t j = p + 1; j < n; ++j) {
                mpz_mul(t1.get_mpz_t(), W(i, j).get_mpz_t(), W(p, p).get_mpz_t());
                mpz_mul(t2.get_mpz_t(), W(i, p).get_mpz_t(), W(p, j).get_mpz_t());
                mpz_sub(t1.get_mpz_t(), t1.get_mpz_t(), t2.get_mpz_t());
                mpz_divexact(W(i, j).get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
            }
            W(i, p) = 0;
        }
        prev = W(p, p);
    }
    return sign > 0 ? W(n - 1, n - 1) : mpz_class(-W(n - 1, n - 1));
}

}  // namespace

mpz_class det(const IntMatrix& M) {
    if (!M.is_square())
        throw dimension_error("det: matrix is not square");
    if (M.rows() == 1) return M(0, 0);
    return det_bareiss(M);
}

mpz_class gram_det_sq(const IntMatrix& M) {
    return det(matmul(M, M.transposed()));
}

std::size_t rank(const IntMatrix& M) {
    IntMatrix W = M;
    const std::size_t m = W.rows(), n = W.cols();
    mpz_class prev = 1, t1, t2;
    std::size_t r = 0;
    for (std::size_t p = 0; p < std::min(m, n); ++p) {
        // full pivot search in the remaining submatrix
        std::size_t pi = p, pj = p;
        bool found = false;
        for (std::size_t i = p; i < m && !found; ++i)
            for (std::size_t j = p; j < n && !found; ++j)
                if (sgn(W(i, j)) != 0) {
                    pi = i;
                    pj = j;
                    found = true;
                }
        if (!found) break;
        if (pi != p)
            for (std::size_t j = 0; j < n; ++j)
                mpz_swap(W(p, j).get_mpz_t(), W(pi, j).get_mpz_t());
        if (pj != p)
            for (std::size_t i = 0; i < m; ++i)
                mpz_swap(W(i, p).get_mpz_t(), W(i, pj).get_mpz_t());
        ++r;
        for (std::size_t i = p + 1; i < m; ++i) {
            for (std::size_t j = p + 1; j < n; ++j) {
                mpz_mul(t1.get_mpz_t(), W(i, j).get_mpz_t(), W(p, p).get_mpz_t());
                mpz_mul(t2.get_mpz_t(), W(i, p).get_mpz_t(), W(p, j).get_mpz_t());
                mpz_sub(t1.get_mpz_t(), t1.get_mpz_t(), t2.get_mpz_t());
                mpz_divexact(W(i, j).get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
            }
            W(i, p) = 0;
        }
        prev = W(p, p);
    }
    return r;
}

IntMatrix matmul(const IntMatrix& A, const IntMatrix& B) {
    if (A.cols() != B.rows())
        throw dimension_error("matmul: inner dimensions disagree");
    IntMatrix C(A.rows(), B.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t k = 0; k < A.cols(); ++k) {
            const mpz_class& a = A(i, k);
            if (sgn(a) == 0) continue;
            for (std::size_t j = 0; j < B.cols(); ++j)
                mpz_addmul(C(i, j).get_mpz_t(), a.get_mpz_t(), B(k, j).get_mpz_t());
        }
    return C;
}

IntVector matvec(const IntMatrix& A, const IntVector& v) {
    if (v.dim() != A.cols())
        throw dimension_error("matvec: dimension mismatch");
    IntVector out(A.rows());
    for (std::size_t i = 0; i < A.rows(); ++i) {
        mpz_class acc = 0;
        for (std::size_t j = 0; j < A.cols(); ++j)
            mpz_addmul(acc.get_mpz_t(), A(i, j).get_mpz_t(), v[j].get_mpz_t());
        out[i] = acc;
    }
    return out;
}

}  // namespace latkit
