#pragma once

// Dense arbitrary-precision integer matrices and the exact primitives
// (determinant, Gram determinant, rank, product) everything else builds on.
// All arithmetic is exact; no floating point anywhere.

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "latkit/errors.hpp"

namespace latkit {

class IntVector {
public:
    explicit IntVector(std::size_t dim) : entries_(dim) {
        if (dim == 0) throw dimension_error("IntVector: dim must be >= 1");
    }
    IntVector(std::initializer_list<long> vals) {
        if (vals.size() == 0) throw dimension_error("IntVector: dim must be >= 1");
        entries_.assign(vals.begin(), vals.end());
    }
    explicit IntVector(std::vector<mpz_class> vals) : entries_(std::move(vals)) {
        if (entries_.empty()) throw dimension_error("IntVector: dim must be >= 1");
    }

    std::size_t dim() const { return entries_.size(); }
    const mpz_class& operator[](std::size_t i) const { return entries_[i]; }
    mpz_class& operator[](std::size_t i) { return entries_[i]; }
    const std::vector<mpz_class>& entries() const { return entries_; }

    mpz_class sup_norm() const;
    bool is_zero() const;

    friend bool operator==(const IntVector&, const IntVector&) = default;

private:
    std::vector<mpz_class> entries_;
};

// max_i |x_i| of the vector it was taken from.
struct SupNorm {
    mpz_class value;
    friend bool operator==(const SupNorm&, const SupNorm&) = default;
};

class IntMatrix {
public:
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {
        if (rows == 0 || cols == 0)
            throw dimension_error("IntMatrix: rows and cols must be >= 1");
    }

    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    // Entries given as decimal strings; for values beyond long range.
    static IntMatrix from_strings(std::size_t rows, std::size_t cols,
                                  const std::vector<std::string>& entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const mpz_class& operator()(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }
    mpz_class& operator()(std::size_t i, std::size_t j) {
        return entries_[i * cols_ + j];
    }
    const std::vector<mpz_class>& entries() const { return entries_; }

    IntMatrix transposed() const;
    IntVector row(std::size_t i) const;
    // Submatrix [r0, r0+nr) x [c0, c0+nc).
    IntMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

    bool is_square() const { return rows_ == cols_; }
    bool is_zero() const;
    mpz_class max_abs_entry() const;

    void swap_cols(std::size_t a, std::size_t b);
    void negate_col(std::size_t c);
    // col_dst += f * col_src
    void addmul_col(std::size_t dst, std::size_t src, const mpz_class& f);

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_, cols_;
    std::vector<mpz_class> entries_;  // row-major
};

// Exact determinant by fraction-free (Bareiss) elimination.
// Throws dimension_error if M is not square.
mpz_class det(const IntMatrix& M);

// det(M * M^T), the squared lattice determinant of the row lattice of M.
// Always >= 0; > 0 iff the rows of M are linearly independent.
mpz_class gram_det_sq(const IntMatrix& M);

// Exact rank over the rationals.
std::size_t rank(const IntMatrix& M);

// Exact product. Throws dimension_error on inner-dimension mismatch.
IntMatrix matmul(const IntMatrix& A, const IntMatrix& B);

// A * v^T as a vector. Throws dimension_error if v.dim() != A.cols().
IntVector matvec(const IntMatrix& A, const IntVector& v);

}  // namespace latkit
