#pragma once

// Kernel lattices and the normalized determinant.
//
// For full-row-rank A in Z^{k x n}, the kernel lattice is the set of integer
// x with A * x^T = 0. A basis for it falls out of the column HNF transform:
// the transposed last n-k columns of U. The normalized determinant squared,
// det(A * A^T) / det(H_A)^2, is always an exact integer and equals the
// squared determinant of the kernel lattice.

#include <cstddef>

#include "latkit/hnf.hpp"
#include "latkit/int_matrix.hpp"

namespace latkit {

struct KernelBasis {
    IntMatrix B;              // (n-k) x n, rows are a basis of the kernel lattice
    std::size_t source_rows;  // k
    std::size_t source_cols;  // n
};

// ndet(L)^2, stored squared so everything stays in exact integers.
struct NdetSq {
    mpz_class value;
    friend bool operator==(const NdetSq&, const NdetSq&) = default;
};

// Basis of the kernel lattice of the row lattice of A.
// Throws empty_kernel_error when k = n (only the zero solution exists),
// rank_error when A is not of full row rank.
KernelBasis kernel_basis(const IntMatrix& A);

// H_A^{-1} * A: an integral k x n matrix with primitive rows, a basis of the
// kernel of the kernel lattice. Non-integral forward substitution indicates
// an HNF bug and raises internal_fault.
IntMatrix normalized_lattice_basis(const IntMatrix& A);

// gram_det_sq(A) / det_column_lattice(A)^2 with exactness check.
NdetSq ndet_sq(const IntMatrix& A);

// True iff the rows of B1 and B2 generate the same lattice, decided by
// comparing canonical row-echelon forms. Both inputs must be full row rank
// and of equal dimensions.
bool lattice_equal(const IntMatrix& B1, const IntMatrix& B2);

}  // namespace latkit
