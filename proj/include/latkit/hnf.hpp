#pragma once

// Column Hermite Normal Form: for full-row-rank A in Z^{k x n} find a
// unimodular U with A * U = (H | 0), H lower triangular, positive diagonal,
// and each subdiagonal entry reduced modulo the diagonal of its row
// (0 <= h_{j,i} < h_{j,j} for j > i). Under that normalization H is unique;
// U is a witness and is not.

#include <cstddef>
#include <optional>
#include <vector>

#include "latkit/int_matrix.hpp"

namespace latkit {

// Two independent reduction orders. Both yield the same H (uniqueness);
// the transforms U generally differ.
enum class PivotRule {
    min_pivot,   // repeatedly move the smallest nonzero entry of the pivot row into place
    xgcd_sweep,  // left-to-right, folding later columns into the pivot via extended gcd
};

struct HnfResult {
    IntMatrix H;    // k x k
    IntMatrix U;    // n x n, |det U| = 1
    std::size_t k;  // input row count
    std::size_t n;  // input column count
};

// Throws rank_error (carrying the computed rank) unless rank(A) = rows(A).
HnfResult column_hnf(const IntMatrix& A, PivotRule rule = PivotRule::min_pivot);

// det(H_A) = product of the HNF diagonal, the determinant of the column
// lattice of A. Positive. Throws rank_error unless A has full row rank.
mpz_class det_column_lattice(const IntMatrix& A);

// The four blocks of U in the layout U = ((U11, U21), (U12, U22)):
// U11 top-left k x k, U21 top-right k x (n-k), U12 bottom-left (n-k) x k,
// U22 bottom-right (n-k) x (n-k). The right/bottom blocks are absent
// when k = n.
struct UnimodularBlocks {
    IntMatrix u11;
    std::optional<IntMatrix> u12;
    std::optional<IntMatrix> u21;
    std::optional<IntMatrix> u22;
};

UnimodularBlocks extract_blocks(const HnfResult& r);

namespace detail {

// Unique echelon basis of the row lattice of a full-row-rank matrix.
// Internal canonical form backing lattice_equal; not a public API.
IntMatrix row_lattice_canonical(const IntMatrix& M);

}  // namespace detail

}  // namespace latkit
