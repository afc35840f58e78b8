#pragma once

// Sup-norm height bounds for nonzero integer solutions of A * x^T = 0,
// materialized as exact integer floors. The box radius ndet^{1/(n-k)} and
// Siegel's 1 + (n*a)^{k/(n-k)} are both evaluated with integer root
// extraction on exact powers; no floating point enters any bound.

#include <cstddef>
#include <string>

#include "latkit/int_matrix.hpp"

namespace latkit {

struct BoundReport {
    mpz_class ndet_sq;
    std::size_t codim = 0;      // n - k
    mpz_class bv_box_radius;    // floor(ndet^{1/(n-k)})
    mpz_class siegel_floor;     // floor(1 + (n*a)^{k/(n-k)})
    mpz_class a_max;            // max |a_{i,j}|
    std::string ndet_approx;    // approximate decimal of sqrt(ndet_sq), display only
};

// floor(x^{1/r}): the m with m^r <= x < (m+1)^r. Throws argument_error for
// r = 0 or x < 0.
mpz_class integer_root(const mpz_class& x, unsigned long r);

// floor(ndet^{1/(n-k)}) = integer_root(ndet_sq, 2(n-k)). A nonzero kernel
// vector with sup-norm at most this value always exists.
mpz_class bv_box_radius(const IntMatrix& A);

// floor(1 + (n*a)^{k/(n-k)}) with a = max |a_{i,j}|. Throws argument_error
// for the zero matrix.
mpz_class siegel_floor(const IntMatrix& A);

BoundReport bound_report(const IntMatrix& A);

// Decimal string of sqrt(square) truncated to sig_digits significant digits.
// Falls back to scientific notation when the integer part alone is longer.
std::string sqrt_decimal(const mpz_class& square, unsigned sig_digits);

}  // namespace latkit
