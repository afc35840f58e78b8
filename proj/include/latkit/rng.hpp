#pragma once

// Deterministic instance generation. mt19937_64 is fully specified by the
// standard, and the modulo mapping keeps the stream identical on every
// platform, so a fixed seed reproduces the exact same matrices anywhere.

#include <cstdint>
#include <random>

#include "latkit/int_matrix.hpp"

namespace latkit {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    // uniform-ish in [lo, hi]; the modulo bias is irrelevant for test data
    long uniform(long lo, long hi) {
        return lo + static_cast<long>(next() %
                                      static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::mt19937_64 gen_;
};

inline IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long lo,
                               long hi) {
    IntMatrix M(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) M(i, j) = rng.uniform(lo, hi);
    return M;
}

inline IntMatrix random_full_row_rank(Rng& rng, std::size_t rows, std::size_t cols,
                                      long lo, long hi) {
    for (;;) {
        IntMatrix M = random_matrix(rng, rows, cols, lo, hi);
        if (rank(M) == rows) return M;
    }
}

// Product of random elementary row operations: always determinant +-1.
inline IntMatrix random_unimodular(Rng& rng, std::size_t n, unsigned steps = 20) {
    IntMatrix U = IntMatrix::identity(n);
    if (n == 1) {
        if (rng.uniform(0, 1)) U(0, 0) = -1;
        return U;
    }
    for (unsigned s = 0; s < steps; ++s) {
        std::size_t i = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
        std::size_t j = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
        switch (rng.uniform(0, 2)) {
            case 0: {  // row_i += c * row_j
                if (i == j) break;
                mpz_class c = rng.uniform(-3, 3);
                for (std::size_t t = 0; t < n; ++t)
                    U(i, t) += c * U(j, t);
                break;
            }
            case 1:  // swap
                if (i != j)
                    for (std::size_t t = 0; t < n; ++t)
                        mpz_swap(U(i, t).get_mpz_t(), U(j, t).get_mpz_t());
                break;
            default:  // negate
                for (std::size_t t = 0; t < n; ++t) U(i, t) = -U(i, t);
        }
    }
    return U;
}

}  // namespace latkit
