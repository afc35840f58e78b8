#pragma once

// Exponential-time ground truth at desk scale: the minor-GCD route to the
// column-lattice determinant, exhaustive kernel-point enumeration, successive
// minima, and a one-call verification record for every identity the fast
// routes are supposed to satisfy.

#include <cstddef>
#include <string>
#include <vector>

#include "latkit/int_matrix.hpp"

namespace latkit {

inline constexpr unsigned long long kDefaultEnumerationBudget = 10'000'000ULL;

struct EnumOptions {
    unsigned long long budget = kDefaultEnumerationBudget;  // max candidates visited
    bool dedupe_sign = false;  // keep only the representative with first nonzero entry > 0
};

// A nonzero integer solution of A * x^T = 0 together with its height.
struct KernelWitness {
    IntVector vector;
    SupNorm sup_norm;
};

// n-k linearly independent kernel vectors picked greedily by increasing
// sup-norm, and the squared product of their norms.
struct MinimaSet {
    std::vector<KernelWitness> vectors;
    mpz_class product_sq;
};

// GCD of |det| over all k x k column minors of A, zero minors skipped.
// This is the exponential-time route; det_column_lattice is the fast one.
// Throws rank_error when every minor vanishes.
mpz_class minor_gcd(const IntMatrix& A);

// Exactly the nonzero kernel vectors with sup-norm <= max_sup_norm, sorted by
// (sup-norm, lexicographic order). Enumerates integer coefficient vectors of
// the kernel basis over a box provably large enough to cover the target
// sup-norm ball. Throws budget_error instead of truncating.
std::vector<KernelWitness> enumerate_kernel_points(const IntMatrix& A,
                                                   const mpz_class& max_sup_norm,
                                                   const EnumOptions& opts = {});

// Cross-check oracle: scans every x in [-M, M]^n and tests A * x^T = 0
// directly. Independent of the kernel-basis route above.
std::vector<KernelWitness> enumerate_kernel_points_naive(const IntMatrix& A,
                                                         const mpz_class& max_sup_norm,
                                                         const EnumOptions& opts = {});

// A kernel vector of minimal sup-norm (sign-normalized, lexicographically
// smallest among ties). Searches within the box radius, where existence is
// guaranteed.
KernelWitness shortest_kernel_vector(const IntMatrix& A, const EnumOptions& opts = {});

// Greedy successive minima: n-k independent kernel vectors by increasing
// sup-norm, ties broken lexicographically after sign normalization.
MinimaSet successive_minima_product(const IntMatrix& A, const EnumOptions& opts = {});

struct TheoremCheck {
    std::string name;
    bool pass = false;
    std::string lhs;
    std::string rhs;
};

struct VerificationRecord {
    std::vector<TheoremCheck> checks;
    bool all_pass = false;
    // whether the kernel of the kernel generates the same lattice as the
    // input rows; false is a legitimate outcome, not a failure
    bool normalized_lattice_equals_original = false;
};

// Runs the full identity suite against one instance:
//   det(H_A) = minor gcd, kernel Gram = ndet^2, ndet^2 invariant under the
//   kernel operation, triple-kernel lattice identity, a witness within the
//   box radius, and the minima product bound.
VerificationRecord verify_theorems(const IntMatrix& A, const EnumOptions& opts = {});

}  // namespace latkit
