#include "latkit/kernel.hpp"

namespace latkit {

KernelBasis kernel_basis(const IntMatrix& A) {
    const std::size_t k = A.rows(), n = A.cols();
    HnfResult r = column_hnf(A);
    if (k == n)
        throw empty_kernel_error("kernel_basis: square full-rank system has only the zero solution");
    IntMatrix B(n - k, n);
    for (std::size_t i = 0; i < n - k; ++i)
        for (std::size_t j = 0; j < n; ++j) B(i, j) = r.U(j, k + i);
    return KernelBasis{std::move(B), k, n};
}

IntMatrix normalized_lattice_basis(const IntMatrix& A) {
    const std::size_t k = A.rows(), n = A.cols();
    HnfResult r = column_hnf(A);
    // solve H * X = A by forward substitution; every division must be exact
    IntMatrix X(k, n);
    mpz_class acc, rem;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            acc = A(i, j);
            for (std::size_t t = 0; t < i; ++t)
                mpz_submul(acc.get_mpz_t(), r.H(i, t).get_mpz_t(), X(t, j).get_mpz_t());
            mpz_tdiv_qr(X(i, j).get_mpz_t(), rem.get_mpz_t(), acc.get_mpz_t(),
                        r.H(i, i).get_mpz_t());
            if (sgn(rem) != 0)
                throw internal_fault("normalized_lattice_basis: H^{-1}*A is not integral");
        }
    }
    return X;
}

NdetSq ndet_sq(const IntMatrix& A) {
    mpz_class d = det_column_lattice(A);  // rank check happens here
    mpz_class g = gram_det_sq(A);
    mpz_class q, rem;
    d *= d;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    if (sgn(rem) != 0)
        throw internal_fault("ndet_sq: det(A*A^T) not divisible by det(H_A)^2");
    return NdetSq{std::move(q)};
}

bool lattice_equal(const IntMatrix& B1, const IntMatrix& B2) {
    if (B1.rows() != B2.rows() || B1.cols() != B2.cols())
        throw dimension_error("lattice_equal: dimension mismatch");
    return detail::row_lattice_canonical(B1) == detail::row_lattice_canonical(B2);
}

}  // namespace latkit
