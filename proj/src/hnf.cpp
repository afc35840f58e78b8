#include "latkit/hnf.hpp"

#include <utility>

namespace latkit {

namespace {

struct Echelon {
    IntMatrix W;                          // A * U
    std::optional<IntMatrix> U;
    std::vector<std::size_t> pivot_rows;  // pivot row of column c, strictly increasing
};

// Unimodular transform on columns (c, j):
//   col_c <- s*col_c + t*col_j,  col_j <- -(b/g)*col_c + (a/g)*col_j
// where g = s*a + t*b = gcd(a, b) for the pivot-row entries a, b.
void two_col_combine(IntMatrix& M, std::size_t c, std::size_t j, const mpz_class& s,
                     const mpz_class& t, const mpz_class& a_over_g,
                     const mpz_class& b_over_g) {
    mpz_class nc, nj;
    for (std::size_t i = 0; i < M.rows(); ++i) {
        const mpz_class& vc = M(i, c);
        const mpz_class& vj = M(i, j);
        nc = s * vc + t * vj;
        nj = a_over_g * vj - b_over_g * vc;
        M(i, c) = nc;
        M(i, j) = nj;
    }
}

// Column echelon form by unimodular column operations. Pivot columns come
// first with strictly increasing pivot rows, pivots positive, entries to the
// left of each pivot in its row reduced into [0, pivot). Zero columns end up
// on the right. This form is unique; U is tracked only when requested.
Echelon column_echelon(const IntMatrix& A, bool want_u, PivotRule rule) {
    Echelon e{A, std::nullopt, {}};
    IntMatrix& W = e.W;
    if (want_u) e.U = IntMatrix::identity(A.cols());

    const std::size_t m = A.rows(), n = A.cols();

    auto swap_cols = [&](std::size_t a, std::size_t b) {
        W.swap_cols(a, b);
        if (e.U) e.U->swap_cols(a, b);
    };
    auto negate_col = [&](std::size_t c) {
        W.negate_col(c);
        if (e.U) e.U->negate_col(c);
    };
    auto addmul_col = [&](std::size_t dst, std::size_t src, const mpz_class& f) {
        W.addmul_col(dst, src, f);
        if (e.U) e.U->addmul_col(dst, src, f);
    };

    std::size_t c = 0;
    mpz_class q, g, s, t, ag, bg;
    for (std::size_t r = 0; r < m && c < n; ++r) {
        if (rule == PivotRule::min_pivot) {
            bool have_pivot = false;
            for (;;) {
                // smallest nonzero |W(r, j)|, j >= c
                std::size_t best = n;
                mpz_class best_abs, cur;
                for (std::size_t j = c; j < n; ++j) {
                    if (sgn(W(r, j)) == 0) continue;
                    mpz_abs(cur.get_mpz_t(), W(r, j).get_mpz_t());
                    if (best == n || cur < best_abs) {
                        best = j;
                        best_abs = cur;
                    }
                }
                if (best == n) break;
                have_pivot = true;
                if (best != c) swap_cols(c, best);
                if (sgn(W(r, c)) < 0) negate_col(c);
                bool residue_left = false;
                for (std::size_t j = c + 1; j < n; ++j) {
                    if (sgn(W(r, j)) == 0) continue;
                    mpz_fdiv_q(q.get_mpz_t(), W(r, j).get_mpz_t(), W(r, c).get_mpz_t());
                    if (sgn(q) != 0) addmul_col(j, c, mpz_class(-q));
                    if (sgn(W(r, j)) != 0) residue_left = true;
                }
                if (!residue_left) break;
            }
            if (!have_pivot) continue;
        } else {
            std::size_t first = n;
            for (std::size_t j = c; j < n; ++j)
                if (sgn(W(r, j)) != 0) {
                    first = j;
                    break;
                }
            if (first == n) continue;
            if (first != c) swap_cols(c, first);
            for (std::size_t j = c + 1; j < n; ++j) {
                if (sgn(W(r, j)) == 0) continue;
                const mpz_class a = W(r, c), b = W(r, j);
                mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(),
                           b.get_mpz_t());
                mpz_divexact(ag.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
                mpz_divexact(bg.get_mpz_t(), b.get_mpz_t(), g.get_mpz_t());
                two_col_combine(W, c, j, s, t, ag, bg);
                if (e.U) two_col_combine(*e.U, c, j, s, t, ag, bg);
            }
            if (sgn(W(r, c)) < 0) negate_col(c);
        }

        // reduce row r of the earlier pivot columns into [0, pivot)
        for (std::size_t j = 0; j < c; ++j) {
            mpz_fdiv_q(q.get_mpz_t(), W(r, j).get_mpz_t(), W(r, c).get_mpz_t());
            if (sgn(q) != 0) addmul_col(j, c, mpz_class(-q));
        }
        e.pivot_rows.push_back(r);
        ++c;
    }
    return e;
}

[[noreturn]] void throw_rank_error(const IntMatrix& A) {
    throw rank_error("matrix does not have full row rank", rank(A), A.rows());
}

}  // namespace

HnfResult column_hnf(const IntMatrix& A, PivotRule rule) {
    const std::size_t k = A.rows(), n = A.cols();
    Echelon e = column_echelon(A, true, rule);
    if (e.pivot_rows.size() != k) throw_rank_error(A);
    // k pivots with strictly increasing rows < k means rows 0..k-1 exactly,
    // so the pivot block is square and lower triangular.
    for (std::size_t j = k; j < n; ++j)
        for (std::size_t i = 0; i < k; ++i)
            if (sgn(e.W(i, j)) != 0)
                throw internal_fault("column_hnf: nonzero entry in zero block");
    return HnfResult{e.W.block(0, 0, k, k), std::move(*e.U), k, n};
}

mpz_class det_column_lattice(const IntMatrix& A) {
    Echelon e = column_echelon(A, false, PivotRule::min_pivot);
    if (e.pivot_rows.size() != A.rows()) throw_rank_error(A);
    mpz_class d = 1;
    for (std::size_t i = 0; i < A.rows(); ++i) d *= e.W(i, i);
    return d;
}

UnimodularBlocks extract_blocks(const HnfResult& r) {
    const std::size_t k = r.k, n = r.n;
    UnimodularBlocks b{r.U.block(0, 0, k, k), std::nullopt, std::nullopt, std::nullopt};
    if (k < n) {
        b.u21 = r.U.block(0, k, k, n - k);
        b.u12 = r.U.block(k, 0, n - k, k);
        b.u22 = r.U.block(k, k, n - k, n - k);
    }
    return b;
}

namespace detail {

IntMatrix row_lattice_canonical(const IntMatrix& M) {
    // Row lattice of M = column lattice of M^T; canonicalize that and
    // transpose back.
    Echelon e = column_echelon(M.transposed(), false, PivotRule::min_pivot);
    if (e.pivot_rows.size() != M.rows())
        throw rank_error("row_lattice_canonical: matrix does not have full row rank",
                         rank(M), M.rows());
    return e.W.block(0, 0, M.cols(), M.rows()).transposed();
}

}  // namespace detail

}  // namespace latkit
