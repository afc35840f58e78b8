#include "latkit/oracle.hpp"

#include <algorithm>
#include <utility>

#include "latkit/bounds.hpp"
#include "latkit/hnf.hpp"
#include "latkit/io.hpp"
#include "latkit/kernel.hpp"

namespace latkit {

namespace {

int lex_cmp(const IntVector& a, const IntVector& b) {
    for (std::size_t i = 0; i < a.dim(); ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c;
    }
    return 0;
}

bool witness_order(const KernelWitness& a, const KernelWitness& b) {
    int c = cmp(a.sup_norm.value, b.sup_norm.value);
    if (c != 0) return c < 0;
    return lex_cmp(a.vector, b.vector) < 0;
}

bool sign_canonical(const IntVector& v) {
    for (std::size_t i = 0; i < v.dim(); ++i) {
        int s = sgn(v[i]);
        if (s != 0) return s > 0;
    }
    return true;
}

void finalize_witnesses(std::vector<KernelWitness>& out, bool dedupe_sign) {
    if (dedupe_sign)
        std::erase_if(out, [](const KernelWitness& w) { return !sign_canonical(w.vector); });
    std::sort(out.begin(), out.end(), witness_order);
}

// adjugate by cofactor expansion; the Gram matrices this sees are small
IntMatrix adjugate(const IntMatrix& M) {
    const std::size_t m = M.rows();
    IntMatrix adj(m, m);
    if (m == 1) {
        adj(0, 0) = 1;
        return adj;
    }
    IntMatrix minor(m - 1, m - 1);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            for (std::size_t r = 0, mr = 0; r < m; ++r) {
                if (r == i) continue;
                for (std::size_t c = 0, mc = 0; c < m; ++c) {
                    if (c == j) continue;
                    minor(mr, mc) = M(r, c);
                    ++mc;
                }
                ++mr;
            }
            mpz_class d = det(minor);
            adj(j, i) = ((i + j) % 2 == 0) ? d : mpz_class(-d);
        }
    return adj;
}

struct CoefficientBox {
    std::vector<mpz_class> bounds;  // |c_i| <= bounds[i]
    mpz_class candidates;           // prod (2*bounds[i] + 1)
};

// Every kernel point x with sup-norm <= M is an integer combination c of the
// basis rows, and c = x B^T (B B^T)^{-1}. Bounding the column sums of
// B^T adj(G) gives |c_i| <= M * S_i / det(G).
CoefficientBox coefficient_box(const IntMatrix& B, const mpz_class& M) {
    const std::size_t m = B.rows();
    IntMatrix G = matmul(B, B.transposed());
    mpz_class d = det(G);
    IntMatrix N = matmul(B.transposed(), adjugate(G));
    CoefficientBox box;
    box.bounds.resize(m);
    box.candidates = 1;
    mpz_class s, a;
    for (std::size_t i = 0; i < m; ++i) {
        s = 0;
        for (std::size_t j = 0; j < B.cols(); ++j) {
            mpz_abs(a.get_mpz_t(), N(j, i).get_mpz_t());
            s += a;
        }
        s *= M;
        mpz_fdiv_q(box.bounds[i].get_mpz_t(), s.get_mpz_t(), d.get_mpz_t());
        box.candidates *= 2 * box.bounds[i] + 1;
    }
    return box;
}

void check_budget(const mpz_class& candidates, unsigned long long budget) {
    if (candidates > mpz_class(std::to_string(budget)))
        throw budget_error("enumeration box of " + candidates.get_str() +
                           " candidates exceeds budget " + std::to_string(budget));
}

}  // namespace

mpz_class minor_gcd(const IntMatrix& A) {
    const std::size_t k = A.rows(), n = A.cols();
    if (k > n) throw rank_error("minor_gcd: more rows than columns", rank(A), k);

    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;

    IntMatrix sub(k, k);
    mpz_class g = 0, d;
    for (;;) {
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) sub(i, j) = A(i, idx[j]);
        d = det(sub);
        if (sgn(d) != 0) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
        }
        // next k-combination of {0..n-1}
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (sgn(g) == 0)
        throw rank_error("minor_gcd: all k x k minors vanish", rank(A), k);
    return g;
}

std::vector<KernelWitness> enumerate_kernel_points(const IntMatrix& A,
                                                   const mpz_class& max_sup_norm,
                                                   const EnumOptions& opts) {
    if (sgn(max_sup_norm) < 0)
        throw argument_error("enumerate_kernel_points: negative sup-norm bound");
    KernelBasis kb = kernel_basis(A);
    const IntMatrix& B = kb.B;
    const std::size_t m = B.rows(), n = B.cols();

    CoefficientBox box = coefficient_box(B, max_sup_norm);
    check_budget(box.candidates, opts.budget);

    std::vector<KernelWitness> out;
    // partial[l] = sum_{i < l} c_i * row_i; each level walks its coefficient
    // from -bound to +bound by repeated row addition
    std::vector<std::vector<mpz_class>> partial(m + 1, std::vector<mpz_class>(n));
    mpz_class norm;

    auto descend = [&](auto&& self, std::size_t level) -> void {
        if (level == m) {
            const std::vector<mpz_class>& x = partial[m];
            bool zero = true;
            norm = 0;
            mpz_class a;
            for (const auto& e : x) {
                if (sgn(e) != 0) zero = false;
                mpz_abs(a.get_mpz_t(), e.get_mpz_t());
                if (a > norm) norm = a;
            }
            if (zero || norm > max_sup_norm) return;
            out.push_back(KernelWitness{IntVector(x), SupNorm{norm}});
            return;
        }
        const mpz_class& bound = box.bounds[level];
        // partial[level+1] = partial[level] - bound * row_level
        for (std::size_t j = 0; j < n; ++j) {
            partial[level + 1][j] = partial[level][j];
            mpz_submul(partial[level + 1][j].get_mpz_t(), bound.get_mpz_t(),
                       B(level, j).get_mpz_t());
        }
        mpz_class steps = 2 * bound;
        for (mpz_class c = 0; cmp(c, steps) <= 0; ++c) {
            self(self, level + 1);
            if (cmp(c, steps) < 0)
                for (std::size_t j = 0; j < n; ++j)
                    mpz_add(partial[level + 1][j].get_mpz_t(),
                            partial[level + 1][j].get_mpz_t(), B(level, j).get_mpz_t());
        }
    };
    descend(descend, 0);

    finalize_witnesses(out, opts.dedupe_sign);
    return out;
}

std::vector<KernelWitness> enumerate_kernel_points_naive(const IntMatrix& A,
                                                         const mpz_class& max_sup_norm,
                                                         const EnumOptions& opts) {
    if (sgn(max_sup_norm) < 0)
        throw argument_error("enumerate_kernel_points_naive: negative sup-norm bound");
    const std::size_t n = A.cols();
    mpz_class side = 2 * max_sup_norm + 1;
    mpz_class candidates;
    mpz_pow_ui(candidates.get_mpz_t(), side.get_mpz_t(), static_cast<unsigned long>(n));
    check_budget(candidates, opts.budget);

    std::vector<KernelWitness> out;
    IntVector x(n);
    for (std::size_t j = 0; j < n; ++j) x[j] = -max_sup_norm;
    if (sgn(max_sup_norm) == 0) return out;

    for (;;) {
        if (!x.is_zero() && matvec(A, x).is_zero())
            out.push_back(KernelWitness{x, SupNorm{x.sup_norm()}});
        // odometer
        std::size_t j = n;
        while (j > 0) {
            if (cmp(x[j - 1], max_sup_norm) < 0) {
                ++x[j - 1];
                break;
            }
            x[j - 1] = -max_sup_norm;
            --j;
        }
        if (j == 0) break;
    }

    finalize_witnesses(out, opts.dedupe_sign);
    return out;
}

KernelWitness shortest_kernel_vector(const IntMatrix& A, const EnumOptions& opts) {
    mpz_class radius = bv_box_radius(A);
    EnumOptions inner = opts;
    inner.dedupe_sign = true;
    std::vector<KernelWitness> pts = enumerate_kernel_points(A, radius, inner);
    if (pts.empty())
        throw internal_fault("shortest_kernel_vector: no kernel point within the box radius");
    return pts.front();
}

namespace {

bool independent_of(const std::vector<KernelWitness>& chosen, const IntVector& v) {
    IntMatrix S(chosen.size() + 1, v.dim());
    for (std::size_t i = 0; i < chosen.size(); ++i)
        for (std::size_t j = 0; j < v.dim(); ++j) S(i, j) = chosen[i].vector[j];
    for (std::size_t j = 0; j < v.dim(); ++j) S(chosen.size(), j) = v[j];
    return rank(S) == chosen.size() + 1;
}

}  // namespace

MinimaSet successive_minima_product(const IntMatrix& A, const EnumOptions& opts) {
    mpz_class nd = ndet_sq(A).value;  // also rejects rank-deficient input
    const std::size_t codim = A.cols() - A.rows();
    // each minimum is at most ndet since the product of all of them is
    mpz_class cap = integer_root(nd, 2);
    if (cap < 1) cap = 1;

    mpz_class radius = bv_box_radius(A);
    mpz_class M = radius < 1 ? mpz_class(1) : radius;

    EnumOptions inner = opts;
    inner.dedupe_sign = true;

    for (;;) {
        std::vector<KernelWitness> pts = enumerate_kernel_points(A, M, inner);
        std::vector<KernelWitness> chosen;
        for (const KernelWitness& w : pts) {
            if (chosen.size() == codim) break;
            if (independent_of(chosen, w.vector)) chosen.push_back(w);
        }
        if (chosen.size() == codim) {
            MinimaSet set{std::move(chosen), 1};
            for (const KernelWitness& w : set.vectors)
                set.product_sq *= w.sup_norm.value;
            set.product_sq *= set.product_sq;
            if (set.product_sq > nd)
                throw internal_fault("successive_minima_product: product bound violated");
            return set;
        }
        if (M >= cap)
            throw internal_fault("successive_minima_product: minima not found within ndet");
        M = std::min(mpz_class(2 * M), cap);
    }
}

VerificationRecord verify_theorems(const IntMatrix& A, const EnumOptions& opts) {
    VerificationRecord rec;
    auto add = [&rec](std::string name, const std::string& lhs, const std::string& rhs,
                      bool pass) {
        rec.checks.push_back(TheoremCheck{std::move(name), pass, lhs, rhs});
    };

    mpz_class dcl = det_column_lattice(A);
    mpz_class mg = minor_gcd(A);
    add("hnf_det == minor_gcd", dcl.get_str(), mg.get_str(), dcl == mg);

    mpz_class nd = ndet_sq(A).value;
    KernelBasis k1 = kernel_basis(A);
    mpz_class kernel_gram = gram_det_sq(k1.B);
    add("kernel_gram_det_sq == ndet_sq", kernel_gram.get_str(), nd.get_str(),
        kernel_gram == nd);

    mpz_class nd_kernel = ndet_sq(k1.B).value;
    add("ndet_sq(kernel) == ndet_sq", nd_kernel.get_str(), nd.get_str(), nd_kernel == nd);

    KernelBasis k2 = kernel_basis(k1.B);
    KernelBasis k3 = kernel_basis(k2.B);
    IntMatrix c1 = detail::row_lattice_canonical(k1.B);
    IntMatrix c3 = detail::row_lattice_canonical(k3.B);
    add("triple_kernel == kernel", to_inline_string(c3), to_inline_string(c1), c3 == c1);

    mpz_class radius = bv_box_radius(A);
    KernelWitness shortest = shortest_kernel_vector(A, opts);
    add("shortest_sup_norm <= bv_box_radius", shortest.sup_norm.value.get_str(),
        radius.get_str(), shortest.sup_norm.value <= radius);

    MinimaSet minima = successive_minima_product(A, opts);
    add("minima_product_sq <= ndet_sq", minima.product_sq.get_str(), nd.get_str(),
        minima.product_sq <= nd);

    rec.all_pass = std::all_of(rec.checks.begin(), rec.checks.end(),
                               [](const TheoremCheck& c) { return c.pass; });
    rec.normalized_lattice_equals_original = lattice_equal(k2.B, A);
    return rec;
}

}  // namespace latkit
