// Acceptance suite: runs every ship criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion. Exits nonzero if any fail.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "latkit/bounds.hpp"
#include "latkit/hnf.hpp"
#include "latkit/io.hpp"
#include "latkit/kernel.hpp"
#include "latkit/oracle.hpp"
#include "latkit/rng.hpp"

using namespace latkit;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass;
    std::string detail;  // shown only on failure
};

struct Criterion {
    int id;
    std::string label;
    double budget_ms;  // <= 0 means no time budget
    Outcome outcome{false, ""};
    double elapsed_ms = 0.0;
};

double run_timed(const std::function<Outcome()>& body, Outcome& out) {
    auto t0 = Clock::now();
    out = body();
    auto t1 = Clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

// For sub-10ms budgets the first run warms allocators and code paths; the
// criterion is about the computation, so time the second run.
double run_timed_warm(const std::function<Outcome()>& body, Outcome& out) {
    Outcome warm;
    run_timed(body, warm);
    return run_timed(body, out);
}

std::vector<IntMatrix> make_family(std::uint64_t seed, int count, long max_n,
                                   long entry_bound) {
    Rng rng(seed);
    std::vector<IntMatrix> fam;
    fam.reserve(count);
    for (int i = 0; i < count; ++i) {
        long n = rng.uniform(2, max_n);
        long k = rng.uniform(1, n - 1);
        fam.push_back(random_full_row_rank(rng, static_cast<std::size_t>(k),
                                           static_cast<std::size_t>(n), -entry_bound,
                                           entry_bound));
    }
    return fam;
}

std::string fail_on(const IntMatrix& A, const std::string& what) {
    return what + " on instance " + to_inline_string(A);
}

bool hnf_contract_holds(const IntMatrix& A, const HnfResult& r, std::string& why) {
    IntMatrix AU = matmul(A, r.U);
    for (std::size_t i = 0; i < r.k; ++i)
        for (std::size_t j = 0; j < r.n; ++j) {
            mpz_class expect = j < r.k ? r.H(i, j) : mpz_class(0);
            if (AU(i, j) != expect) {
                why = "A*U != (H|0)";
                return false;
            }
        }
    mpz_class du = det(r.U);
    if (du != 1 && du != -1) {
        why = "det(U) = " + du.get_str();
        return false;
    }
    for (std::size_t i = 0; i < r.k; ++i) {
        if (sgn(r.H(i, i)) <= 0) {
            why = "nonpositive diagonal";
            return false;
        }
        for (std::size_t j = i + 1; j < r.k; ++j)
            if (sgn(r.H(i, j)) != 0) {
                why = "entry above the diagonal";
                return false;
            }
        for (std::size_t j = 0; j < i; ++j)
            if (sgn(r.H(i, j)) < 0 || r.H(i, j) >= r.H(i, i)) {
                why = "subdiagonal entry not reduced";
                return false;
            }
    }
    return true;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria;

    const std::vector<IntMatrix> family7 = make_family(42001, 500, 7, 9);
    const std::vector<IntMatrix> family5 = make_family(42002, 200, 5, 5);

    // 1. golden kernel chain
    {
        Criterion c{1, "golden [[2,2]] chain: kernel lattices and non-involution", 1.0};
        c.elapsed_ms = run_timed_warm(
            []() -> Outcome {
                IntMatrix A{{2, 2}};
                KernelBasis k1 = kernel_basis(A);
                if (!lattice_equal(k1.B, IntMatrix{{1, -1}}))
                    return {false, "kernel is not the lattice of (1,-1)"};
                KernelBasis k2 = kernel_basis(k1.B);
                if (!lattice_equal(k2.B, IntMatrix{{1, 1}}))
                    return {false, "second kernel is not the lattice of (1,1)"};
                KernelBasis k3 = kernel_basis(k2.B);
                if (!lattice_equal(k3.B, k1.B))
                    return {false, "triple kernel differs from the kernel"};
                if (lattice_equal(k2.B, A))
                    return {false, "kernel of kernel unexpectedly equals the input"};
                return {true, ""};
            },
            c.outcome);
        criteria.push_back(c);
    }

    // 2. worked instance [[1,2,3],[4,5,6]]
    {
        Criterion c{2, "worked [[1,2,3],[4,5,6]]: exact derived quantities", 10.0};
        c.elapsed_ms = run_timed_warm(
            []() -> Outcome {
                IntMatrix A{{1, 2, 3}, {4, 5, 6}};
                mpz_class dcl = det_column_lattice(A);
                mpz_class mg = minor_gcd(A);
                if (dcl != 3 || mg != 3) return {false, "det_column_lattice/minor_gcd != 3"};
                if (ndet_sq(A).value != 6) return {false, "ndet_sq != 6"};
                if (bv_box_radius(A) != 2) return {false, "bv_box_radius != 2"};
                if (shortest_kernel_vector(A).sup_norm.value != 2)
                    return {false, "shortest sup-norm != 2"};
                if (siegel_floor(A) != 325) return {false, "siegel_floor != 325"};
                return {true, ""};
            },
            c.outcome);
        criteria.push_back(c);
    }

    // 3. worked instance [[2,4,4]]
    {
        Criterion c{3, "worked [[2,4,4]]: bounds, witness, successive minima", 10.0};
        c.elapsed_ms = run_timed_warm(
            []() -> Outcome {
                IntMatrix A{{2, 4, 4}};
                if (det_column_lattice(A) != 2) return {false, "det_column_lattice != 2"};
                if (ndet_sq(A).value != 9) return {false, "ndet_sq != 9"};
                if (bv_box_radius(A) != 1) return {false, "bv_box_radius != 1"};
                KernelWitness w = shortest_kernel_vector(A);
                if (w.sup_norm.value != 1) return {false, "witness sup-norm != 1"};
                if (!(w.vector == IntVector{0, 1, -1} || w.vector == IntVector{0, -1, 1}))
                    return {false, "witness is not +-(0,1,-1)"};
                MinimaSet s = successive_minima_product(A);
                if (s.vectors.size() != 2 || s.vectors[0].sup_norm.value != 1 ||
                    s.vectors[1].sup_norm.value != 2)
                    return {false, "minima norms are not (1,2)"};
                if (s.product_sq != 4) return {false, "product_sq != 4"};
                if (s.product_sq > ndet_sq(A).value) return {false, "product bound broken"};
                return {true, ""};
            },
            c.outcome);
        criteria.push_back(c);
    }

    // 4. minor GCD equals HNF determinant, 500 instances
    {
        Criterion c{4, "500 random (k<n<=7): HNF det equals minor GCD", 30000.0};
        c.elapsed_ms = run_timed(
            [&]() -> Outcome {
                for (const IntMatrix& A : family7)
                    if (det_column_lattice(A) != minor_gcd(A))
                        return {false, fail_on(A, "det_column_lattice != minor_gcd")};
                return {true, ""};
            },
            c.outcome);
        criteria.push_back(c);
    }

    // 5. kernel Gram and ndet invariance, same family
    {
        Criterion c{5, "500 random: kernel Gram = ndet_sq = ndet_sq(kernel)", 30000.0};
        c.elapsed_ms = run_timed(
            [&]() -> Outcome {
                for (const IntMatrix& A : family7) {
                    mpz_class nd = ndet_sq(A).value;
                    KernelBasis kb = kernel_basis(A);
                    if (gram_det_sq(kb.B) != nd)
                        return {false, fail_on(A, "gram_det_sq(kernel) != ndet_sq")};
                    if (ndet_sq(kb.B).value != nd)
                        return {false, fail_on(A, "ndet_sq(kernel) != ndet_sq")};
                }
                return {true, ""};
            },
            c.outcome);
        criteria.push_back(c);
    }

    // 6. witness existence within the box radius + enumeration cross-check
    {
        Criterion c{6, "200 random (n<=5): witness within radius; enum cross-check", 60000.0};
        c.elapsed_ms = run_timed(
            [&]() -> Outcome {
                for (const IntMatrix& A : family5) {
                    mpz_class radius = bv_box_radius(A);
                    KernelWitness w = shortest_kernel_vector(A);
                    if (w.sup_norm.value > radius)
                        return {false, fail_on(A, "no witness within the box radius")};
                    if (!matvec(A, w.vector).is_zero())
                        return {false, fail_on(A, "witness is not a kernel point")};
                    if (A.cols() <= 4) {
                        for (long m = 0; m <= 3; ++m) {
                            auto fast = enumerate_kernel_points(A, m);
                            auto naive = enumerate_kernel_points_naive(A, m);
                            if (fast.size() != naive.size())
                                return {false, fail_on(A, "enumeration count mismatch")};
                            for (std::size_t i = 0; i < fast.size(); ++i)
                                if (!(fast[i].vector == naive[i].vector))
                                    return {false, fail_on(A, "enumeration order mismatch")};
                        }
                    }
                }
                return {true, ""};
            },
            c.outcome);
        criteria.push_back(c);
    }

    // 7. minima product bound, same family
    {
        Criterion c{7, "200 random: successive minima product within ndet_sq", 60000.0};
        c.elapsed_ms = run_timed(
            [&]() -> Outcome {
                for (const IntMatrix& A : family5) {
                    MinimaSet s = successive_minima_product(A);
                    if (s.product_sq > ndet_sq(A).value)
                        return {false, fail_on(A, "minima product bound broken")};
                }
                return {true, ""};
            },
            c.outcome);
        criteria.push_back(c);
    }

    // 8. polynomial vs exponential route at n=20, k=10
    {
        Criterion c{8, "n=20 k=10: HNF route >= 50x faster than 184756-minor GCD", 300000.0};
        c.elapsed_ms = run_timed(
            [&]() -> Outcome {
                Rng rng(42008);
                IntMatrix A = random_full_row_rank(rng, 10, 20, -9, 9);
                auto t0 = Clock::now();
                mpz_class fast = det_column_lattice(A);
                auto t1 = Clock::now();
                mpz_class slow = minor_gcd(A);
                auto t2 = Clock::now();
                if (fast != slow) return {false, fail_on(A, "routes disagree")};
                double fast_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
                double slow_ms = std::chrono::duration<double, std::milli>(t2 - t1).count();
                double ratio = slow_ms / std::max(fast_ms, 1e-9);
                char buf[128];
                std::snprintf(buf, sizeof(buf), "hnf %.3f ms, minors %.1f ms, ratio %.0fx",
                              fast_ms, slow_ms, ratio);
                if (ratio < 50.0) return {false, std::string("speedup below 50x: ") + buf};
                return {true, buf};
            },
            c.outcome);
        criteria.push_back(c);
    }

    // 9. HNF contract and uniqueness across pivot rules, 500 instances
    {
        Criterion c{9, "500 random: HNF contract; H identical across pivot rules", 30000.0};
        c.elapsed_ms = run_timed(
            [&]() -> Outcome {
                for (const IntMatrix& A : family7) {
                    HnfResult a = column_hnf(A, PivotRule::min_pivot);
                    HnfResult b = column_hnf(A, PivotRule::xgcd_sweep);
                    std::string why;
                    if (!hnf_contract_holds(A, a, why)) return {false, fail_on(A, why)};
                    if (!hnf_contract_holds(A, b, why)) return {false, fail_on(A, why)};
                    if (!(a.H == b.H))
                        return {false, fail_on(A, "H differs between pivot rules")};
                }
                return {true, ""};
            },
            c.outcome);
        criteria.push_back(c);
    }

    // 10. normalized basis integrality and primitivity
    {
        Criterion c{10, "500 random: normalized basis integral with primitive rows", 0.0};
        c.elapsed_ms = run_timed(
            [&]() -> Outcome {
                for (const IntMatrix& A : family7) {
                    IntMatrix N = normalized_lattice_basis(A);
                    HnfResult r = column_hnf(A);
                    if (!(matmul(r.H, N) == A))
                        return {false, fail_on(A, "H * (H^{-1}A) != A")};
                    if (det_column_lattice(N) != 1)
                        return {false, fail_on(A, "normalized basis rows not primitive")};
                }
                return {true, ""};
            },
            c.outcome);
        criteria.push_back(c);
    }

    bool all = true;
    for (Criterion& c : criteria) {
        bool in_budget = c.budget_ms <= 0.0 || c.elapsed_ms < c.budget_ms;
        bool pass = c.outcome.pass && in_budget;
        all = all && pass;
        std::printf("%s  criterion %2d: %s  [%.2f ms%s]\n", pass ? "PASS" : "FAIL", c.id,
                    c.label.c_str(), c.elapsed_ms,
                    c.budget_ms > 0.0
                        ? (" < " + std::to_string(static_cast<long>(c.budget_ms)) + " ms")
                              .c_str()
                        : "");
        if (!c.outcome.pass)
            std::printf("      reason: %s\n", c.outcome.detail.c_str());
        else if (!in_budget)
            std::printf("      reason: time budget exceeded\n");
        else if (!c.outcome.detail.empty())
            std::printf("      note: %s\n", c.outcome.detail.c_str());
    }
    std::printf("acceptance: %zu/%zu criteria passed\n",
                static_cast<std::size_t>(
                    std::count_if(criteria.begin(), criteria.end(),
                                  [](const Criterion& c) {
                                      return c.outcome.pass &&
                                             (c.budget_ms <= 0.0 || c.elapsed_ms < c.budget_ms);
                                  })),
                criteria.size());
    return all ? 0 : 1;
}
