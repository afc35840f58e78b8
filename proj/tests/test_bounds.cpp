#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN

#include "latkit/bounds.hpp"

#include "latkit/kernel.hpp"
#include "latkit/oracle.hpp"
#include "latkit/rng.hpp"
#include "test_util.hpp"

using latkit::IntMatrix;

TEST_CASE("integer_root worked examples") {
    CHECK(latkit::integer_root(6, 2) == 2);
    CHECK(latkit::integer_root(9, 4) == 1);
    mpz_class x("1000000000000000000");  // 10^18
    CHECK(latkit::integer_root(x, 3) == 1000000);
    CHECK(latkit::integer_root(0, 5) == 0);
    CHECK_THROWS_AS(latkit::integer_root(4, 0), latkit::argument_error);
    CHECK_THROWS_AS(latkit::integer_root(-1, 2), latkit::argument_error);
}

TEST_CASE("integer_root brackets exactly") {
    for (unsigned long r : {1UL, 2UL, 3UL}) {
        for (long x = 0; x <= 1000000; ++x) {
            mpz_class m = latkit::integer_root(x, r);
            mpz_class lo, hi;
            mpz_pow_ui(lo.get_mpz_t(), m.get_mpz_t(), r);
            mpz_class m1 = m + 1;
            mpz_pow_ui(hi.get_mpz_t(), m1.get_mpz_t(), r);
            REQUIRE(lo <= x);
            REQUIRE(x < hi);
        }
    }
    // random big inputs
    latkit::Rng rng(401);
    for (int trial = 0; trial < 200; ++trial) {
        mpz_class x = 0;
        for (int limb = 0; limb < 4; ++limb) x = (x << 62) + rng.uniform(0, (1L << 62) - 1);
        unsigned long r = static_cast<unsigned long>(rng.uniform(1, 10));
        mpz_class m = latkit::integer_root(x, r);
        mpz_class lo, hi;
        mpz_pow_ui(lo.get_mpz_t(), m.get_mpz_t(), r);
        mpz_class m1 = m + 1;
        mpz_pow_ui(hi.get_mpz_t(), m1.get_mpz_t(), r);
        CHECK(lo <= x);
        CHECK(x < hi);
    }
}

TEST_CASE("bv_box_radius worked examples") {
    CHECK(latkit::bv_box_radius(IntMatrix{{1, 2, 3}, {4, 5, 6}}) == 2);
    CHECK(latkit::bv_box_radius(IntMatrix{{2, 4, 4}}) == 1);
    CHECK(latkit::bv_box_radius(IntMatrix{{1, 0}}) == 1);
    CHECK_THROWS_AS(latkit::bv_box_radius(IntMatrix::identity(2)),
                    latkit::empty_kernel_error);
    CHECK_THROWS_AS(latkit::bv_box_radius(IntMatrix{{1, 2}, {2, 4}}), latkit::rank_error);
}

TEST_CASE("siegel_floor worked examples") {
    CHECK(latkit::siegel_floor(IntMatrix{{1, 2, 3}, {4, 5, 6}}) == 325);
    CHECK(latkit::siegel_floor(IntMatrix{{1, 0}}) == 3);
    CHECK(latkit::siegel_floor(IntMatrix{{2, 4, 4}}) == 4);
    CHECK_THROWS_AS(latkit::siegel_floor(IntMatrix{{0, 0, 0}}), latkit::argument_error);
}

TEST_CASE("siegel_floor is the exact floor of the fractional power") {
    // largest m with (m-1)^(n-k) <= (n*a)^k
    latkit::Rng rng(402);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = static_cast<std::size_t>(rng.uniform(2, 6));
        std::size_t k = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(n) - 1));
        IntMatrix A = latkit::random_matrix(rng, k, n, -9, 9);
        if (A.is_zero()) continue;
        mpz_class m = latkit::siegel_floor(A);
        mpz_class base = A.max_abs_entry() * static_cast<unsigned long>(n);
        mpz_class target;
        mpz_pow_ui(target.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(k));
        mpz_class below, at;
        mpz_class m_minus = m - 1;
        mpz_pow_ui(below.get_mpz_t(), m_minus.get_mpz_t(), static_cast<unsigned long>(n - k));
        mpz_pow_ui(at.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(n - k));
        CHECK(below <= target);
        CHECK(target < at);
    }
}

TEST_CASE("bound_report worked examples") {
    latkit::BoundReport r = latkit::bound_report(IntMatrix{{1, 2, 3}, {4, 5, 6}});
    CHECK(r.ndet_sq == 6);
    CHECK(r.codim == 1);
    CHECK(r.bv_box_radius == 2);
    CHECK(r.siegel_floor == 325);
    CHECK(r.a_max == 6);

    r = latkit::bound_report(IntMatrix{{2, 4, 4}});
    CHECK(r.ndet_sq == 9);
    CHECK(r.codim == 2);
    CHECK(r.bv_box_radius == 1);
    CHECK(r.siegel_floor == 4);
    CHECK(r.a_max == 4);
    CHECK(r.ndet_approx == "3");

    r = latkit::bound_report(IntMatrix{{1, 0}});
    CHECK(r.ndet_sq == 1);
    CHECK(r.codim == 1);
    CHECK(r.bv_box_radius == 1);
    CHECK(r.siegel_floor == 3);
    CHECK(r.a_max == 1);
}

TEST_CASE("report invariants on random instances") {
    latkit::Rng rng(403);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = static_cast<std::size_t>(rng.uniform(2, 6));
        std::size_t k = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(n) - 1));
        IntMatrix A = latkit::random_full_row_rank(rng, k, n, -9, 9);
        latkit::BoundReport r = latkit::bound_report(A);
        mpz_class lo, hi;
        mpz_pow_ui(lo.get_mpz_t(), r.bv_box_radius.get_mpz_t(),
                   2 * static_cast<unsigned long>(r.codim));
        mpz_class next = r.bv_box_radius + 1;
        mpz_pow_ui(hi.get_mpz_t(), next.get_mpz_t(), 2 * static_cast<unsigned long>(r.codim));
        CHECK(lo <= r.ndet_sq);
        CHECK(r.ndet_sq < hi);
        CHECK(r.bv_box_radius <= r.siegel_floor);
    }
}

TEST_CASE("a witness always exists within the box radius") {
    latkit::Rng rng(404);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = static_cast<std::size_t>(rng.uniform(2, 5));
        std::size_t k = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(n) - 1));
        IntMatrix A = latkit::random_full_row_rank(rng, k, n, -5, 5);
        latkit::KernelWitness w = latkit::shortest_kernel_vector(A);
        CHECK(w.sup_norm.value <= latkit::bv_box_radius(A));
        CHECK(latkit::matvec(A, w.vector).is_zero());
    }
}

TEST_CASE("integer scaling leaves the solution set unchanged") {
    latkit::Rng rng(405);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = static_cast<std::size_t>(rng.uniform(2, 5));
        std::size_t k = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(n) - 1));
        IntMatrix A = latkit::random_full_row_rank(rng, k, n, -9, 9);
        long c = rng.uniform(2, 5);
        IntMatrix cA = A;
        for (std::size_t i = 0; i < A.rows(); ++i)
            for (std::size_t j = 0; j < A.cols(); ++j) cA(i, j) *= c;
        CHECK(latkit::lattice_equal(latkit::kernel_basis(cA).B,
                                    latkit::kernel_basis(A).B));
    }
}

TEST_CASE("sqrt_decimal display strings") {
    CHECK(latkit::sqrt_decimal(0, 20) == "0");
    CHECK(latkit::sqrt_decimal(9, 20) == "3");
    CHECK(latkit::sqrt_decimal(2, 20) == "1.4142135623730950488");
    CHECK(latkit::sqrt_decimal(6, 20) == "2.4494897427831780981");
    CHECK(latkit::sqrt_decimal(6, 5) == "2.4494");
    // perfect square with a huge root
    mpz_class big("123456789123456789123456789");
    CHECK(latkit::sqrt_decimal(big * big, 20) == "1.2345678912345678912e+26");
    CHECK(latkit::sqrt_decimal(mpz_class(10) * mpz_class(10), 1) == "1e+1");
}
