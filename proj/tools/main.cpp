// latkit command line: exact integer lattice computations on matrix files.
// Exit codes: 0 ok, 2 parse/input error, 3 rank error, 4 trivial kernel,
// 5 enumeration budget exceeded, 6 internal identity violation.

#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "latkit/bounds.hpp"
#include "latkit/hnf.hpp"
#include "latkit/io.hpp"
#include "latkit/kernel.hpp"
#include "latkit/oracle.hpp"
#include "latkit/report.hpp"
#include "latkit/rng.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double ms_between(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double, std::milli>(b - a).count();
}

std::uint64_t fnv1a(std::uint64_t h, const std::string& s) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

constexpr std::uint64_t kFnvOffset = 14695981039346656037ULL;

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016" PRIx64, v);
    return buf;
}

std::string format_ms(double ms) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3f", ms);
    return buf;
}

int run_guarded(const std::function<int()>& body) {
    try {
        return body();
    } catch (const latkit::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const latkit::rank_error& e) {
        std::cerr << "error: " << e.what() << " (rank " << e.computed_rank << ", need "
                  << e.required_rank << ")\n";
        return 3;
    } catch (const latkit::empty_kernel_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const latkit::budget_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const latkit::internal_fault& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 6;
    } catch (const latkit::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

void emit(const latkit::LatticeReport& rep, bool json) {
    std::cout << (json ? latkit::to_json_string(rep) + "\n" : latkit::to_text(rep));
}

int cmd_hnf(const std::string& file, bool show_u, bool json) {
    latkit::IntMatrix A = latkit::read_matrix_file(file);
    auto t0 = Clock::now();
    latkit::HnfResult r = latkit::column_hnf(A);
    auto t1 = Clock::now();

    latkit::LatticeReport rep;
    rep.rows = A.rows();
    rep.cols = A.cols();
    rep.rank = r.k;
    rep.hnf = r.H;
    mpz_class d = 1;
    for (std::size_t i = 0; i < r.k; ++i) {
        rep.hnf_diag.push_back(r.H(i, i));
        d *= r.H(i, i);
    }
    rep.det_column_lattice = d;
    if (show_u) rep.transform = r.U;
    rep.timings_ms.emplace_back("hnf", ms_between(t0, t1));
    emit(rep, json);
    return 0;
}

int cmd_kernel(const std::string& file, bool json) {
    latkit::IntMatrix A = latkit::read_matrix_file(file);
    auto t0 = Clock::now();
    latkit::KernelBasis kb = latkit::kernel_basis(A);
    latkit::NdetSq nd = latkit::ndet_sq(A);
    auto t1 = Clock::now();

    latkit::LatticeReport rep;
    rep.rows = A.rows();
    rep.cols = A.cols();
    rep.rank = A.rows();
    rep.kernel = kb.B;
    rep.ndet_sq = nd.value;
    rep.ndet_approx = latkit::sqrt_decimal(nd.value, 20);
    rep.timings_ms.emplace_back("kernel", ms_between(t0, t1));
    emit(rep, json);
    return 0;
}

int cmd_ndet(const std::string& file, bool json) {
    latkit::IntMatrix A = latkit::read_matrix_file(file);
    auto t0 = Clock::now();
    latkit::HnfResult r = latkit::column_hnf(A);
    latkit::NdetSq nd = latkit::ndet_sq(A);
    auto t1 = Clock::now();

    latkit::LatticeReport rep;
    rep.rows = A.rows();
    rep.cols = A.cols();
    rep.rank = r.k;
    mpz_class d = 1;
    for (std::size_t i = 0; i < r.k; ++i) {
        rep.hnf_diag.push_back(r.H(i, i));
        d *= r.H(i, i);
    }
    rep.det_column_lattice = d;
    rep.ndet_sq = nd.value;
    rep.ndet_approx = latkit::sqrt_decimal(nd.value, 20);
    rep.timings_ms.emplace_back("ndet", ms_between(t0, t1));
    emit(rep, json);
    return 0;
}

int cmd_bound(const std::string& file, bool witness, unsigned long long budget,
              bool json) {
    latkit::IntMatrix A = latkit::read_matrix_file(file);
    auto t0 = Clock::now();
    latkit::BoundReport b = latkit::bound_report(A);
    auto t1 = Clock::now();

    latkit::LatticeReport rep;
    rep.rows = A.rows();
    rep.cols = A.cols();
    rep.rank = A.rows();
    rep.ndet_sq = b.ndet_sq;
    rep.ndet_approx = b.ndet_approx;
    rep.bv_box_radius = b.bv_box_radius;
    rep.siegel_floor = b.siegel_floor;
    rep.a_max = b.a_max;
    rep.timings_ms.emplace_back("bound", ms_between(t0, t1));
    if (witness) {
        latkit::EnumOptions opts;
        opts.budget = budget;
        auto t2 = Clock::now();
        rep.witnesses.push_back(latkit::shortest_kernel_vector(A, opts));
        rep.timings_ms.emplace_back("witness", ms_between(t2, Clock::now()));
    }
    emit(rep, json);
    return 0;
}

int cmd_verify(const std::string& file, unsigned long long budget, bool json) {
    latkit::IntMatrix A = latkit::read_matrix_file(file);
    latkit::EnumOptions opts;
    opts.budget = budget;
    auto t0 = Clock::now();
    latkit::VerificationRecord rec = latkit::verify_theorems(A, opts);
    auto t1 = Clock::now();

    latkit::LatticeReport rep;
    rep.rows = A.rows();
    rep.cols = A.cols();
    rep.rank = A.rows();
    rep.verification = rec;
    rep.timings_ms.emplace_back("verify", ms_between(t0, t1));
    emit(rep, json);
    return rec.all_pass ? 0 : 6;
}

int cmd_bench(std::size_t n, std::size_t k, unsigned trials, std::uint64_t seed,
              long entry_bound, bool json) {
    if (k > n) {
        std::cerr << "error: bench needs k <= n\n";
        return 2;
    }
    latkit::Rng rng(seed);
    std::uint64_t digest = kFnvOffset;

    struct Trial {
        std::string value;
        double hnf_ms;
        double minor_ms;
    };
    std::vector<Trial> results;

    for (unsigned t = 0; t < trials; ++t) {
        latkit::IntMatrix A =
            latkit::random_full_row_rank(rng, k, n, -entry_bound, entry_bound);
        digest = fnv1a(digest, latkit::to_text(A));

        auto t0 = Clock::now();
        mpz_class fast = latkit::det_column_lattice(A);
        auto t1 = Clock::now();
        mpz_class slow = latkit::minor_gcd(A);
        auto t2 = Clock::now();

        if (fast != slow)
            throw latkit::internal_fault(
                "bench: det_column_lattice " + fast.get_str() + " != minor_gcd " +
                slow.get_str() + " on instance " + latkit::to_inline_string(A));
        results.push_back(Trial{fast.get_str(), ms_between(t0, t1), ms_between(t1, t2)});
    }

    double hnf_mean = 0, hnf_max = 0, minor_mean = 0, minor_max = 0;
    for (const Trial& t : results) {
        hnf_mean += t.hnf_ms;
        minor_mean += t.minor_ms;
        hnf_max = std::max(hnf_max, t.hnf_ms);
        minor_max = std::max(minor_max, t.minor_ms);
    }
    if (!results.empty()) {
        hnf_mean /= results.size();
        minor_mean /= results.size();
    }
    double speedup = minor_mean / std::max(hnf_mean, 1e-9);

    if (json) {
        nlohmann::json j;
        j["n"] = n;
        j["k"] = k;
        j["trials"] = trials;
        j["seed"] = seed;
        j["entry_bound"] = entry_bound;
        j["instances_digest"] = hex64(digest);
        nlohmann::json arr = nlohmann::json::array();
        for (const Trial& t : results) {
            nlohmann::json tj;
            tj["det_column_lattice"] = t.value;
            tj["hnf_ms"] = format_ms(t.hnf_ms);
            tj["minor_gcd_ms"] = format_ms(t.minor_ms);
            arr.push_back(tj);
        }
        j["trials_detail"] = arr;
        j["hnf_route"] = {{"mean_ms", format_ms(hnf_mean)}, {"max_ms", format_ms(hnf_max)}};
        j["minor_gcd_route"] = {{"mean_ms", format_ms(minor_mean)},
                                {"max_ms", format_ms(minor_max)}};
        if (!results.empty()) {
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.1f", speedup);
            j["speedup_mean"] = buf;
        }
        j["all_agree"] = true;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "bench: n=" << n << " k=" << k << " trials=" << trials
                  << " seed=" << seed << " entries in [-" << entry_bound << ","
                  << entry_bound << "]\n";
        std::cout << "instances_digest: " << hex64(digest) << "\n";
        for (std::size_t i = 0; i < results.size(); ++i)
            std::cout << "  trial " << i << ": det_column_lattice=" << results[i].value
                      << "  hnf " << format_ms(results[i].hnf_ms) << " ms, minor-gcd "
                      << format_ms(results[i].minor_ms) << " ms\n";
        if (!results.empty()) {
            std::cout << "hnf route:       mean " << format_ms(hnf_mean) << " ms, max "
                      << format_ms(hnf_max) << " ms\n";
            std::cout << "minor-gcd route: mean " << format_ms(minor_mean) << " ms, max "
                      << format_ms(minor_max) << " ms\n";
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.1f", speedup);
            std::cout << "speedup: " << buf << "x, all values agree\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"latkit: exact integer lattice toolkit (column HNF, kernel lattices, "
                 "height bounds, brute-force verification)"};
    app.require_subcommand(1);

    bool json = false;
    unsigned long long budget = latkit::kDefaultEnumerationBudget;
    std::uint64_t seed = 1;
    app.add_flag("--json", json, "machine-readable output, big integers as decimal strings");
    app.add_option("--budget", budget, "max enumeration candidates before giving up");
    app.add_option("--seed", seed, "seed for deterministic instance generation");

    std::string file;
    bool show_u = false;
    auto* hnf = app.add_subcommand("hnf", "column Hermite Normal Form and det(L_C)");
    hnf->add_option("file", file, "matrix file (text or JSON)")->required();
    hnf->add_flag("--show-u", show_u, "include the unimodular transform U");
    hnf->fallthrough();

    auto* kernel = app.add_subcommand("kernel", "kernel lattice basis and ndet^2");
    kernel->add_option("file", file, "matrix file (text or JSON)")->required();
    kernel->fallthrough();

    auto* ndet = app.add_subcommand("ndet", "normalized determinant (squared, exact)");
    ndet->add_option("file", file, "matrix file (text or JSON)")->required();
    ndet->fallthrough();

    bool witness = false;
    auto* bound = app.add_subcommand("bound", "height bounds for nonzero kernel vectors");
    bound->add_option("file", file, "matrix file (text or JSON)")->required();
    bound->add_flag("--witness", witness, "also search for a shortest kernel vector");
    bound->fallthrough();

    auto* verify = app.add_subcommand("verify", "run the full identity suite on one matrix");
    verify->add_option("file", file, "matrix file (text or JSON)")->required();
    verify->fallthrough();

    std::size_t bench_n = 0, bench_k = 0;
    unsigned trials = 10;
    long entry_bound = 9;
    auto* bench = app.add_subcommand(
        "bench", "time the HNF route against minor-GCD enumeration on random instances");
    bench->add_option("--n", bench_n, "columns")->required();
    bench->add_option("--k", bench_k, "rows")->required();
    bench->add_option("--trials", trials, "number of random instances");
    bench->add_option("--entry-bound", entry_bound, "entries drawn from [-b, b]")
        ->check(CLI::PositiveNumber);
    bench->fallthrough();

    CLI11_PARSE(app, argc, argv);

    if (*hnf) return run_guarded([&] { return cmd_hnf(file, show_u, json); });
    if (*kernel) return run_guarded([&] { return cmd_kernel(file, json); });
    if (*ndet) return run_guarded([&] { return cmd_ndet(file, json); });
    if (*bound) return run_guarded([&] { return cmd_bound(file, witness, budget, json); });
    if (*verify) return run_guarded([&] { return cmd_verify(file, budget, json); });
    if (*bench)
        return run_guarded(
            [&] { return cmd_bench(bench_n, bench_k, trials, seed, entry_bound, json); });
    return 0;
}
