#pragma once

// Aggregated per-instance results for the CLI: whatever a subcommand
// computed, rendered as aligned text or as JSON with every big integer as an
// exact decimal string.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latkit/int_matrix.hpp"
#include "latkit/oracle.hpp"

namespace latkit {

struct LatticeReport {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t rank = 0;

    std::vector<mpz_class> hnf_diag;
    std::optional<IntMatrix> hnf;
    std::optional<IntMatrix> transform;  // U, when requested
    std::optional<mpz_class> det_column_lattice;
    std::optional<mpz_class> ndet_sq;
    std::string ndet_approx;  // approximate decimal, display only
    std::optional<mpz_class> bv_box_radius;
    std::optional<mpz_class> siegel_floor;
    std::optional<mpz_class> a_max;
    std::optional<IntMatrix> kernel;  // rows form the kernel basis
    std::vector<KernelWitness> witnesses;
    std::optional<VerificationRecord> verification;

    std::vector<std::pair<std::string, double>> timings_ms;
};

std::string to_json_string(const LatticeReport& rep);
std::string to_text(const LatticeReport& rep);

}  // namespace latkit
