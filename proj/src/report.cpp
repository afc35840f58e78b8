#include "latkit/report.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"

#include "latkit/io.hpp"

namespace latkit {

namespace {

std::string format_ms(double ms) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3f", ms);
    return buf;
}

nlohmann::json matrix_json(const IntMatrix& M) {
    return nlohmann::json::parse(to_json_string(M));
}

nlohmann::json witness_json(const KernelWitness& w) {
    nlohmann::json j;
    std::vector<std::string> v;
    v.reserve(w.vector.dim());
    for (const auto& e : w.vector.entries()) v.push_back(e.get_str());
    j["vector"] = v;
    j["sup_norm"] = w.sup_norm.value.get_str();
    return j;
}

}  // namespace

std::string to_json_string(const LatticeReport& rep) {
    nlohmann::json j;
    j["rows"] = rep.rows;
    j["cols"] = rep.cols;
    j["rank"] = rep.rank;
    if (!rep.hnf_diag.empty()) {
        std::vector<std::string> d;
        for (const auto& e : rep.hnf_diag) d.push_back(e.get_str());
        j["hnf_diag"] = d;
    }
    if (rep.hnf) j["hnf"] = matrix_json(*rep.hnf);
    if (rep.transform) j["transform"] = matrix_json(*rep.transform);
    if (rep.det_column_lattice)
        j["det_column_lattice"] = rep.det_column_lattice->get_str();
    if (rep.ndet_sq) j["ndet_sq"] = rep.ndet_sq->get_str();
    if (!rep.ndet_approx.empty()) j["ndet_approx"] = rep.ndet_approx;
    if (rep.bv_box_radius) j["bv_box_radius"] = rep.bv_box_radius->get_str();
    if (rep.siegel_floor) j["siegel_floor"] = rep.siegel_floor->get_str();
    if (rep.a_max) j["a_max"] = rep.a_max->get_str();
    if (rep.kernel) j["kernel_basis"] = matrix_json(*rep.kernel);
    if (!rep.witnesses.empty()) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& w : rep.witnesses) arr.push_back(witness_json(w));
        j["witnesses"] = arr;
    }
    if (rep.verification) {
        nlohmann::json v;
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& c : rep.verification->checks) {
            nlohmann::json cj;
            cj["name"] = c.name;
            cj["pass"] = c.pass;
            cj["lhs"] = c.lhs;
            cj["rhs"] = c.rhs;
            arr.push_back(cj);
        }
        v["checks"] = arr;
        v["all_pass"] = rep.verification->all_pass;
        v["normalized_lattice_equals_original"] =
            rep.verification->normalized_lattice_equals_original;
        j["verification"] = v;
    }
    if (!rep.timings_ms.empty()) {
        nlohmann::json t;
        for (const auto& [name, ms] : rep.timings_ms) t[name] = format_ms(ms);
        j["timings_ms"] = t;
    }
    return j.dump(2);
}

namespace {

void print_matrix_rows(std::ostringstream& out, const IntMatrix& M,
                       const std::string& indent) {
    for (std::size_t i = 0; i < M.rows(); ++i) {
        out << indent;
        for (std::size_t j = 0; j < M.cols(); ++j) {
            if (j) out << ' ';
            out << M(i, j).get_str();
        }
        out << '\n';
    }
}

}  // namespace

std::string to_text(const LatticeReport& rep) {
    std::ostringstream out;
    out << "matrix: " << rep.rows << " x " << rep.cols << ", rank " << rep.rank << '\n';
    if (rep.hnf) {
        out << "hnf:\n";
        print_matrix_rows(out, *rep.hnf, "  ");
    }
    if (!rep.hnf_diag.empty()) {
        out << "hnf_diag:";
        for (const auto& e : rep.hnf_diag) out << ' ' << e.get_str();
        out << '\n';
    }
    if (rep.det_column_lattice)
        out << "det_column_lattice: " << rep.det_column_lattice->get_str() << '\n';
    if (rep.ndet_sq) out << "ndet_sq: " << rep.ndet_sq->get_str() << '\n';
    if (!rep.ndet_approx.empty()) out << "ndet ~= " << rep.ndet_approx << '\n';
    if (rep.bv_box_radius)
        out << "bv_box_radius: " << rep.bv_box_radius->get_str() << '\n';
    if (rep.siegel_floor) out << "siegel_floor: " << rep.siegel_floor->get_str() << '\n';
    if (rep.a_max) out << "a_max: " << rep.a_max->get_str() << '\n';
    if (rep.kernel) {
        out << "kernel_basis:\n";
        print_matrix_rows(out, *rep.kernel, "  ");
    }
    if (rep.transform) {
        out << "transform:\n";
        print_matrix_rows(out, *rep.transform, "  ");
    }
    for (const auto& w : rep.witnesses) {
        out << "witness (sup_norm " << w.sup_norm.value.get_str() << "):";
        for (const auto& e : w.vector.entries()) out << ' ' << e.get_str();
        out << '\n';
    }
    if (rep.verification) {
        for (const auto& c : rep.verification->checks)
            out << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "  (" << c.lhs
                << " vs " << c.rhs << ")\n";
        out << "checks passed: "
            << [&] {
                   std::size_t p = 0;
                   for (const auto& c : rep.verification->checks) p += c.pass;
                   return p;
               }()
            << "/" << rep.verification->checks.size() << '\n';
        out << "normalized lattice equals original: "
            << (rep.verification->normalized_lattice_equals_original ? "yes" : "no")
            << '\n';
    }
    for (const auto& [name, ms] : rep.timings_ms)
        out << "time " << name << ": " << format_ms(ms) << " ms\n";
    return out.str();
}

}  // namespace latkit
