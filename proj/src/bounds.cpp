#include "latkit/bounds.hpp"

#include "latkit/kernel.hpp"

namespace latkit {

mpz_class integer_root(const mpz_class& x, unsigned long r) {
    if (r == 0) throw argument_error("integer_root: r must be >= 1");
    if (sgn(x) < 0) throw argument_error("integer_root: x must be >= 0");
    mpz_class m;
    mpz_root(m.get_mpz_t(), x.get_mpz_t(), r);
    return m;
}

namespace {

void require_codim(const IntMatrix& A) {
    if (A.rows() >= A.cols())
        throw empty_kernel_error("bounds: need k < n for a nontrivial kernel");
}

}  // namespace

mpz_class bv_box_radius(const IntMatrix& A) {
    mpz_class nd = ndet_sq(A).value;  // rejects rank-deficient input first
    require_codim(A);
    const unsigned long codim = static_cast<unsigned long>(A.cols() - A.rows());
    return integer_root(nd, 2 * codim);
}

mpz_class siegel_floor(const IntMatrix& A) {
    require_codim(A);
    const mpz_class a = A.max_abs_entry();
    if (sgn(a) == 0) throw argument_error("siegel_floor: zero matrix is degenerate");
    const unsigned long k = static_cast<unsigned long>(A.rows());
    const unsigned long codim = static_cast<unsigned long>(A.cols() - A.rows());
    mpz_class base = a * static_cast<unsigned long>(A.cols());
    mpz_class power;
    mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), k);
    return 1 + integer_root(power, codim);
}

BoundReport bound_report(const IntMatrix& A) {
    BoundReport rep;
    rep.ndet_sq = ndet_sq(A).value;
    require_codim(A);
    rep.codim = A.cols() - A.rows();
    rep.bv_box_radius = integer_root(rep.ndet_sq, 2 * static_cast<unsigned long>(rep.codim));
    rep.siegel_floor = siegel_floor(A);
    rep.a_max = A.max_abs_entry();
    rep.ndet_approx = sqrt_decimal(rep.ndet_sq, 20);
    return rep;
}

std::string sqrt_decimal(const mpz_class& square, unsigned sig_digits) {
    if (sgn(square) < 0) throw argument_error("sqrt_decimal: negative input");
    if (sig_digits == 0) throw argument_error("sqrt_decimal: need at least one digit");
    if (sgn(square) == 0) return "0";

    // floor(sqrt(square) * 10^sig): the first sig_digits digits are exact
    mpz_class scaled = square;
    mpz_class pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, 2 * sig_digits);
    scaled *= pow10;
    mpz_class t;
    mpz_sqrt(t.get_mpz_t(), scaled.get_mpz_t());

    std::string digits = t.get_str();
    const std::size_t int_len = digits.size() - sig_digits;

    if (int_len >= sig_digits) {
        std::string mant = digits.substr(0, sig_digits);
        std::string out;
        out += mant[0];
        out += '.';
        out += mant.substr(1);
        while (out.back() == '0') out.pop_back();
        if (out.back() == '.') out.pop_back();
        return out + "e+" + std::to_string(int_len - 1);
    }

    std::string mant = digits.substr(0, sig_digits);
    std::string out = mant.substr(0, int_len) + "." + mant.substr(int_len);
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
    return out;
}

}  // namespace latkit
