#include "pzeta/numeric.hpp"

#include <atomic>
#include <cstdio>
#include <vector>

namespace pzeta {

namespace {
std::atomic<long> g_default_prec{256};
}

long default_real_precision() { return g_default_prec.load(); }

void set_default_real_precision(long bits) {
    if (bits < 24 || bits > 100000) throw ArgumentError("precision out of range");
    g_default_prec.store(bits);
}

std::string Real::str(int digits) const {
    char fmt[32];
    std::snprintf(fmt, sizeof(fmt), "%%.%dRg", digits);
    char* out = nullptr;
    if (mpfr_asprintf(&out, fmt, v_) < 0) return "?";
    std::string s(out);
    mpfr_free_str(out);
    return s;
}

std::string Complex::str(int digits) const {
    return re_.str(digits) + (im_.sign() < 0 ? " - " : " + ") + abs(im_).str(digits) + "i";
}

Real Real::pi(long prec) {
    Real r(0L, prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

Complex Complex::unit(const Rat& turns, long prec) {
    Real angle = Real(2L, prec) * Real::pi(prec) * Real(turns, prec);
    auto [s, c] = sin_cos(angle);
    return {std::move(c), std::move(s)};
}

Complex pow_complex(const Rat& base, const Complex& s) {
    if (base <= 0) throw ArgumentError("pow_complex needs a positive base");
    Real lb = log(Real(base));
    return exp(Complex(s.real() * lb, s.imag() * lb));
}

}  // namespace pzeta
