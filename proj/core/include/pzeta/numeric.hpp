#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "pzeta/rational.hpp"

namespace pzeta {

// Character sums live in cyclotomic fields we do not represent exactly, so
// complex values use arbitrary-precision floating point.  The default
// precision is 256 bits (~77 decimal digits), comfortably below the 1e-25 /
// 1e-30 residual tolerances used throughout.
long default_real_precision();
void set_default_real_precision(long bits);

class Real {
  public:
    Real() : Real(0L) {}
    explicit Real(long v, long prec = 0) { init(prec); mpfr_set_si(v_, v, MPFR_RNDN); }
    explicit Real(double v, long prec = 0) { init(prec); mpfr_set_d(v_, v, MPFR_RNDN); }
    explicit Real(const Rat& v, long prec = 0) { init(prec); mpfr_set_q(v_, v.get_mpq_t(), MPFR_RNDN); }
    explicit Real(const Int& v, long prec = 0) { init(prec); mpfr_set_z(v_, v.get_mpz_t(), MPFR_RNDN); }
    explicit Real(const std::string& s, long prec = 0) {
        init(prec);
        if (mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0)
            throw ArgumentError("cannot parse real from \"" + s + "\"");
    }

    Real(const Real& o) { init(mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept { mpfr_init2(v_, 8); mpfr_swap(v_, o.v_); }
    Real& operator=(Real o) noexcept { mpfr_swap(v_, o.v_); return *this; }
    ~Real() { mpfr_clear(v_); }

    long precision() const { return mpfr_get_prec(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    std::string str(int digits = 20) const;

    friend Real operator+(const Real& a, const Real& b) { return binop(a, b, mpfr_add); }
    friend Real operator-(const Real& a, const Real& b) { return binop(a, b, mpfr_sub); }
    friend Real operator*(const Real& a, const Real& b) { return binop(a, b, mpfr_mul); }
    friend Real operator/(const Real& a, const Real& b) { return binop(a, b, mpfr_div); }
    Real operator-() const { Real r(0L, precision()); mpfr_neg(r.v_, v_, MPFR_RNDN); return r; }
    Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

    friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) == 0; }

    friend Real abs(const Real& a) { Real r(0L, a.precision()); mpfr_abs(r.v_, a.v_, MPFR_RNDN); return r; }
    friend Real exp(const Real& a) { Real r(0L, a.precision()); mpfr_exp(r.v_, a.v_, MPFR_RNDN); return r; }
    friend Real log(const Real& a) { Real r(0L, a.precision()); mpfr_log(r.v_, a.v_, MPFR_RNDN); return r; }
    friend Real sqrt(const Real& a) { Real r(0L, a.precision()); mpfr_sqrt(r.v_, a.v_, MPFR_RNDN); return r; }
    friend Real pow(const Real& a, const Real& b) { return binop(a, b, mpfr_pow); }
    friend std::pair<Real, Real> sin_cos(const Real& a) {
        Real s(0L, a.precision()), c(0L, a.precision());
        mpfr_sin_cos(s.v_, c.v_, a.v_, MPFR_RNDN);
        return {std::move(s), std::move(c)};
    }
    static Real pi(long prec = 0);

  private:
    void init(long prec) { mpfr_init2(v_, prec > 0 ? prec : default_real_precision()); }
    using mpfr_fn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
    static Real binop(const Real& a, const Real& b, mpfr_fn fn) {
        Real r(0L, std::max(a.precision(), b.precision()));
        fn(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    mpfr_t v_;
};

class Complex {
  public:
    Complex() = default;
    Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
    explicit Complex(Real re) : re_(std::move(re)), im_(0L) {}
    explicit Complex(const Rat& v) : re_(v), im_(0L) {}
    explicit Complex(long v) : re_(v), im_(0L) {}

    const Real& real() const { return re_; }
    const Real& imag() const { return im_; }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

    friend Complex operator+(const Complex& a, const Complex& b) { return {a.re_ + b.re_, a.im_ + b.im_}; }
    friend Complex operator-(const Complex& a, const Complex& b) { return {a.re_ - b.re_, a.im_ - b.im_}; }
    Complex operator-() const { return {-re_, -im_}; }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend Complex operator/(const Complex& a, const Complex& b) {
        Real n = b.re_ * b.re_ + b.im_ * b.im_;
        return {(a.re_ * b.re_ + a.im_ * b.im_) / n, (a.im_ * b.re_ - a.re_ * b.im_) / n};
    }
    Complex& operator+=(const Complex& o) { re_ += o.re_; im_ += o.im_; return *this; }
    Complex& operator-=(const Complex& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    Complex& operator*=(const Complex& o) { *this = *this * o; return *this; }

    Complex conj() const { return {re_, -im_}; }
    friend Real abs(const Complex& a) { return sqrt(a.re_ * a.re_ + a.im_ * a.im_); }
    std::string str(int digits = 20) const;

    // exp(2*pi*i * turns)
    static Complex unit(const Rat& turns, long prec = 0);
    // exp(z)
    friend Complex exp(const Complex& z) {
        auto [s, c] = sin_cos(z.im_);
        Real m = exp(z.re_);
        return {m * c, m * s};
    }

  private:
    Real re_{0L}, im_{0L};
};

// base^s for positive rational base and complex exponent.
Complex pow_complex(const Rat& base, const Complex& s);

// Redeclarations of the hidden friends so qualified calls work too.
Real abs(const Real& a);
Real exp(const Real& a);
Real log(const Real& a);
Real sqrt(const Real& a);
Real pow(const Real& a, const Real& b);
std::pair<Real, Real> sin_cos(const Real& a);

}  // namespace pzeta
