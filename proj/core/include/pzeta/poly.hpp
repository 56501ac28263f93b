#pragma once

#include <utility>
#include <vector>

#include "pzeta/errors.hpp"

namespace pzeta {

// Dense univariate polynomial over a field F.  F needs field arithmetic,
// equality, and the customization points fe_is_zero(F) / fe_one(F).
template <typename F>
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(F c) { c_.push_back(std::move(c)); trim(); }
    explicit Polynomial(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial monomial(F c, long degree) {
        if (degree < 0) throw ArgumentError("negative monomial degree");
        if (fe_is_zero(c)) return {};
        Polynomial p;
        p.c_.resize(static_cast<size_t>(degree) + 1, zero_like(c));
        p.c_.back() = std::move(c);
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<F>& coeffs() const { return c_; }
    const F& leading() const { return c_.back(); }

    F coeff(long k) const {
        if (k < 0 || k >= static_cast<long>(c_.size()))
            return c_.empty() ? F{} : zero_like(c_.front());
        return c_[static_cast<size_t>(k)];
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        Polynomial r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < r.c_.size(); ++i) {
            if (i < a.c_.size() && i < b.c_.size()) r.c_[i] = a.c_[i] + b.c_[i];
            else if (i < a.c_.size()) r.c_[i] = a.c_[i];
            else r.c_[i] = b.c_[i];
        }
        r.trim();
        return r;
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        Polynomial r;
        r.c_.resize(a.c_.size() + b.c_.size() - 1, zero_like(a.c_.front()));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j)
                r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
        r.trim();
        return r;
    }
    friend Polynomial operator*(const F& s, const Polynomial& a) {
        if (fe_is_zero(s)) return {};
        Polynomial r = a;
        for (auto& c : r.c_) c = s * c;
        r.trim();
        return r;
    }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return (a - b).is_zero(); }

    // Quotient and remainder; requires a nonzero divisor.
    static std::pair<Polynomial, Polynomial> divmod(Polynomial a, const Polynomial& b) {
        if (b.is_zero()) throw ArgumentError("polynomial division by zero");
        Polynomial q;
        if (a.degree() >= b.degree())
            q.c_.resize(static_cast<size_t>(a.degree() - b.degree()) + 1, zero_like(b.leading()));
        while (!a.is_zero() && a.degree() >= b.degree()) {
            F f = a.leading() / b.leading();
            long shift = a.degree() - b.degree();
            q.c_[static_cast<size_t>(shift)] = f;
            a = a - Polynomial::monomial(std::move(f), shift) * b;
        }
        q.trim();
        return {std::move(q), std::move(a)};
    }

    // Monic gcd.
    static Polynomial gcd(Polynomial a, Polynomial b) {
        while (!b.is_zero()) {
            auto [q, r] = divmod(std::move(a), b);
            (void)q;
            a = std::move(b);
            b = std::move(r);
        }
        if (!a.is_zero()) a = a.monic();
        return a;
    }

    Polynomial monic() const {
        if (is_zero()) return {};
        F inv = fe_one(leading()) / leading();
        return inv * *this;
    }

    template <typename X>
    X eval(const X& x, const X& zero) const {
        X acc = zero;
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + X(c_[i]);
        return acc;
    }

    F eval(const F& x) const {
        if (c_.empty()) return zero_like(x);
        F acc = zero_like(x);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

  private:
    static F zero_like(const F& like) { return like - like; }
    void trim() {
        while (!c_.empty() && fe_is_zero(c_.back())) c_.pop_back();
    }
    std::vector<F> c_;
};

// Reduced fraction of polynomials over F: gcd(num, den) = 1, den monic.
template <typename F>
class RatFunc {
  public:
    RatFunc() : den_(Polynomial<F>(fe_one(F{}))) {}
    explicit RatFunc(F c) : num_(std::move(c)), den_(Polynomial<F>(fe_one(F{}))) {}
    explicit RatFunc(Polynomial<F> n) : num_(std::move(n)), den_(Polynomial<F>(fe_one(F{}))) {}
    RatFunc(Polynomial<F> n, Polynomial<F> d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

    bool is_zero() const { return num_.is_zero(); }
    const Polynomial<F>& num() const { return num_; }
    const Polynomial<F>& den() const { return den_; }
    bool is_polynomial() const { return den_.degree() == 0; }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw ArgumentError("rational function division by zero");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend bool operator==(const RatFunc& a, const RatFunc& b) { return (a - b).is_zero(); }

  private:
    void reduce() {
        if (den_.is_zero()) throw ArgumentError("zero denominator");
        if (num_.is_zero()) {
            den_ = Polynomial<F>(fe_one(den_.leading()));
            return;
        }
        auto g = Polynomial<F>::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = Polynomial<F>::divmod(num_, g).first;
            den_ = Polynomial<F>::divmod(den_, g).first;
        }
        F inv = fe_one(den_.leading()) / den_.leading();
        num_ = inv * num_;
        den_ = inv * den_;
    }
    Polynomial<F> num_;
    Polynomial<F> den_;
};

}  // namespace pzeta
