#pragma once

#include <numeric>

#include "pzeta/qscalar.hpp"

namespace pzeta {

// Which field the base q lives in: a concrete prime, or a free symbol.
struct QMode {
    Int p = 0;  // 0 means symbolic q
    bool symbolic() const { return p == 0; }
    QScalar q_pow(const Rat& e) const { return QScalar::q_pow(p, e); }
    friend bool operator==(const QMode& a, const QMode& b) { return a.p == b.p; }
};

// Exact function of a complex variable s of the shape R(q^(-s/V)) with
// coefficients in Q(q^(1/D)): the algebra in which local zeta functions,
// radial pairings and their identities are verified symbolically.
class SymFunc {
  public:
    SymFunc() : SymFunc(QMode{}, QScalar(0)) {}
    SymFunc(QMode mode, QScalar constant)
        : mode_(mode), V_(1), f_(RatFunc<QScalar>(std::move(constant))) {}

    // q^(a*s + b)
    static SymFunc exp_affine(QMode mode, const Rat& a, const Rat& b) {
        SymFunc r(mode, mode.q_pow(b));
        if (a == 0) return r;
        r.V_ = static_cast<long>(a.get_den().get_si());
        long k = -static_cast<long>(a.get_num().get_si());  // T^k with T = q^(-s/V)
        auto mono = Polynomial<QScalar>::monomial(QScalar(1), k >= 0 ? k : -k);
        RatFunc<QScalar> t_part = k >= 0
            ? RatFunc<QScalar>(mono)
            : RatFunc<QScalar>(Polynomial<QScalar>(QScalar(1)), mono);
        r.f_ = r.f_ * t_part;
        return r;
    }

    const QMode& mode() const { return mode_; }
    bool is_zero() const { return f_.is_zero(); }

    friend SymFunc operator+(SymFunc a, SymFunc b) { return binop(std::move(a), std::move(b), '+'); }
    friend SymFunc operator-(SymFunc a, SymFunc b) { return binop(std::move(a), std::move(b), '-'); }
    friend SymFunc operator*(SymFunc a, SymFunc b) { return binop(std::move(a), std::move(b), '*'); }
    friend SymFunc operator/(SymFunc a, SymFunc b) { return binop(std::move(a), std::move(b), '/'); }
    friend bool operator==(const SymFunc& a, const SymFunc& b) { return (a - b).is_zero(); }

    // Exact value at rational s; throws PoleError at a denominator zero.
    QScalar at(const Rat& s) const {
        QScalar t = mode_.q_pow(Rat(-s) / V_);
        QScalar den = eval_poly(f_.den(), t);
        if (den.is_zero())
            throw PoleError("evaluation at s = " + rat_str(s) + " hits a pole", "symbolic denominator");
        return eval_poly(f_.num(), t) / den;
    }

    bool has_pole_at(const Rat& s) const {
        QScalar t = mode_.q_pow(Rat(-s) / V_);
        return eval_poly(f_.den(), t).is_zero();
    }

    // Numeric value at complex s (q must be concrete or supplied).
    Complex at(const Complex& s, const Rat& q_value = Rat(0)) const {
        Rat q = mode_.symbolic() ? q_value : Rat(mode_.p);
        if (q <= 0) throw ArgumentError("numeric evaluation needs a concrete q");
        Complex minus_s_over_v = Complex(Real(Rat(-1, V_)) * s.real(), Real(Rat(-1, V_)) * s.imag());
        Complex t = pow_complex(q, minus_s_over_v);
        Complex num = eval_poly(f_.num(), t, q);
        Complex den = eval_poly(f_.den(), t, q);
        if (den.is_zero())
            throw PoleError("numeric evaluation hits a pole", "symbolic denominator");
        return num / den;
    }

  private:
    static SymFunc binop(SymFunc a, SymFunc b, char op) {
        if (!(a.mode_ == b.mode_)) throw Error("mixing symbolic functions over different q");
        long V = std::lcm(a.V_, b.V_);
        a.rescale(V);
        b.rescale(V);
        SymFunc r(a.mode_, QScalar(0));
        r.V_ = V;
        switch (op) {
            case '+': r.f_ = a.f_ + b.f_; break;
            case '-': r.f_ = a.f_ - b.f_; break;
            case '*': r.f_ = a.f_ * b.f_; break;
            case '/': r.f_ = a.f_ / b.f_; break;
        }
        return r;
    }

    void rescale(long new_V) {
        if (new_V == V_) return;
        long k = new_V / V_;
        f_ = RatFunc<QScalar>(stretch(f_.num(), k), stretch(f_.den(), k));
        V_ = new_V;
    }

    static Polynomial<QScalar> stretch(const Polynomial<QScalar>& f, long k) {
        if (k == 1 || f.is_zero()) return f;
        std::vector<QScalar> out(static_cast<size_t>(f.degree()) * k + 1, QScalar(0));
        for (long i = 0; i <= f.degree(); ++i) out[static_cast<size_t>(i * k)] = f.coeff(i);
        return Polynomial<QScalar>(std::move(out));
    }

    static QScalar eval_poly(const Polynomial<QScalar>& f, const QScalar& t) {
        QScalar acc(0);
        for (long i = f.degree(); i >= 0; --i) acc = acc * t + f.coeff(i);
        return acc;
    }

    Complex eval_poly(const Polynomial<QScalar>& f, const Complex& t, const Rat& q) const {
        Complex acc;
        for (long i = f.degree(); i >= 0; --i)
            acc = acc * t + Complex(f.coeff(i).to_real(q), Real(0L));
        return acc;
    }

    QMode mode_;
    long V_;
    RatFunc<QScalar> f_;
};

}  // namespace pzeta
