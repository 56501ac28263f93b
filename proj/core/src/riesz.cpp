#include "pzeta/riesz.hpp"

namespace pzeta {

GammaValue gamma_n(const Rat& a, long n, QMode mode) {
    if (a == 0)
        throw PoleError("Gamma_n has its unique simple pole at a = 0", "(1 - q^-a)");
    QScalar num = QScalar(1) - mode.q_pow(a - n);
    QScalar den = QScalar(1) - mode.q_pow(-a);
    return GammaValue{num / den, a == n};
}

Complex gamma_n(const Complex& a, long n, const Rat& q) {
    Real tol("1e-20");
    Complex one(Rat(1));
    Complex qma = pow_complex(q, -a);
    if (abs(qma - one) < tol)
        throw PoleError("Gamma_n pole lattice a = 0 (mod 2*pi*i/log q)", "(1 - q^-a)");
    Complex qan = pow_complex(q, a - Complex(Rat(n)));
    return (one - qan) / (one - qma);
}

SymFunc gamma_n_sym(long n, QMode mode) {
    SymFunc one(mode, QScalar(1));
    SymFunc num = one - SymFunc::exp_affine(mode, Rat(1), Rat(-n));
    SymFunc den = one - SymFunc::exp_affine(mode, Rat(-1), Rat(0));
    return num / den;
}

namespace {

// <||x||^(a-n), W[l]> as a function of the kernel exponent a.
QScalar ball_moment(const Int& p, long n, long l, const Rat& a) {
    // q^(-l a) (1-q^-n) / (1-q^-a)
    QScalar num = QScalar::num_q_pow(p, Rat(-l) * a) * (QScalar(1) - QScalar::num_q_pow(p, Rat(-n)));
    return num / (QScalar(1) - QScalar::num_q_pow(p, -a));
}

Complex ball_moment(const Rat& q, long n, long l, const Complex& a) {
    Complex num = pow_complex(q, Complex(Real(Rat(-l)) * a.real(), Real(Rat(-l)) * a.imag()));
    num = num * (Complex(Rat(1)) - Complex(rat_pow(q, -n)));
    return num / (Complex(Rat(1)) - pow_complex(q, -a));
}

}  // namespace

QScalar riesz_pair(const Rat& a, const DeltaFunction& phi) {
    const Int& p = phi.prime();
    long n = phi.dim();
    if (a == 0) return QScalar(phi.value_at_zero());  // Dirac delta
    if (a == n)
        throw PoleError("Riesz pairing on the pole lattice a = n", "(1 - q^(a-n))");
    QMode mode{p};
    QScalar one(1);
    QScalar pole_den = one - mode.q_pow(a - n);
    QScalar value = QScalar(phi.value_at_zero()) * (one - mode.q_pow(Rat(-n))) / pole_den;
    QScalar pref = (one - mode.q_pow(-a)) / pole_den;
    // Interior (Phi - Phi(0) over the unit ball) and exterior terms share the
    // same shell sums relative to the unit ball.
    for (const auto& t : phi.terms()) {
        if (t.level == 0) continue;
        QScalar shells = ball_moment(p, n, t.level, a) - ball_moment(p, n, 0, a);
        value = value + pref * QScalar(t.coeff) * shells;
    }
    return value;
}

Complex riesz_pair(const Complex& a, const DeltaFunction& phi) {
    Rat q(phi.prime());
    long n = phi.dim();
    Real tol("1e-20");
    Complex one(Rat(1));
    // On the a = 0 lattice the kernel is the Dirac delta.
    if (abs(pow_complex(q, a) - one) < tol) return Complex(phi.value_at_zero());
    Complex qan = pow_complex(q, a - Complex(Rat(n)));
    if (abs(qan - one) < tol)
        throw PoleError("Riesz pairing on the pole lattice a = n (mod 2*pi*i/log q)",
                        "(1 - q^(a-n))");
    Complex pole_den = one - qan;
    Complex value = Complex(phi.value_at_zero()) * (one - Complex(rat_pow(q, -n))) / pole_den;
    Complex pref = (one - pow_complex(q, -a)) / pole_den;
    for (const auto& t : phi.terms()) {
        if (t.level == 0) continue;
        Complex shells = ball_moment(q, n, t.level, a) - ball_moment(q, n, 0, a);
        value += pref * Complex(t.coeff) * shells;
    }
    return value;
}

SymFunc riesz_pair_sym(const DeltaFunction& phi) {
    QMode mode{phi.prime()};
    long n = phi.dim();
    SymFunc one(mode, QScalar(1));
    SymFunc pole_den = one - SymFunc::exp_affine(mode, Rat(1), Rat(-n));
    SymFunc value = SymFunc(mode, QScalar(phi.value_at_zero()) * (QScalar(1) - mode.q_pow(Rat(-n)))) / pole_den;
    SymFunc pref = (one - SymFunc::exp_affine(mode, Rat(-1), Rat(0))) / pole_den;
    SymFunc qn_shell_den = one - SymFunc::exp_affine(mode, Rat(-1), Rat(0));
    SymFunc vol_factor(mode, QScalar(1) - mode.q_pow(Rat(-n)));
    for (const auto& t : phi.terms()) {
        if (t.level == 0) continue;
        SymFunc moment_l = SymFunc::exp_affine(mode, Rat(-t.level), Rat(0)) * vol_factor / qn_shell_den;
        SymFunc moment_0 = vol_factor / qn_shell_den;
        value = value + pref * SymFunc(mode, QScalar(t.coeff)) * (moment_l - moment_0);
    }
    return value;
}

QScalar riesz_fourier_residual(const Rat& a, const DeltaFunction& phi) {
    GammaValue g = gamma_n(a, phi.dim(), QMode{phi.prime()});
    if (g.on_zero_locus)
        throw PoleError("kernel normalization degenerates at a = n", "Gamma_n(a) = 0");
    QScalar lhs = pair_radial(a - phi.dim(), phi.fourier(), true) / g.value;
    QScalar rhs = pair_radial(-a, phi, true);
    return lhs - rhs;
}

Complex riesz_fourier_residual(const Complex& a, const DeltaFunction& phi) {
    Complex g = gamma_n(a, phi.dim(), Rat(phi.prime()));
    Real tol("1e-20");
    if (abs(g) < tol)
        throw PoleError("kernel normalization degenerates on the a = n lattice", "Gamma_n(a) = 0");
    Complex lhs = pair_radial(a - Complex(Rat(phi.dim())), phi.fourier(), true) / g;
    Complex rhs = pair_radial(-a, phi, true);
    return lhs - rhs;
}

}  // namespace pzeta
