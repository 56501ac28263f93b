#pragma once

#include "pzeta/delta.hpp"

namespace pzeta {

// (1 - q^(a-n)) / (1 - q^(-a)): the normalizing factor of the radial kernel
// ||x||^(a-n) / Gamma_n(a).  Meromorphic, unique simple pole at a = 0, simple
// zeros where q^(a-n) = 1.
struct GammaValue {
    QScalar value;
    bool on_zero_locus;  // a = n (mod 2*pi*i/log q, trivially for rational a)
};

GammaValue gamma_n(const Rat& a, long n, QMode mode);
Complex gamma_n(const Complex& a, long n, const Rat& q);

// Gamma_n as a symbolic function of its argument.
SymFunc gamma_n_sym(long n, QMode mode);

// <R_a, Phi>: the meromorphically continued radial-kernel pairing, evaluated
// exactly by shell decomposition (delta term + interior term against
// Phi - Phi(0) + exterior term).  At a = 0 the kernel is the Dirac delta.
QScalar riesz_pair(const Rat& a, const DeltaFunction& phi);
Complex riesz_pair(const Complex& a, const DeltaFunction& phi);

// Same pairing as a symbolic function of the exponent.
SymFunc riesz_pair_sym(const DeltaFunction& phi);

// Residual of the Fourier identity  F(||x||^(a-n)/Gamma_n(a)) = ||x||^(-a)
// tested against Phi: pairs the left side with fourier(Phi) and the right
// side with Phi; zero when the identity holds.
QScalar riesz_fourier_residual(const Rat& a, const DeltaFunction& phi);
Complex riesz_fourier_residual(const Complex& a, const DeltaFunction& phi);

}  // namespace pzeta
