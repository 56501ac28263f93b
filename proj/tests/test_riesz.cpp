#include <doctest.h>

#include "helpers.hpp"
#include "pzeta/riesz.hpp"

using namespace pzeta;
using namespace pzeta::testing;

TEST_CASE("gamma factor values") {
    QMode sym{};
    CHECK(gamma_n(Rat(1), 2, sym).value == QScalar(1));  // (1-q^-1)/(1-q^-1)
    CHECK(gamma_n(Rat(1), 2, QMode{Int(3)}).value == QScalar(1));
    auto at_n = gamma_n(Rat(3), 3, sym);
    CHECK(at_n.value.is_zero());
    CHECK(at_n.on_zero_locus);
    CHECK_THROWS_AS((void)gamma_n(Rat(0), 2, sym), PoleError);
}

TEST_CASE("gamma reflection identity at random rational arguments") {
    QMode sym{};
    for (int i = 0; i < 20; ++i) {
        long n = rand_int(1, 4);
        Rat a = rand_nonzero_rat(12, 5);
        if (a == Rat(n)) continue;
        CHECK(gamma_n(a, n, sym).value * gamma_n(Rat(n) - a, n, sym).value == QScalar(1));
    }
}

TEST_CASE("gamma symbolic function agrees with pointwise values") {
    QMode q3{Int(3)};
    SymFunc g = gamma_n_sym(2, q3);
    CHECK(g.at(Rat(1)) == QScalar(1));
    CHECK(g.at(Rat(3, 2)) == gamma_n(Rat(3, 2), 2, q3).value);
}

TEST_CASE("riesz pairing values") {
    Int p(3);
    long n = 2;
    auto w0 = DeltaFunction::indicator(p, n, 0);
    QMode mode{p};
    // <R_a, W[0]> = (1-q^-n)/(1-q^(a-n))
    for (Rat a : {Rat(1), Rat(1, 2), Rat(-3), Rat(5, 3)}) {
        QScalar expect = (QScalar(1) - mode.q_pow(Rat(-n))) / (QScalar(1) - mode.q_pow(a - n));
        CHECK(riesz_pair(a, w0) == expect);
    }
    // Dirac at a = 0
    CHECK(riesz_pair(Rat(0), w0) == QScalar(1));
    auto vanishing = DeltaFunction::indicator(p, n, -1) - DeltaFunction::indicator(p, n, 1);
    CHECK(riesz_pair(Rat(0), vanishing) == QScalar(0));
    CHECK_THROWS_AS((void)riesz_pair(Rat(n), w0), PoleError);
}

TEST_CASE("riesz pairing is rational in q^-a with the single pole factor") {
    Int p(3);
    auto phi = rand_delta(p, 2, -3, 3);
    SymFunc symbolic = riesz_pair_sym(phi);
    // closed form (1-q^-n) sum_i c_i q^(-l_i a) / (1 - q^(a-n))
    QMode mode{p};
    SymFunc num(mode, QScalar(0));
    for (const auto& t : phi.terms())
        num = num + SymFunc(mode, QScalar(t.coeff)) * SymFunc::exp_affine(mode, Rat(-t.level), Rat(0));
    SymFunc expect = SymFunc(mode, QScalar(1) - mode.q_pow(Rat(-2))) * num /
                     (SymFunc(mode, QScalar(1)) - SymFunc::exp_affine(mode, Rat(1), Rat(-2)));
    CHECK(symbolic == expect);
    // spot agreement with the pointwise evaluator
    CHECK(symbolic.at(Rat(3, 2)) == riesz_pair(Rat(3, 2), phi));
}

TEST_CASE("fourier identity of the normalized kernel, symbolically") {
    Int p(3);
    long n = 2;
    QMode mode{p};
    auto w0 = DeltaFunction::indicator(p, n, 0);
    // both sides of the identity against W[0] equal (1-q^-n)/(1-q^(a-n))
    SymFunc lhs = pair_radial_sym(Rat(1), Rat(-n), w0.fourier()) / gamma_n_sym(n, mode);
    SymFunc rhs = pair_radial_sym(Rat(-1), Rat(0), w0);
    CHECK(lhs == rhs);
}

TEST_CASE("kernel Fourier residual vanishes exactly at rational arguments") {
    Int p(3);
    auto w1 = DeltaFunction::indicator(p, 2, 1);
    CHECK(riesz_fourier_residual(Rat(1), w1).is_zero());
    for (int i = 0; i < 20; ++i) {
        long n = rand_int(1, 3);
        Rat a = rand_nonzero_rat(8, 4);
        if (a == Rat(n)) continue;
        auto phi = rand_delta(p, n, -4, 4);
        CHECK(riesz_fourier_residual(a, phi).is_zero());
    }
    CHECK_THROWS_AS((void)riesz_fourier_residual(Rat(2), DeltaFunction::indicator(p, 2, 0)), PoleError);
}

TEST_CASE("kernel Fourier residual at complex arguments") {
    Int p(5);
    for (int i = 0; i < 20; ++i) {
        long n = rand_int(1, 3);
        auto phi = rand_delta(p, n, -4, 4);
        Complex a(Real(rand_nonzero_rat(5, 3)), Real(rand_rat(5, 3)));
        Complex residual = riesz_fourier_residual(a, phi);
        CHECK(tiny(residual, "1e-30"));
    }
}
