#include <doctest.h>

#include "helpers.hpp"
#include "pzeta/delta.hpp"

using namespace pzeta;
using namespace pzeta::testing;

namespace {

// Direct character-sum oracle for the Fourier transform of a ball indicator:
//   (F W[l])(xi) = q^(-n l) * lim_D q^(-n D) sum_{z mod p^D} Psi(-[p^l xi, z]),
// exact once D reaches the local-constancy depth of the character.
Complex fourier_oracle(const Int& p, long n, long l, const std::vector<Rat>& xi) {
    PAdicVector scaled = PAdicVector::from_rationals(xi, p).scaled_by_p_power(l);
    long D = std::max<long>(scaled.character_depth(), 1) + 1;
    Complex sum;
    for_each_coset(n, D, p, [&](std::span<const long> rep) {
        Rat f = scaled.pairing_fraction(rep);
        sum += Complex::unit(-f);
    });
    Rat scale = rat_pow(Rat(p), -n * (l + D));
    return Complex(Rat(scale)) * sum;
}

// Convolution oracle: (W[a] * W[b])(x) by exact Riemann sum over the support
// ball of W[a].  The integrand z -> W[b](x - p^a z) is locally constant in z
// mod p^(b-a), so depth D = max(b-a, 1) makes the sum exact.
Rat convolve_oracle(const Int& p, long n, long a, long b, const std::vector<Rat>& x) {
    long D = std::max<long>(b - a, 1);
    Rat pa = rat_pow(Rat(p), a);
    Rat total(0);
    for_each_coset(n, D, p, [&](std::span<const long> rep) {
        bool inside = true;
        for (long i = 0; i < n; ++i) {
            Rat diff = x[static_cast<size_t>(i)] - Rat(rep[static_cast<size_t>(i)]) * pa;
            auto v = valuation(diff, p);
            if (v && *v < b) inside = false;
        }
        if (inside) total += 1;
    });
    // each z-coset carries volume q^(-n(a+D)) of y-space
    return total * rat_pow(Rat(p), -n * (a + D));
}

}  // namespace

TEST_CASE("integrate examples") {
    Int p(3);
    CHECK(DeltaFunction::indicator(p, 2, 0).integrate() == 1);
    CHECK(DeltaFunction::indicator(p, 2, 2).integrate() == Rat(1, 81));
    Int p5(5);
    auto f = DeltaFunction::indicator(p5, 1, -1, Rat(2)) - DeltaFunction::indicator(p5, 1, 0);
    CHECK(f.integrate() == Rat(9));
}

TEST_CASE("fourier rule against the character-sum oracle") {
    Int p(3);
    // F W[0] = W[0]: test at || xi || <= 1 and || xi || = 3
    CHECK(tiny(fourier_oracle(p, 1, 0, {Rat(2)}) - Complex(Rat(1)), "1e-60"));
    CHECK(tiny(fourier_oracle(p, 1, 0, {Rat(1, 3)}), "1e-60"));
    // F W[1] = 3^-1 W[-1] for p = 3, n = 1
    CHECK(tiny(fourier_oracle(p, 1, 1, {Rat(1, 3)}) - Complex(Rat(1, 3)), "1e-60"));
    CHECK(tiny(fourier_oracle(p, 1, 1, {Rat(1, 9)}), "1e-60"));
    auto f = DeltaFunction::indicator(p, 1, 1);
    auto ft = f.fourier();
    CHECK(ft.terms().size() == 1);
    CHECK(ft.terms()[0].level == -1);
    CHECK(ft.terms()[0].coeff == Rat(1, 3));
    // involution
    auto g = rand_delta(p, 2);
    CHECK(g.fourier().fourier() == g);
}

TEST_CASE("fourier oracle on a random element") {
    Int p(2);
    auto f = rand_delta(p, 1, -2, 2, 3);
    std::vector<std::vector<Rat>> points = {{Rat(1)}, {Rat(1, 2)}, {Rat(1, 4)}, {Rat(4)}, {Rat(0)}};
    for (const auto& xi : points) {
        Complex expect;
        for (const auto& t : f.terms())
            expect += Complex(t.coeff) * fourier_oracle(p, 1, t.level, xi);
        Rat got = f.fourier().eval(PAdicVector::from_rationals(xi, p));
        CHECK(tiny(expect - Complex(got), "1e-60"));
    }
}

TEST_CASE("convolution rule against the coset oracle") {
    Int p2(2);
    auto w0 = DeltaFunction::indicator(p2, 1, 0);
    CHECK(w0.convolve(w0) == w0);  // q^0 W[0]
    CHECK(convolve_oracle(p2, 1, 0, 0, {Rat(0)}) == Rat(1));
    Int p(3);
    // W[0] * W[1] = 3^-2 W[0] in dimension 2
    auto c = DeltaFunction::indicator(p, 2, 0).convolve(DeltaFunction::indicator(p, 2, 1));
    CHECK(c.terms().size() == 1);
    CHECK(c.terms()[0].level == 0);
    CHECK(c.terms()[0].coeff == Rat(1, 9));
    CHECK(c.terms()[0].coeff == convolve_oracle(p, 2, 0, 1, {Rat(0), Rat(0)}));
    // W[-1] * W[2] = 3^-2 W[-1] in dimension 1
    auto c2 = DeltaFunction::indicator(p, 1, -1).convolve(DeltaFunction::indicator(p, 1, 2));
    CHECK(c2.terms()[0].level == -1);
    CHECK(c2.terms()[0].coeff == Rat(1, 9));
    CHECK(convolve_oracle(p, 1, -1, 2, {Rat(1)}) == Rat(1, 9));
    CHECK(convolve_oracle(p, 1, -1, 2, {Rat(1, 3)}) == Rat(1, 9));  // ||x|| = 3, still inside
    CHECK(convolve_oracle(p, 1, -1, 2, {Rat(1, 9)}) == 0);          // outside supp W[-1]
}

TEST_CASE("plancherel and the convolution theorem") {
    Int p(3);
    for (int i = 0; i < 10; ++i) {
        auto f = rand_delta(p, 2);
        CHECK(f.pointwise_product(f).integrate() ==
              f.fourier().pointwise_product(f.fourier()).integrate());
        auto g = rand_delta(p, 2);
        auto lhs = f.convolve(g).fourier();
        auto rhs = f.fourier().pointwise_product(g.fourier());
        CHECK(lhs == rhs);
    }
}

TEST_CASE("pair_radial shells") {
    Int p(3);
    auto w0 = DeltaFunction::indicator(p, 2, 0);
    CHECK(pair_radial(Rat(0), w0) == QScalar(1));
    // pair_radial(0, .) = integrate
    for (int i = 0; i < 6; ++i) {
        auto f = rand_delta(p, 2);
        CHECK(pair_radial(Rat(0), f) == QScalar(f.integrate()));
    }
    // divergent without continuation; continued value (1-q^-2)/(1-q^2) at a=-4, n=2
    CHECK_THROWS_AS((void)pair_radial(Rat(-4), w0), PoleError);
    QScalar cont = pair_radial(Rat(-4), w0, true);
    CHECK(cont == (QScalar(1) - QScalar(Rat(1, 9))) / (QScalar(1) - QScalar(Rat(9))));
    // the pole at a = -n names its factor
    CHECK_THROWS_AS((void)pair_radial(Rat(-2), w0, true), PoleError);
}

TEST_CASE("pair_radial symbolic matches the scaled shell identity") {
    Int p(3);
    long n = 2, d = 3, l = 2;
    QMode mode{p};
    // <(1 - q^(-n-ds))/(1-q^-n) ||x||^(ds), q^(-nl) W[-l]> = q^(d l s)
    auto phi = DeltaFunction::indicator(p, n, -l, rat_pow(Rat(p), -n * l));
    SymFunc pairing = pair_radial_sym(Rat(d), Rat(0), phi);
    SymFunc pref = (SymFunc(mode, QScalar(1)) - SymFunc::exp_affine(mode, Rat(-d), Rat(-n))) /
                   SymFunc(mode, QScalar(1) - mode.q_pow(Rat(-n)));
    CHECK(pref * pairing == SymFunc::exp_affine(mode, Rat(d * l), Rat(0)));
}

TEST_CASE("pair_radial complex matches exact") {
    Int p(5);
    auto f = rand_delta(p, 2, -2, 2);
    Complex a(Real(Rat(3, 2)), Real(0L));
    Complex num = pair_radial(a, f, true);
    QScalar exact = pair_radial(Rat(3, 2), f, true);
    CHECK(tiny(num - Complex(exact.to_real()), "1e-60"));
}

TEST_CASE("parse/print round trip") {
    Int p(3);
    auto f = DeltaFunction::parse("1*W[0] + -2/3*W[1]", p, 1);
    CHECK(f.terms().size() == 2);
    CHECK(f.str() == "1*W[0] + -2/3*W[1]");
    for (int i = 0; i < 20; ++i) {
        auto g = rand_delta(p, 2);
        CHECK(DeltaFunction::parse(g.str(), p, 2) == g);
    }
    CHECK_THROWS_AS((void)DeltaFunction::parse("junk", p, 1), ArgumentError);
}

TEST_CASE("membership in the origin/infinity subspaces") {
    Int p(3);
    CHECK(DeltaFunction::indicator(p, 1, 2).in_delta0());
    CHECK(DeltaFunction::indicator(p, 1, -2).in_delta_inf());
    auto mixed = DeltaFunction::indicator(p, 1, -1) + DeltaFunction::indicator(p, 1, 1);
    CHECK(!mixed.in_delta0());
    CHECK(!mixed.in_delta_inf());
}
