// Acceptance suite: one numbered criterion per function, one summary line per
// criterion, nonzero exit iff any checked criterion fails.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <vector>

#include "pzeta/green.hpp"

using namespace pzeta;

namespace {

int failures = 0;
int checks = 0;

void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
        ++failures;
        std::printf("    FAIL  %s\n", what.c_str());
    }
}

std::mt19937_64 acc_rng(987654321);

long rnd(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(acc_rng); }

Rat rnd_rat(long num_max, long den_max) {
    long num = rnd(-num_max, num_max);
    long den = rnd(1, den_max);
    return make_rat(num, den);
}

std::vector<Rat> counted_masses(const Form& f, long M, bool brute) {
    std::vector<Int> N;
    for (long m = 0; m <= M + 1; ++m)
        N.push_back(brute && m <= 4 ? count_zeros(f, m) : count_zeros_fast(f, m));
    std::vector<Rat> out;
    Rat qn = rat_pow(Rat(f.prime()), -f.dim());
    for (long m = 0; m <= M; ++m)
        out.push_back(Rat(N[static_cast<size_t>(m)]) * rat_pow(qn, m) -
                      Rat(N[static_cast<size_t>(m + 1)]) * rat_pow(qn, m + 1));
    return out;
}

// --- criterion 1: catalog forms reduce to the classified closed form --------

bool criterion1() {
    std::printf("criterion 1: closed form of the anisotropic catalog vs exact counting\n");
    for (long pval : {3L, 5L, 7L}) {
        Int p(pval);
        for (long n : {2L, 3L, 4L}) {
            auto expected = zeta_elliptic(n, QMode{p});
            for (const auto& h : catalog_anisotropic(n, p)) {
                std::string tag = "p=" + std::to_string(pval) + " " + h.str();
                auto masses = counted_masses(h, 6, false);
                bool spf_ok = false, reduces = false, series_ok = false;
                try {
                    auto z = zeta_spf(h);
                    spf_ok = true;
                    reduces = z.num_poly() == expected.num_poly() &&
                              z.den_factors().size() == expected.den_factors().size();
                    if (reduces)
                        for (size_t i = 0; i < z.den_factors().size(); ++i) {
                            const auto &a = z.den_factors()[i], &b = expected.den_factors()[i];
                            reduces = reduces && a.sigma == b.sigma && a.a == b.a &&
                                      a.b == b.b && a.mult == b.mult;
                        }
                    series_ok = z.series_rat(6) == masses;
                } catch (const DomainError& e) {
                    std::printf("    note  %s: stationary phase rejected (%s)\n", tag.c_str(),
                                e.what());
                }
                // diagnostic: does the closed form match the counted masses at all?
                bool table_matches_counts = expected.series_rat(6) == masses;
                if (!table_matches_counts)
                    std::printf("    note  %s: closed-form a0 = %s, counted a0 = %s\n", tag.c_str(),
                                rat_str(expected.series_rat(0)[0]).c_str(),
                                rat_str(masses[0]).c_str());
                expect(spf_ok && reduces, tag + ": stationary phase reduces to the closed form");
                expect(series_ok, tag + ": series equals counted masses to depth 6");
            }
        }
    }
    return failures == 0;
}

// --- criterion 2: stationary phase vs brute-force counting ------------------

bool criterion2() {
    std::printf("criterion 2: stationary-phase series vs brute-force masses (depth 4)\n");
    struct Case {
        const char* text;
        long n;
        long p;
    } cases[] = {{"x1*x2", 2, 3}, {"x1^2 + x2^2", 2, 3}, {"x1^3 + x2^3", 2, 7}};
    for (const auto& c : cases) {
        Form f = Form::parse(c.text, c.n, Int(c.p));
        auto z = zeta_spf(f);
        auto brute = counted_masses(f, 4, true);  // largest enumeration 7^8
        expect(z.series_rat(4) == brute,
               std::string(c.text) + " @ p=" + std::to_string(c.p) +
                   ": closed-form Taylor coefficients equal brute-force masses");
    }
    return failures == 0;
}

// --- criterion 3: normalization and pole signs -------------------------------

bool criterion3() {
    std::printf("criterion 3: Z(0) = 1 and negative pole real parts\n");
    std::vector<RationalZeta> zoo;
    zoo.push_back(zeta_spf(Form::parse("x1*x2", 2, Int(3))));
    zoo.push_back(zeta_spf(Form::parse("x1^2 + x2^2", 2, Int(3))));
    zoo.push_back(zeta_spf(Form::parse("x1^3 + x2^3", 2, Int(7))));
    zoo.push_back(zeta_spf(Form::parse("x1", 1, Int(5))));
    for (long pv : {3L, 5L, 7L})
        for (long n : {2L, 3L, 4L}) zoo.push_back(zeta_elliptic(n, QMode{Int(pv)}));
    zoo.push_back(zeta_elliptic(2, QMode{}));
    for (const auto& z : zoo) {
        expect(z.eval(Rat(0)) == QScalar(1), "Z(0) = 1 for " + z.str());
        for (const auto& pole : z.poles())
            expect(pole.real_part < 0, "pole " + pole.factor + " of " + z.str());
    }
    return failures == 0;
}

// --- criterion 4: the Fourier identity of the normalized radial kernel ------

bool criterion4() {
    std::printf("criterion 4: kernel Fourier identity on balls, rational and complex\n");
    Int p(3);
    for (long count = 0; count < 20; ++count) {
        long n = 1 + count % 3;
        Rat a = rnd_rat(9, 5);
        if (a == 0 || a == Rat(n)) a += Rat(1, 11);
        for (long l = -3; l <= 3; ++l) {
            auto phi = DeltaFunction::indicator(p, n, l);
            expect(riesz_fourier_residual(a, phi).is_zero(),
                   "exact residual at a = " + rat_str(a) + ", l = " + std::to_string(l));
        }
    }
    Real tol("1e-25");
    for (long count = 0; count < 20; ++count) {
        long n = 1 + count % 3;
        Complex a(Real(rnd_rat(6, 4)), Real(rnd_rat(6, 4)));
        for (long l : {-3L, 0L, 3L}) {
            auto phi = DeltaFunction::indicator(p, n, l);
            try {
                expect(abs(riesz_fourier_residual(a, phi)) < tol, "complex residual, l = " + std::to_string(l));
            } catch (const PoleError&) {
                // sample fell on a lattice; acceptable to skip
            }
        }
    }
    return failures == 0;
}

// --- criterion 5: radial factorization and functional equation ---------------

bool criterion5() {
    std::printf("criterion 5: radial factorization and functional equation\n");
    struct Case {
        Form f;
        RationalZeta z;
    };
    std::vector<Case> cases;
    {
        Form e = Form::parse("x1^2 + x2^2", 2, Int(3));
        cases.push_back({e, zeta_elliptic(2, QMode{Int(3)})});
        Form h = Form::parse("x1*x2", 2, Int(3));
        cases.push_back({h, zeta_spf(h)});
        Form c = Form::parse("x1^3 + x2^3", 2, Int(7));
        cases.push_back({c, zeta_spf(c)});
    }
    std::vector<Rat> rational_s{Rat(1), Rat(2), Rat(3), Rat(-1, 3), Rat(5, 2)};
    Real tol("1e-25");
    for (auto& c : cases) {
        auto spec = OperatorSpec::make(c.f, Rat(1, 2), c.z, 3);
        for (long l : {-2L, 0L, 1L}) {
            auto phi = DeltaFunction::indicator(c.f.prime(), c.f.dim(), l);
            expect(radial_factorization_residual_sym(spec, phi).is_zero(),
                   "symbolic radial factorization, " + c.f.str() + ", l=" + std::to_string(l));
            for (const auto& r : radial_factorization_check(spec, phi, rational_s))
                expect(r.skipped || r.residual.is_zero(),
                       "exact radial factorization at s = " + rat_str(r.s));
        }
        expect(functional_equation_residual_sym(c.z, 1).is_zero(),
               "symbolic functional equation, " + c.f.str());
        for (const auto& r : functional_equation_check(spec, 1, rational_s))
            expect(r.skipped || r.residual.is_zero(),
                   "exact functional equation at s = " + rat_str(r.s));
        std::vector<Complex> cs;
        for (int i = 0; i < 10; ++i) cs.emplace_back(Real(rnd_rat(4, 5)), Real(rnd_rat(4, 5)));
        auto phi0 = DeltaFunction::indicator(c.f.prime(), c.f.dim(), 0);
        for (const auto& r : radial_factorization_check(spec, phi0, cs))
            expect(r.skipped || abs(r.residual) < tol, "complex radial factorization sample");
        for (const auto& r : functional_equation_check(spec, 1, cs))
            expect(r.skipped || abs(r.residual) < tol, "complex functional equation sample");
    }
    return failures == 0;
}

// --- criterion 6: fundamental solutions, both routes --------------------------

bool criterion6() {
    std::printf("criterion 6: fundamental solutions agree across routes\n");
    for (long pv : {3L, 5L, 7L}) {
        Int p(pv);
        for (long n : {2L, 3L, 4L}) {
            for (long b = 1; b <= 3; ++b) {
                if (Rat(b) == make_rat(n, 2)) continue;
                for (const auto& h : catalog_anisotropic(n, p)) {
                    auto spec = OperatorSpec::make(h, Rat(b), zeta_elliptic(n, QMode{p}));
                    auto fs = fundamental_solution(spec);
                    auto efs = elliptic_fundamental_solution(n, Rat(b), QMode{p});
                    expect(fs.radial.coeff == efs.radial.coeff &&
                               fs.radial.exponent == efs.radial.exponent && fs.checks.all(),
                           "routes agree for " + h.str() + ", p=" + std::to_string(pv) +
                               ", beta=" + std::to_string(b));
                    for (long l : {0L, 1L, 2L})
                        expect(holomorphy_shift_check(spec, l).is_zero(),
                               "holomorphy shift residual, l=" + std::to_string(l));
                }
            }
        }
    }
    // spot value: n = 3, beta = 1 coefficient is 1 + 1/p
    auto e3 = elliptic_fundamental_solution(3, Rat(1), QMode{Int(7)});
    expect(e3.radial.coeff == QScalar(Rat(8, 7)), "n=3, beta=1 coefficient 1 + p^-1");
    // inadmissible cases carry the right reason
    Form xy = Form::parse("x1*x2", 2, Int(3));
    try {
        (void)fundamental_solution(OperatorSpec::make(xy, Rat(1), zeta_spf(xy)));
        expect(false, "pole of Z at s=-1 must be rejected");
    } catch (const AdmissibilityError& e) {
        expect(e.has(AdmissibilityError::Reason::zeta_pole_at_minus_beta),
               "rejection reason is the zeta pole");
    }
    try {
        (void)elliptic_fundamental_solution(2, Rat(1), QMode{Int(3)});
        expect(false, "beta = n/d must be rejected");
    } catch (const AdmissibilityError& e) {
        expect(e.has(AdmissibilityError::Reason::beta_equals_n_over_d),
               "rejection reason is beta = n/d");
    }
    return failures == 0;
}

// --- criterion 7: operator values with certified bounds ----------------------

bool criterion7() {
    std::printf("criterion 7: operator values with certified bounds\n");
    Form h = Form::parse("x1^2 + x2^2", 2, Int(3));
    auto spec = OperatorSpec::make(h, Rat(1), zeta_elliptic(2, QMode{Int(3)}), 4);
    auto w0 = DeltaFunction::indicator(Int(3), 2, 0);
    auto inside = PAdicVector::from_rationals({Rat(2), Rat(0)}, Int(3));
    auto v1 = apply_operator(spec, w0, inside, 6);
    expect(v1.bound < Real(Rat(1, 1000)), "certified bound below 1e-3 at depth 6");
    expect(abs(v1.value - Complex(Rat(9, 10))) <= v1.bound, "value 9/10 on Z_p^2");
    auto outside = PAdicVector::from_rationals({Rat(1, 3), Rat(2)}, Int(3));
    auto v2 = apply_operator(spec, w0, outside, 6);
    expect(abs(v2.value - Complex(Rat(-1, 10))) <= v2.bound, "value -1/10 at ||x|| = 3");
    Real prev(1L);
    for (long M = 1; M <= 6; ++M) {
        auto r = apply_operator(spec, w0, outside, M);
        if (M > 1)
            expect(r.bound <= prev * Real(Rat(1, 3)) + Real("1e-60"),
                   "bound shrinks by q^-beta at M=" + std::to_string(M));
        prev = r.bound;
    }
    return failures == 0;
}

// --- criterion 8: resolvent pairings and their expansion ----------------------

bool criterion8() {
    std::printf("criterion 8: resolvent pairings, expansion, remainder decay\n");
    Form h = Form::parse("x1^2 + x2^2", 2, Int(3));
    auto spec = OperatorSpec::make(h, Rat(1), zeta_elliptic(2, QMode{Int(3)}), 4);
    auto g = GreenSpec::make(spec, Rat(1));
    auto v = green_pair_exact(g, 1, Rat(1, 100000000));
    expect(abs(v.value - Real("0.9098914")) < Real("1e-6"), "pairing at l=1 equals 0.9098914(1e-6)");
    auto diag = remainder_diagnostic(g, 1, 5, 1, 4);
    for (const auto& row : diag.rows)
        expect(row.within_bound, "remainder bound at l=" + std::to_string(row.l) +
                                     ", M=" + std::to_string(row.M));
    for (auto [M, exponent] : diag.decay_exponents)
        expect(std::abs(exponent - 2.0 * static_cast<double>(M + 1)) <= 0.1,
               "decay exponent matches d*beta*(M+1) at M=" + std::to_string(M));
    return failures == 0;
}

// --- criterion 9: property suites ---------------------------------------------

bool criterion9() {
    std::printf("criterion 9: counting, Fourier and parser properties\n");
    // ten random homogeneous forms
    long produced = 0;
    while (produced < 10) {
        long n = rnd(1, 3), d = rnd(1, 3);
        Int p(rnd(0, 1) ? 3 : 5);
        std::vector<Form::Monomial> monos;
        for (long t = 0, terms = rnd(1, 3); t < terms; ++t) {
            std::vector<unsigned> e(static_cast<size_t>(n), 0);
            long left = d;
            for (long i = 0; i < n; ++i) {
                long take = (i == n - 1) ? left : rnd(0, left);
                e[static_cast<size_t>(i)] = static_cast<unsigned>(take);
                left -= take;
            }
            monos.push_back(Form::Monomial{e, Int(rnd(-4, 4))});
        }
        try {
            Form f = Form::from_monomials(std::move(monos), n, p);
            if (!f.primitive()) continue;
            ++produced;
            for (long m = 1; m <= 3; ++m)
                expect(count_zeros_fast(f, m) == count_zeros(f, m),
                       "fast count equals brute force for " + f.str() + " at depth " +
                           std::to_string(m));
            expect(Form::parse(f.str(), n, p).str() == f.str(), "form parser round trip");
        } catch (const ArgumentError&) {
            continue;  // cancelled to zero
        }
    }
    // Fourier involution and the convolution theorem on random Delta elements
    Int p(3);
    std::uniform_int_distribution<long> level(-3, 3);
    for (int i = 0; i < 12; ++i) {
        DeltaFunction f(p, 2), gdel(p, 2);
        for (int t = 0; t < 3; ++t) {
            f = f + DeltaFunction::indicator(p, 2, level(acc_rng), rnd_rat(6, 6));
            gdel = gdel + DeltaFunction::indicator(p, 2, level(acc_rng), rnd_rat(6, 6));
        }
        expect(f.fourier().fourier() == f, "Fourier involution");
        expect(f.convolve(gdel).fourier() == f.fourier().pointwise_product(gdel.fourier()),
               "convolution theorem");
        expect(DeltaFunction::parse(f.str(), p, 2) == f, "Delta parser round trip");
    }
    return failures == 0;
}

}  // namespace

int main(int argc, char** argv) {
    using clock = std::chrono::steady_clock;
    std::vector<std::function<bool()>> criteria{criterion1, criterion2, criterion3,
                                                criterion4, criterion5, criterion6,
                                                criterion7, criterion8, criterion9};
    int lo = 1, hi = static_cast<int>(criteria.size());
    if (argc > 1 && std::strcmp(argv[1], "all") != 0) {
        lo = hi = std::atoi(argv[1]);
        if (lo < 1 || lo > static_cast<int>(criteria.size())) {
            std::fprintf(stderr, "usage: %s [1-%zu|all]\n", argv[0], criteria.size());
            return 2;
        }
    }
    int failed_criteria = 0;
    for (int i = lo; i <= hi; ++i) {
        failures = 0;
        checks = 0;
        auto t0 = clock::now();
        criteria[static_cast<size_t>(i - 1)]();
        double secs = std::chrono::duration<double>(clock::now() - t0).count();
        bool ok = failures == 0;
        failed_criteria += ok ? 0 : 1;
        std::printf("criterion %d [%s]  (%d checks, %.1fs)\n", i, ok ? "PASS" : "FAIL", checks,
                    secs);
    }
    return failed_criteria == 0 ? 0 : 1;
}
