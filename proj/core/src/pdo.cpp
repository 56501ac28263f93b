#include "pzeta/pdo.hpp"

namespace pzeta {

OperatorSpec OperatorSpec::make(Form f, Rat beta, RationalZeta Z, long validate_depth) {
    if (!(beta > 0)) throw ArgumentError("beta must be positive");
    if (Z.dim() != f.dim() || Z.degree() != f.degree())
        throw ArgumentError("zeta metadata does not match the form");
    if (!Z.mode().symbolic() && Z.mode().p != f.prime())
        throw ArgumentError("zeta and form live over different primes");
    if (validate_depth > 0) level_masses(f, validate_depth, Z);  // throws on mismatch
    return OperatorSpec(std::move(f), std::move(beta), std::move(Z));
}

namespace {

// Integer-exact accumulation of character sums: for each level m <= M and
// each p^k-th root of unity, how much volume pairs with it.
struct LevelCharacterSums {
    long k = 0;                                  // character denominator exponent
    std::vector<std::vector<Int>> counts;        // [m][root index]
    long depth = 1;                              // enumeration depth D
};

// Character sums of Psi([x, .]) over the level sets of f inside Z_p^n,
// resolved mod p^D with D = max(M+1, character depth of x).  The inner loop
// runs in plain int64: coefficients reduced once, and the character reduced
// to an index via {[x, y]}_p = (sum_i u_i p^(k - k_i) y_i mod p^k) / p^k.
LevelCharacterSums level_sums(const Form& f, const PAdicVector& x, long M) {
    long p = f.prime().get_si();
    long n = f.dim();
    long kx = x.character_depth();
    long D = std::max(M + 1, std::max<long>(kx, 1));
    coset_count(n, D, f.prime());  // budget gate
    long pD = 1;
    for (long i = 0; i < D; ++i) pD *= p;
    long pk = 1;
    for (long i = 0; i < kx; ++i) pk *= p;

    // per-component character multipliers (0 for integral components)
    std::vector<long> char_mult(static_cast<size_t>(n), 0);
    for (long i = 0; i < n; ++i) {
        auto v = x[i].val();
        if (!v || *v >= 0) continue;
        long ki = -*v;
        long u = x[i].angular(ki).get_si();  // checks trusted digits
        long lift = 1;
        for (long j = 0; j < kx - ki; ++j) lift *= p;
        char_mult[static_cast<size_t>(i)] = (u % pk) * lift % pk;
    }
    // monomials with pre-reduced coefficients
    struct Mono {
        long coeff;
        std::vector<unsigned> exps;
    };
    std::vector<Mono> monos;
    for (const auto& m : f.monomials()) {
        long c = static_cast<long>(mpz_fdiv_ui(m.coeff.get_mpz_t(), static_cast<unsigned long>(pD)));
        monos.push_back(Mono{c, m.exps});
    }

    LevelCharacterSums out;
    out.k = kx;
    out.depth = D;
    out.counts.assign(static_cast<size_t>(M) + 1,
                      std::vector<Int>(static_cast<size_t>(pk), Int(0)));
    std::vector<std::vector<long>> raw(static_cast<size_t>(M) + 1,
                                       std::vector<long>(static_cast<size_t>(pk), 0));
    for_each_coset(n, D, f.prime(), [&](std::span<const long> y) {
        long v_raw = 0;
        for (const auto& mono : monos) {
            long term = mono.coeff;
            for (size_t i = 0; i < mono.exps.size(); ++i)
                for (unsigned e = 0; e < mono.exps[i]; ++e) term = term * (y[i] % pD) % pD;
            v_raw = (v_raw + term) % pD;
        }
        if (v_raw == 0) return;  // v(f) >= D > M: certified tail
        long m = 0;
        while (v_raw % p == 0) {
            v_raw /= p;
            ++m;
        }
        if (m > M) return;
        long idx = 0;
        if (pk > 1) {
            for (long i = 0; i < n; ++i)
                idx = (idx + char_mult[static_cast<size_t>(i)] * (y[static_cast<size_t>(i)] % pk)) % pk;
        }
        ++raw[static_cast<size_t>(m)][static_cast<size_t>(idx)];
    });
    for (long m = 0; m <= M; ++m)
        for (long j = 0; j < pk; ++j)
            out.counts[static_cast<size_t>(m)][static_cast<size_t>(j)] =
                raw[static_cast<size_t>(m)][static_cast<size_t>(j)];
    return out;
}

}  // namespace

OperatorValue apply_operator(const OperatorSpec& spec, const DeltaFunction& phi,
                             const PAdicVector& x, long M) {
    if (M < 1) throw ArgumentError("truncation depth must be >= 1");
    if (phi.prime() != spec.form().prime() || phi.dim() != spec.dim())
        throw ArgumentError("test function does not match the operator");
    if (x.prime() != spec.form().prime() || x.dim() != spec.dim())
        throw ArgumentError("evaluation point does not match the operator");

    const Rat beta = spec.beta();
    const long d = spec.degree();
    Rat q(spec.form().prime());
    Real qr(q);

    // |vol{v(f) > M}| taken exactly from the counted masses.
    Rat tail_vol = Rat(count_zeros_fast(spec.form(), M + 1)) *
                   rat_pow(q, -(M + 1) * spec.dim());

    Complex value;
    Real bound(0L);
    long depth_used = 0;
    for (const auto& term : phi.terms()) {
        // F W[l] = q^(-n l) W[-l]; integrating |f|^beta Psi([x, .]) over the
        // ball of radius q^l rescales to the unit ball with x -> p^(-l) x and
        // a factor q^(l d beta).
        PAdicVector xs = x.scaled_by_p_power(-term.level);
        auto sums = level_sums(spec.form(), xs, M);
        depth_used = std::max(depth_used, sums.depth);
        long pk = 1;
        for (long i = 0; i < sums.k; ++i) pk *= spec.form().prime().get_si();
        std::vector<Complex> roots;
        roots.reserve(static_cast<size_t>(pk));
        for (long j = 0; j < pk; ++j) roots.push_back(Complex::unit(make_rat(j, pk)));

        Real scale = pow(qr, Real(Rat(term.level) * d * beta));
        Real coset_vol = pow(qr, Real(Rat(-sums.depth * spec.dim())));
        Complex ball_value;
        for (long m = 0; m <= M; ++m) {
            Complex sm;
            for (long j = 0; j < pk; ++j) {
                const Int& c = sums.counts[static_cast<size_t>(m)][static_cast<size_t>(j)];
                if (c == 0) continue;
                sm += Complex(Real(c), Real(0L)) * roots[static_cast<size_t>(j)];
            }
            ball_value += Complex(pow(qr, Real(Rat(-m) * beta)), Real(0L)) * sm;
        }
        ball_value = Complex(coset_vol, Real(0L)) * ball_value;
        Real weight = Real(term.coeff) * scale;
        value += Complex(weight, Real(0L)) * ball_value;
        bound += abs(weight) * pow(qr, Real(-beta * (M + 1))) * Real(tail_vol);
    }
    return OperatorValue{value, bound, depth_used};
}

QScalar holomorphy_shift_check(const OperatorSpec& spec, long l) {
    const RationalZeta& Z = spec.zeta();
    const Rat& beta = spec.beta();
    if (auto factor = Z.vanishing_factor(-beta))
        throw AdmissibilityError(
            "beta = " + rat_str(beta) + " is inadmissible: Z has a pole at s = -beta, factor " +
                *factor,
            AdmissibilityError::Reason::zeta_pole_at_minus_beta);
    long n = spec.dim(), d = spec.degree();
    // <|f|^(s+beta), W[l]> as a symbolic function of s
    SymFunc pairing = SymFunc::exp_affine(Z.mode(), Rat(-d * l), Rat(-n * l) - Rat(d * l) * beta) *
                      Z.to_symfunc_shifted(Rat(1), beta);
    if (pairing.has_pole_at(-beta))
        throw AdmissibilityError("shifted pairing has a pole at s = -beta",
                                 AdmissibilityError::Reason::zeta_pole_at_minus_beta);
    return pairing.at(-beta) - Z.mode().q_pow(Rat(-n * l));
}

FundamentalSolution fundamental_solution(const OperatorSpec& spec,
                                         const std::optional<ResolutionData>& res) {
    const RationalZeta& Z = spec.zeta();
    const Rat& beta = spec.beta();
    long n = spec.dim(), d = spec.degree();
    AdmissibilityRecord rec;
    std::vector<AdmissibilityError::Reason> violated;
    std::string detail;
    using Reason = AdmissibilityError::Reason;

    rec.beta_not_n_over_d = beta != make_rat(n, d);
    if (!rec.beta_not_n_over_d) {
        violated.push_back(Reason::beta_equals_n_over_d);
        detail += "beta = n/d = " + rat_str(beta) + " is excluded; ";
    }

    auto factor = Z.vanishing_factor(-beta);
    rec.no_zeta_pole = !factor.has_value();
    if (factor) {
        violated.push_back(Reason::zeta_pole_at_minus_beta);
        detail += "Z has a pole at s = -beta, factor " + *factor + "; ";
    }

    QScalar z_at(0);
    if (rec.no_zeta_pole) {
        z_at = Z.eval(-beta);
        rec.zeta_nonzero = !z_at.is_zero();
        if (!rec.zeta_nonzero) {
            violated.push_back(Reason::zeta_zero_at_minus_beta);
            detail += "Z(-beta, f) = 0; ";
        }
    }

    if (res) {
        rec.resolution_ok = true;
        for (auto [NE, nE] : res->pairs) {
            if (NE <= 0 || nE <= 0) throw ArgumentError("resolution data must be positive");
            if (beta == make_rat(nE, NE)) {
                rec.resolution_ok = false;
                violated.push_back(Reason::resolution_pole);
                detail += "beta coincides with the candidate pole n_E/N_E = " +
                          rat_str(make_rat(nE, NE)) + "; ";
            }
        }
    }

    if (!violated.empty()) throw AdmissibilityError(detail, std::move(violated));

    QScalar coeff = (QScalar(1) - Z.mode().q_pow(-Rat(d) * beta)) /
                    (QScalar(1) - Z.mode().q_pow(Rat(-n))) * z_at;
    RadialPower radial{coeff, Rat(d) * beta - n, n, Z.mode().p};
    return FundamentalSolution{std::move(radial), rec, beta, n, d};
}

FundamentalSolution elliptic_fundamental_solution(long n, const Rat& beta, QMode mode) {
    if (n < 2 || n > 4) throw ArgumentError("elliptic closed form covers 2 <= n <= 4");
    if (!mode.symbolic() && mode.p == 2) throw ArgumentError("requires p odd");
    if (!(beta > 0)) throw ArgumentError("beta must be positive");
    if (beta == make_rat(n, 2))
        throw AdmissibilityError("beta = n/2 is excluded",
                                 AdmissibilityError::Reason::beta_equals_n_over_d);
    QScalar coeff = (QScalar(1) - mode.q_pow(Rat(-2) * beta)) /
                    (QScalar(1) - mode.q_pow(Rat(-n) + 2 * beta));
    AdmissibilityRecord rec;
    rec.beta_not_n_over_d = true;
    rec.no_zeta_pole = true;
    rec.zeta_nonzero = true;
    return FundamentalSolution{RadialPower{coeff, 2 * beta - n, n, mode.p}, rec, beta, n, 2};
}

AsymptoticsReport asymptotics_report(const FundamentalSolution& E) {
    return AsymptoticsReport{Rat(E.d) * E.beta - E.n, -Rat(E.d) * E.beta,
                             E.beta > make_rat(E.n, E.d)};
}

std::vector<IdentitySample> functional_equation_check(const OperatorSpec& spec, long l,
                                                      const std::vector<Rat>& samples) {
    const RationalZeta& Z = spec.zeta();
    long n = spec.dim(), d = spec.degree();
    std::vector<IdentitySample> out;
    for (const Rat& s : samples) {
        IdentitySample r;
        r.s = s;
        Rat s2 = -s - make_rat(n, d);
        if (s == 0) {
            r.skipped = true;
            r.reason = "s = 0 excluded";
        } else if (Z.has_pole_at(s) || Z.has_pole_at(s2)) {
            r.skipped = true;
            r.reason = "pole of Z at a sample";
        } else if (Z.eval(s2).is_zero()) {
            r.skipped = true;
            r.reason = "Z(-s-n/d) = 0 at a sample";
        } else {
            QScalar lhs = scaled_pairing(Z, l, s);
            QScalar rhs = Z.eval(s) / Z.eval(s2) * Z.mode().q_pow(Rat(-n * l)) *
                          scaled_pairing(Z, -l, s2);
            r.residual = lhs - rhs;
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<IdentitySampleC> functional_equation_check(const OperatorSpec& spec, long l,
                                                       const std::vector<Complex>& samples) {
    const RationalZeta& Z = spec.zeta();
    long n = spec.dim(), d = spec.degree();
    Rat q(spec.form().prime());
    std::vector<IdentitySampleC> out;
    for (const Complex& s : samples) {
        IdentitySampleC r;
        r.s = s;
        Complex s2 = -s - Complex(make_rat(n, d));
        try {
            Complex lhs = scaled_pairing(Z, l, s);
            Complex z2 = Z.eval(s2);
            Complex rhs = Z.eval(s) / z2 * Complex(rat_pow(q, -n * l)) * scaled_pairing(Z, -l, s2);
            r.residual = lhs - rhs;
        } catch (const PoleError& e) {
            r.skipped = true;
            r.reason = e.what();
        }
        out.push_back(std::move(r));
    }
    return out;
}

SymFunc functional_equation_residual_sym(const RationalZeta& Z, long l) {
    long n = Z.dim(), d = Z.degree();
    SymFunc lhs = scaled_pairing_sym(Z, l);
    SymFunc z_s = Z.to_symfunc();
    SymFunc z_s2 = Z.to_symfunc_shifted(Rat(-1), make_rat(-n, d));
    // q^(-n l) <|f|^(-s-n/d), W[-l]> collapses to q^(-d l s) Z(-s-n/d)
    SymFunc pair2 = SymFunc::exp_affine(Z.mode(), Rat(-d * l), Rat(0)) * z_s2;
    SymFunc rhs = z_s / z_s2 * SymFunc(Z.mode(), Z.mode().q_pow(Rat(-n * l))) * pair2;
    return lhs - rhs;
}

std::vector<IdentitySample> radial_factorization_check(const OperatorSpec& spec,
                                                       const DeltaFunction& phi,
                                                       const std::vector<Rat>& samples) {
    const RationalZeta& Z = spec.zeta();
    long n = spec.dim(), d = spec.degree();
    std::vector<IdentitySample> out;
    for (const Rat& s : samples) {
        IdentitySample r;
        r.s = s;
        if (Rat(d) * s == Rat(-n)) {
            r.skipped = true;
            r.reason = "d s = -n hits the shell-sum pole lattice";
        } else if (Z.has_pole_at(s)) {
            r.skipped = true;
            r.reason = "pole of Z at a sample";
        } else {
            QScalar lhs(0);
            for (const auto& t : phi.terms())
                lhs = lhs + QScalar(t.coeff) * scaled_pairing(Z, t.level, s);
            QScalar pref = (QScalar(1) - Z.mode().q_pow(Rat(-n) - Rat(d) * s)) /
                           (QScalar(1) - Z.mode().q_pow(Rat(-n)));
            QScalar rhs = pref * Z.eval(s) * pair_radial(Rat(d) * s, phi, true);
            r.residual = lhs - rhs;
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<IdentitySampleC> radial_factorization_check(const OperatorSpec& spec,
                                                        const DeltaFunction& phi,
                                                        const std::vector<Complex>& samples) {
    const RationalZeta& Z = spec.zeta();
    long n = spec.dim(), d = spec.degree();
    Rat q(spec.form().prime());
    std::vector<IdentitySampleC> out;
    for (const Complex& s : samples) {
        IdentitySampleC r;
        r.s = s;
        try {
            Complex lhs;
            for (const auto& t : phi.terms())
                lhs += Complex(t.coeff) * scaled_pairing(Z, t.level, s);
            Complex ds(Real(Rat(d)) * s.real(), Real(Rat(d)) * s.imag());
            Complex pref = (Complex(Rat(1)) - pow_complex(q, -Complex(Rat(n)) - ds)) /
                           (Complex(Rat(1)) - Complex(rat_pow(q, -n)));
            Complex rhs = pref * Z.eval(s) * pair_radial(ds, phi, true);
            r.residual = lhs - rhs;
        } catch (const PoleError& e) {
            r.skipped = true;
            r.reason = e.what();
        }
        out.push_back(std::move(r));
    }
    return out;
}

SymFunc radial_factorization_residual_sym(const OperatorSpec& spec, const DeltaFunction& phi) {
    const RationalZeta& Z = spec.zeta();
    long n = spec.dim(), d = spec.degree();
    SymFunc lhs(Z.mode(), QScalar(0));
    for (const auto& t : phi.terms())
        lhs = lhs + SymFunc(Z.mode(), QScalar(t.coeff)) * scaled_pairing_sym(Z, t.level);
    SymFunc one(Z.mode(), QScalar(1));
    SymFunc pref = (one - SymFunc::exp_affine(Z.mode(), Rat(-d), Rat(-n))) /
                   (one - SymFunc(Z.mode(), Z.mode().q_pow(Rat(-n))));
    SymFunc rhs = pref * Z.to_symfunc() * pair_radial_sym(Rat(d), Rat(0), phi);
    return lhs - rhs;
}

}  // namespace pzeta
