#include "pzeta/zeta.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace pzeta {

namespace {

long small_prime(const Int& p) {
    if (!p.fits_slong_p() || p.get_si() > (1L << 20))
        throw ArgumentError("prime too large for the counting layer");
    return p.get_si();
}

long pow_long_checked(long base, long e) {
    long r = 1;
    for (long i = 0; i < e; ++i) {
        if (r > (1L << 31) / base) throw ArgumentError("modulus out of the int64-safe range");
        r *= base;
    }
    return r;
}

struct Work {
    std::uint64_t used = 0;
    std::uint64_t budget = enumeration_budget();
    void charge(std::uint64_t c, const char* what) {
        used += c;
        if (used > budget) throw ResourceError(what, used, budget);
    }
};

void odometer(std::vector<long>& x, long radix, const std::function<void()>& fn) {
    std::fill(x.begin(), x.end(), 0);
    for (;;) {
        fn();
        size_t i = x.size();
        while (true) {
            if (i-- == 0) return;
            if (++x[i] < radix) break;
            x[i] = 0;
        }
    }
}

}  // namespace

// ---- RationalZeta --------------------------------------------------------

std::string ZetaFactor::str() const {
    std::string c = "q^-" + rat_str(a);
    std::string t = b == 1 ? "t" : "t^" + std::to_string(b);
    std::string base = std::string("(1 ") + (sigma == 1 ? "- " : "+ ") + c + "*" + t + ")";
    if (mult > 1) base += "^" + std::to_string(mult);
    return base;
}

RationalZeta RationalZeta::make(QMode mode, long n, long d, Polynomial<QScalar> num,
                                std::vector<ZetaFactor> den, std::string provenance) {
    if (n < 1 || d < 1) throw ArgumentError("bad zeta metadata");
    // Split even factors (1 - q^-2a t^2b) = (1 - q^-a t^b)(1 + q^-a t^b) so
    // cancellations against the numerator are visible.
    std::vector<ZetaFactor> split;
    std::vector<ZetaFactor> queue = std::move(den);
    while (!queue.empty()) {
        ZetaFactor f = queue.back();
        queue.pop_back();
        bool a_even = f.a.get_den() == 1 && mpz_even_p(f.a.get_num().get_mpz_t());
        if (f.sigma == 1 && f.b % 2 == 0 && a_even) {
            queue.push_back(ZetaFactor{1, f.a / 2, f.b / 2, f.mult});
            queue.push_back(ZetaFactor{-1, f.a / 2, f.b / 2, f.mult});
        } else {
            split.push_back(f);
        }
    }
    // consolidate
    std::map<std::pair<std::pair<int, long>, Rat>, long> acc;
    for (const auto& f : split) acc[{{f.sigma, f.b}, f.a}] += f.mult;
    std::vector<ZetaFactor> factors;
    for (const auto& [key, mult] : acc)
        factors.push_back(ZetaFactor{key.first.first, key.second, key.first.second, mult});

    // cancel numerator factors
    for (auto& f : factors) {
        std::vector<QScalar> c(static_cast<size_t>(f.b) + 1, QScalar(0));
        c[0] = QScalar(1);
        c[static_cast<size_t>(f.b)] = -f.coefficient(mode);
        Polynomial<QScalar> fpoly(std::move(c));
        while (f.mult > 0) {
            auto [q, r] = Polynomial<QScalar>::divmod(num, fpoly);
            if (!r.is_zero() || q.is_zero()) break;
            num = std::move(q);
            --f.mult;
        }
    }
    std::erase_if(factors, [](const ZetaFactor& f) { return f.mult == 0; });

    // Recombine surviving conjugate pairs into the canonical even form.
    for (bool changed = true; changed;) {
        changed = false;
        for (size_t i = 0; i < factors.size() && !changed; ++i) {
            for (size_t j = 0; j < factors.size() && !changed; ++j) {
                if (factors[i].sigma != 1 || factors[j].sigma != -1) continue;
                if (factors[i].a != factors[j].a || factors[i].b != factors[j].b) continue;
                long k = std::min(factors[i].mult, factors[j].mult);
                ZetaFactor merged{1, factors[i].a * 2, factors[i].b * 2, k};
                factors[i].mult -= k;
                factors[j].mult -= k;
                std::erase_if(factors, [](const ZetaFactor& f) { return f.mult == 0; });
                factors.push_back(merged);
                changed = true;
            }
        }
    }
    std::sort(factors.begin(), factors.end(), [](const ZetaFactor& x, const ZetaFactor& y) {
        return std::tuple(x.b, x.a, x.sigma) < std::tuple(y.b, y.a, y.sigma);
    });

    RationalZeta z;
    z.mode_ = mode;
    z.n_ = n;
    z.d_ = d;
    z.num_ = std::move(num);
    z.den_ = std::move(factors);
    z.prov_ = std::move(provenance);

    // Invariants.
    for (const auto& f : z.den_)
        if (!(f.a > 0))
            throw ValidationError("zeta denominator factor " + f.str() +
                                  " has a pole with nonnegative real part");
    QScalar at_one = z.num_.eval(QScalar(1));
    for (const auto& f : z.den_)
        at_one = at_one / (QScalar(1) - f.coefficient(mode)).pow(f.mult);
    if (!(at_one == QScalar(1)))
        throw ValidationError("zeta value at s = 0 is not 1");
    if (!mode.symbolic()) {
        auto coeffs = z.series_rat(8);
        Rat sum(0);
        for (size_t m = 0; m < coeffs.size(); ++m) {
            if (coeffs[m] < 0)
                throw ValidationError("negative series coefficient", static_cast<long>(m));
            sum += coeffs[m];
            if (sum > 1)
                throw ValidationError("series mass exceeds 1", static_cast<long>(m));
        }
    }
    return z;
}

Polynomial<QScalar> RationalZeta::den_poly() const {
    Polynomial<QScalar> out(QScalar(1));
    for (const auto& f : den_) {
        std::vector<QScalar> c(static_cast<size_t>(f.b) + 1, QScalar(0));
        c[0] = QScalar(1);
        c[static_cast<size_t>(f.b)] = -f.coefficient(mode_);
        Polynomial<QScalar> fpoly(std::move(c));
        for (long i = 0; i < f.mult; ++i) out = out * fpoly;
    }
    return out;
}

std::vector<ZetaPole> RationalZeta::poles() const {
    std::vector<ZetaPole> out;
    for (const auto& f : den_)
        out.push_back(ZetaPole{-f.a / f.b, f.mult, f.sigma == -1, f.str()});
    return out;
}

QScalar RationalZeta::eval(const Rat& s) const {
    QScalar t = mode_.q_pow(-s);
    QScalar den(1);
    for (const auto& f : den_) {
        QScalar fv = QScalar(1) - f.coefficient(mode_) * t.pow(f.b);
        if (fv.is_zero())
            throw PoleError("zeta evaluation at s = " + rat_str(s), f.str());
        den = den * fv.pow(f.mult);
    }
    return num_.eval(t) / den;
}

Complex RationalZeta::eval(const Complex& s, const Rat& q_value) const {
    Rat q = mode_.symbolic() ? q_value : Rat(mode_.p);
    if (q <= 0) throw ArgumentError("numeric zeta evaluation needs a concrete q");
    Real tol("1e-20");
    Complex t = pow_complex(q, -s);
    Complex den(Rat(1));
    for (const auto& f : den_) {
        Complex tb = pow_complex(q, Complex(Real(Rat(-f.b)) * s.real(), Real(Rat(-f.b)) * s.imag()));
        Complex fv = Complex(Rat(1)) - Complex(f.coefficient(mode_).to_real(q)) * tb;
        if (abs(fv) < tol) throw PoleError("numeric zeta evaluation at a pole", f.str());
        for (long i = 0; i < f.mult; ++i) den = den * fv;
    }
    Complex numv;
    for (long i = num_.degree(); i >= 0; --i)
        numv = numv * t + Complex(num_.coeff(i).to_real(q), Real(0L));
    return numv / den;
}

SymFunc RationalZeta::to_symfunc() const { return to_symfunc_shifted(Rat(1), Rat(0)); }

SymFunc RationalZeta::to_symfunc_shifted(const Rat& c1, const Rat& c0) const {
    // substitute s -> c0 + c1 s, i.e. t^j -> q^(-j c0) q^(-j c1 s)
    auto tpow = [&](long j) {
        return SymFunc::exp_affine(mode_, -c1 * j, -c0 * j);
    };
    SymFunc numv(mode_, QScalar(0));
    for (long j = 0; j <= num_.degree(); ++j) {
        if (num_.coeff(j).is_zero()) continue;
        numv = numv + SymFunc(mode_, num_.coeff(j)) * tpow(j);
    }
    SymFunc den(mode_, QScalar(1));
    for (const auto& f : den_) {
        SymFunc fv = SymFunc(mode_, QScalar(1)) - SymFunc(mode_, f.coefficient(mode_)) * tpow(f.b);
        for (long i = 0; i < f.mult; ++i) den = den * fv;
    }
    return numv / den;
}

bool RationalZeta::has_pole_at(const Rat& s) const { return vanishing_factor(s).has_value(); }

std::optional<std::string> RationalZeta::vanishing_factor(const Rat& s) const {
    QScalar t = mode_.q_pow(-s);
    for (const auto& f : den_)
        if ((QScalar(1) - f.coefficient(mode_) * t.pow(f.b)).is_zero()) return f.str();
    return std::nullopt;
}

std::vector<QScalar> RationalZeta::series(long M) const {
    Polynomial<QScalar> den = den_poly();
    std::vector<QScalar> a;
    a.reserve(static_cast<size_t>(M) + 1);
    for (long m = 0; m <= M; ++m) {
        QScalar v = num_.coeff(m);
        for (long j = 1; j <= std::min<long>(m, den.degree()); ++j)
            v = v - den.coeff(j) * a[static_cast<size_t>(m - j)];
        a.push_back(std::move(v));  // den.coeff(0) = 1
    }
    return a;
}

std::vector<Rat> RationalZeta::series_rat(long M) const {
    if (mode_.symbolic()) throw ArgumentError("rational series needs a concrete q");
    std::vector<Rat> out;
    for (auto& c : series(M)) out.push_back(c.rat());
    return out;
}

std::string RationalZeta::str() const {
    std::string num = "(";
    bool first = true;
    for (long j = 0; j <= num_.degree(); ++j) {
        if (num_.coeff(j).is_zero()) continue;
        if (!first) num += " + ";
        first = false;
        num += num_.coeff(j).str();
        if (j >= 1) num += "*t" + (j > 1 ? "^" + std::to_string(j) : "");
    }
    num += ")";
    std::string den;
    for (const auto& f : den_) den += f.str();
    return num + " / " + (den.empty() ? "1" : den);
}

QScalar scaled_pairing(const RationalZeta& Z, long l, const Rat& s) {
    Rat e = Rat(-Z.dim() * l) - Rat(Z.degree() * l) * s;
    return Z.mode().q_pow(e) * Z.eval(s);
}

Complex scaled_pairing(const RationalZeta& Z, long l, const Complex& s, const Rat& q_value) {
    Rat q = Z.mode().symbolic() ? q_value : Rat(Z.mode().p);
    Complex e = Complex(Real(Rat(-Z.dim() * l)), Real(0L)) -
                Complex(Real(Rat(Z.degree() * l)) * s.real(), Real(Rat(Z.degree() * l)) * s.imag());
    return pow_complex(q, e) * Z.eval(s, q_value);
}

SymFunc scaled_pairing_sym(const RationalZeta& Z, long l) {
    SymFunc factor = SymFunc::exp_affine(Z.mode(), Rat(-Z.degree() * l), Rat(-Z.dim() * l));
    return factor * Z.to_symfunc();
}

// ---- counting ------------------------------------------------------------

Int count_zeros(const Form& f, long m) {
    if (m < 0) throw ArgumentError("negative depth");
    if (m == 0) return 1;
    long p = small_prime(f.prime());
    long pm = pow_long_checked(p, m);
    coset_count(f.dim(), m, f.prime());  // budget check
    Int count(0);
    std::vector<long> x(static_cast<size_t>(f.dim()), 0);
    odometer(x, pm, [&] {
        if (f.eval_mod(x, pm) == 0) ++count;
    });
    return count;
}

namespace {

// P_1..P_m: primitive zeros mod p^k, nonsingular classes by the exact
// p^(n-1)-per-level fiber count, singular classes lifted explicitly.
std::vector<Int> primitive_counts(const Form& f, long m, Work& work) {
    long p = small_prime(f.prime());
    long n = f.dim();
    std::uint64_t pn = 1;
    for (long i = 0; i < n; ++i) pn *= static_cast<std::uint64_t>(p);
    work.charge(pn, "primitive residue scan");

    long smooth1 = 0;
    std::vector<std::vector<long>> sing;
    std::vector<long> x(static_cast<size_t>(n), 0);
    odometer(x, p, [&] {
        if (std::all_of(x.begin(), x.end(), [](long v) { return v == 0; })) return;
        if (f.eval_mod(x, p) != 0) return;
        auto g = f.gradient_mod(x, p);
        if (std::all_of(g.begin(), g.end(), [](long v) { return v == 0; }))
            sing.push_back(x);
        else
            ++smooth1;
    });

    std::vector<Int> P(static_cast<size_t>(m) + 1, Int(0));
    if (m >= 1) P[1] = smooth1 + static_cast<long>(sing.size());
    Int pn1(1);  // p^(n-1)
    for (long i = 0; i + 1 < n; ++i) pn1 *= p;
    Int smooth_total(smooth1);
    for (long k = 2; k <= m; ++k) {
        long pk = pow_long_checked(p, k);
        long pk1 = pk / p;
        std::vector<std::vector<long>> next;
        work.charge(sing.size() * pn, "singular class lifting");
        std::vector<long> e(static_cast<size_t>(n), 0);
        for (const auto& base : sing) {
            odometer(e, p, [&] {
                std::vector<long> y(base);
                for (size_t i = 0; i < y.size(); ++i) y[i] += e[i] * pk1;
                if (f.eval_mod(y, pk) == 0) next.push_back(std::move(y));
            });
        }
        sing = std::move(next);
        smooth_total *= pn1;
        P[static_cast<size_t>(k)] = smooth_total + static_cast<long>(sing.size());
    }
    return P;
}

}  // namespace

Int count_zeros_fast(const Form& f, long m) {
    if (m < 0) throw ArgumentError("negative depth");
    if (m == 0) return 1;
    if (!f.primitive())
        throw DomainError("fast counting requires a form that is primitive mod p");
    Work work;
    auto P = primitive_counts(f, m, work);
    long p = small_prime(f.prime());
    long n = f.dim(), d = f.degree();
    Int pnd1 = int_pow(Int(p), static_cast<unsigned long>(n * (d - 1)));
    std::vector<Int> N(static_cast<size_t>(m) + 1);
    N[0] = 1;
    for (long k = 1; k <= m; ++k) {
        Int scaled = k >= d ? pnd1 * N[static_cast<size_t>(k - d)]
                            : int_pow(Int(p), static_cast<unsigned long>(n * (k - 1)));
        N[static_cast<size_t>(k)] = P[static_cast<size_t>(k)] + scaled;
    }
    return N[static_cast<size_t>(m)];
}

std::optional<std::vector<long>> singular_primitive_zero(const Form& f) {
    long p = small_prime(f.prime());
    long n = f.dim();
    std::uint64_t pn = 1;
    for (long i = 0; i < n; ++i) pn *= static_cast<std::uint64_t>(p);
    if (pn > enumeration_budget())
        throw ResourceError("residue scan over budget", pn, enumeration_budget());
    std::optional<std::vector<long>> witness;
    std::vector<long> x(static_cast<size_t>(n), 0);
    odometer(x, p, [&] {
        if (witness) return;
        if (std::all_of(x.begin(), x.end(), [](long v) { return v == 0; })) return;
        if (f.eval_mod(x, p) != 0) return;
        auto g = f.gradient_mod(x, p);
        if (std::all_of(g.begin(), g.end(), [](long v) { return v == 0; })) witness = x;
    });
    return witness;
}

bool smooth_primitive_check(const Form& f) { return !singular_primitive_zero(f).has_value(); }

namespace {

Rat gram_det(const Form& h) {
    long n = h.dim();
    std::vector<std::vector<Rat>> B(static_cast<size_t>(n), std::vector<Rat>(static_cast<size_t>(n), Rat(0)));
    for (const auto& m : h.monomials()) {
        std::vector<size_t> vars;
        for (size_t i = 0; i < m.exps.size(); ++i)
            for (unsigned e = 0; e < m.exps[i]; ++e) vars.push_back(i);
        if (vars.size() != 2) throw ArgumentError("not a quadratic form");
        size_t i = vars[0], j = vars[1];
        if (i == j) {
            B[i][i] += 2 * Rat(m.coeff);
        } else {
            B[i][j] += Rat(m.coeff);
            B[j][i] += Rat(m.coeff);
        }
    }
    // Gaussian elimination
    Rat det(1);
    for (size_t c = 0; c < B.size(); ++c) {
        size_t pivot = c;
        while (pivot < B.size() && B[pivot][c] == 0) ++pivot;
        if (pivot == B.size()) return Rat(0);
        if (pivot != c) {
            std::swap(B[pivot], B[c]);
            det = -det;
        }
        det *= B[c][c];
        for (size_t r = c + 1; r < B.size(); ++r) {
            if (B[r][c] == 0) continue;
            Rat factor = B[r][c] / B[c][c];
            for (size_t k = c; k < B.size(); ++k) B[r][k] -= factor * B[c][k];
        }
    }
    return det;
}

}  // namespace

bool anisotropy_check(const Form& h) {
    if (h.degree() != 2) throw ArgumentError("anisotropy check is for quadratic forms");
    if (h.prime() == 2) throw ArgumentError("anisotropy check requires p odd");
    if (gram_det(h) == 0) throw DomainError("degenerate quadratic form");
    long p = small_prime(h.prime());
    long n = h.dim();
    long p2 = pow_long_checked(p, 2), p3 = pow_long_checked(p, 3);
    Work work;
    std::uint64_t pn = 1;
    for (long i = 0; i < n; ++i) pn *= static_cast<std::uint64_t>(p);

    bool found = false;
    std::vector<long> x(static_cast<size_t>(n), 0), e(static_cast<size_t>(n), 0),
        e2(static_cast<size_t>(n), 0);
    work.charge(pn, "anisotropy scan");
    odometer(x, p, [&] {
        if (found) return;
        if (std::all_of(x.begin(), x.end(), [](long v) { return v == 0; })) return;
        if (h.eval_mod(x, p) != 0) return;
        work.charge(pn, "anisotropy lift to depth 2");
        odometer(e, p, [&] {
            if (found) return;
            std::vector<long> y(x);
            for (size_t i = 0; i < y.size(); ++i) y[i] += e[i] * p;
            if (h.eval_mod(y, p2) != 0) return;
            work.charge(pn, "anisotropy lift to depth 3");
            odometer(e2, p, [&] {
                if (found) return;
                std::vector<long> z(y);
                for (size_t i = 0; i < z.size(); ++i) z[i] += e2[i] * p2;
                if (h.eval_mod(z, p3) == 0) found = true;
            });
        });
    });
    return !found;
}

std::vector<Form> catalog_anisotropic(long n, const Int& p) {
    require_prime(p);
    if (p == 2) throw ArgumentError("the anisotropic catalog requires p odd");
    if (n < 2 || n > 4) throw ArgumentError("anisotropic forms exist only for 2 <= n <= 4");

    // a unit non-residue: -1 when possible (p = 3 mod 4), else the smallest
    // positive one
    Int eps;
    if (mpz_legendre(Int(-1).get_mpz_t(), p.get_mpz_t()) == -1) {
        eps = -1;
    } else {
        for (Int g(2);; ++g)
            if (mpz_legendre(g.get_mpz_t(), p.get_mpz_t()) == -1) {
                eps = g;
                break;
            }
    }
    Int s(2);
    while (mpz_legendre(s.get_mpz_t(), p.get_mpz_t()) != -1) ++s;

    auto diag = [&](std::vector<Int> coeffs) {
        std::vector<Form::Monomial> monos;
        for (size_t i = 0; i < coeffs.size(); ++i) {
            if (coeffs[i] == 0) continue;
            std::vector<unsigned> e(coeffs.size(), 0);
            e[i] = 2;
            monos.push_back(Form::Monomial{std::move(e), coeffs[i]});
        }
        return Form::from_monomials(std::move(monos), static_cast<long>(coeffs.size()), p);
    };

    std::vector<Form> out;
    if (n == 2) {
        for (const Int& tau : {eps, p, Int(eps * p)}) out.push_back(diag({Int(1), Int(-tau)}));
    } else if (n == 3) {
        out.push_back(diag({p, Int(1), Int(-eps)}));
    } else {
        std::vector<Form::Monomial> monos;
        auto mono = [&](size_t i, Int c) {
            std::vector<unsigned> e(4, 0);
            e[i] = 2;
            monos.push_back(Form::Monomial{std::move(e), std::move(c)});
        };
        mono(0, Int(1));
        mono(1, Int(-s));
        mono(2, Int(-p));
        mono(3, Int(s * p));
        out.push_back(Form::from_monomials(std::move(monos), 4, p));
    }
    return out;
}

// ---- level masses ----------------------------------------------------------

LevelMassSeries level_masses(const Form& f, long M, const std::optional<RationalZeta>& Z) {
    if (M < 0) throw ArgumentError("negative depth");
    LevelMassSeries out;
    out.p_ = f.prime();
    out.n_ = f.dim();
    std::vector<Int> N(static_cast<size_t>(M) + 2);
    for (long m = 0; m <= M + 1; ++m) N[static_cast<size_t>(m)] = count_zeros_fast(f, m);
    Rat qn = rat_pow(Rat(f.prime()), -f.dim());
    for (long m = 0; m <= M; ++m) {
        Rat a = Rat(N[static_cast<size_t>(m)]) * rat_pow(qn, m) -
                Rat(N[static_cast<size_t>(m + 1)]) * rat_pow(qn, m + 1);
        if (a < 0) throw Error("internal: negative level mass");
        out.masses_.push_back(std::move(a));
    }
    if (Z) {
        if (Z->mode().symbolic() || Z->mode().p != f.prime())
            throw ArgumentError("zeta and form live over different primes");
        auto series = Z->series_rat(M);
        for (long m = 0; m <= M; ++m)
            if (series[static_cast<size_t>(m)] != out.masses_[static_cast<size_t>(m)])
                throw ValidationError(
                    "rational zeta disagrees with counted masses at t^" + std::to_string(m) +
                        ": series " + rat_str(series[static_cast<size_t>(m)]) + " vs counted " +
                        rat_str(out.masses_[static_cast<size_t>(m)]),
                    m);
        std::vector<Rat> denc, numc;
        auto dp = Z->den_poly();
        for (long j = 0; j <= dp.degree(); ++j) denc.push_back(dp.coeff(j).rat());
        for (long j = 0; j <= Z->num_poly().degree(); ++j) numc.push_back(Z->num_poly().coeff(j).rat());
        out.den_ = std::move(denc);
        out.num_ = std::move(numc);
    }
    return out;
}

Rat LevelMassSeries::mass(long m) {
    if (m < 0) throw ArgumentError("negative level");
    if (m <= stored_depth()) return masses_[static_cast<size_t>(m)];
    if (!has_tail())
        throw PrecisionError("level masses beyond depth " + std::to_string(stored_depth()) +
                             " need the exact tail");
    while (stored_depth() < m) {
        long k = stored_depth() + 1;
        Rat v = k < static_cast<long>(num_->size()) ? (*num_)[static_cast<size_t>(k)] : Rat(0);
        for (long j = 1; j < static_cast<long>(den_->size()) && j <= k; ++j)
            v -= (*den_)[static_cast<size_t>(j)] * masses_[static_cast<size_t>(k - j)];
        masses_.push_back(std::move(v));
    }
    return masses_[static_cast<size_t>(m)];
}

Rat LevelMassSeries::tail_mass_after(long m) {
    Rat sum(0);
    for (long j = 0; j <= m; ++j) sum += mass(j);
    return 1 - sum;
}

std::vector<Rat> zeta_truncated(const Form& f, long M) {
    return level_masses(f, M).stored();
}

// ---- closed forms ----------------------------------------------------------

RationalZeta spf_formula(QMode mode, long n, long d, const Rat& N) {
    QScalar qn = mode.q_pow(Rat(-n));
    QScalar c0 = QScalar(1) - QScalar(N) * qn;
    QScalar c1 = mode.q_pow(Rat(-n - 1)) + QScalar(N - 1) * qn - mode.q_pow(Rat(-1));
    Polynomial<QScalar> num(std::vector<QScalar>{c0, c1});
    std::vector<ZetaFactor> den{{1, Rat(1), 1, 1}, {1, Rat(n), d, 1}};
    return RationalZeta::make(mode, n, d, std::move(num), std::move(den), "spf");
}

RationalZeta zeta_spf(const Form& f) {
    if (!f.primitive())
        throw DomainError("stationary phase needs a form that is primitive mod p");
    if (auto witness = singular_primitive_zero(f)) {
        std::string w = "(";
        for (size_t i = 0; i < witness->size(); ++i)
            w += (i ? "," : "") + std::to_string((*witness)[i]);
        w += ")";
        throw DomainError("stationary phase hypothesis fails: singular primitive zero at " + w +
                          " mod " + f.prime().get_str());
    }
    Rat N(count_zeros(f, 1));
    return spf_formula(QMode{f.prime()}, f.dim(), f.degree(), N);
}

RationalZeta zeta_elliptic(long n, QMode mode) {
    if (n < 2 || n > 4) throw ArgumentError("elliptic closed form covers 2 <= n <= 4");
    if (!mode.symbolic() && mode.p == 2) throw ArgumentError("elliptic closed form requires q odd");
    Polynomial<QScalar> num(QScalar(1) - mode.q_pow(Rat(-n)));
    std::vector<ZetaFactor> den{{1, Rat(n), 2, 1}};
    return RationalZeta::make(mode, n, 2, std::move(num), std::move(den), "elliptic");
}

}  // namespace pzeta
