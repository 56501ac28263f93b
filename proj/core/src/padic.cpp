#include "pzeta/padic.hpp"

#include <atomic>

namespace pzeta {

namespace {
std::atomic<std::uint64_t> g_budget{100000000};  // 10^8 points

long pow_long(long base, long e) {
    long r = 1;
    for (long i = 0; i < e; ++i) r *= base;
    return r;
}
}  // namespace

std::uint64_t enumeration_budget() { return g_budget.load(); }

void set_enumeration_budget(std::uint64_t points) {
    if (points == 0) throw ArgumentError("enumeration budget must be positive");
    g_budget.store(points);
}

std::optional<long> valuation(const Rat& x, const Int& p) { return rat_valuation(x, p); }

Int angular_component(const Rat& x, const Int& p, long m) {
    require_prime(p);
    if (x == 0) throw ArgumentError("angular component of zero is undefined");
    if (m < 1) throw ArgumentError("angular component depth must be >= 1");
    Int num = x.get_num(), den = x.get_den();
    long vn = int_valuation(num, p), vd = int_valuation(den, p);
    Int pm = int_pow(p, static_cast<unsigned long>(m));
    Int un = num / int_pow(p, static_cast<unsigned long>(vn));
    Int ud = den / int_pow(p, static_cast<unsigned long>(vd));
    return mod_reduce(mod_reduce(un, pm) * mod_inverse(ud, pm), pm);
}

Complex additive_character(const Rat& x, const Int& p, long prec) {
    require_prime(p);
    Int den = x.get_den();
    if (den == 1) return Complex::unit(Rat(0), prec);
    long k = int_valuation(den, p);
    Int pk = int_pow(p, static_cast<unsigned long>(k));
    if (den != pk)
        throw ArgumentError("denominator of " + rat_str(x) + " is not a power of " + p.get_str());
    Rat frac(mod_reduce(Int(x.get_num()), pk), pk);
    frac.canonicalize();
    return Complex::unit(frac, prec);
}

PAdicScalar PAdicScalar::zero(const Int& p) {
    require_prime(p);
    return PAdicScalar(p, std::nullopt, Int(0), kDefaultPrecision);
}

PAdicScalar PAdicScalar::from_rational(const Rat& x, const Int& p, long prec) {
    require_prime(p);
    if (prec < 1) throw ArgumentError("precision must be >= 1");
    if (x == 0) return PAdicScalar(p, std::nullopt, Int(0), prec);
    Int num = x.get_num(), den = x.get_den();
    long vn = int_valuation(num, p), vd = int_valuation(den, p);
    Int pm = int_pow(p, static_cast<unsigned long>(prec));
    Int un = num / int_pow(p, static_cast<unsigned long>(vn));
    Int ud = den / int_pow(p, static_cast<unsigned long>(vd));
    Int unit = mod_reduce(mod_reduce(un, pm) * mod_inverse(ud, pm), pm);
    return PAdicScalar(p, vn - vd, std::move(unit), prec);
}

Int PAdicScalar::angular(long m) const {
    if (is_zero()) throw ArgumentError("angular component of zero is undefined");
    if (m > prec_)
        throw PrecisionError("angular component needs " + std::to_string(m) +
                             " digits but only " + std::to_string(prec_) + " are trusted");
    return mod_reduce(unit_, int_pow(p_, static_cast<unsigned long>(m)));
}

void PAdicScalar::check_compatible(const PAdicScalar& a, const PAdicScalar& b) {
    if (a.p_ != b.p_) throw ArgumentError("mixing p-adic scalars over different primes");
}

PAdicScalar operator*(const PAdicScalar& a, const PAdicScalar& b) {
    PAdicScalar::check_compatible(a, b);
    if (a.is_zero() || b.is_zero()) return PAdicScalar::zero(a.p_);
    long prec = std::min(a.prec_, b.prec_);
    Int pm = int_pow(a.p_, static_cast<unsigned long>(prec));
    return PAdicScalar(a.p_, *a.v_ + *b.v_, mod_reduce(a.unit_ * b.unit_, pm), prec);
}

PAdicScalar operator+(const PAdicScalar& a, const PAdicScalar& b) {
    PAdicScalar::check_compatible(a, b);
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const PAdicScalar& lo = (*a.v_ <= *b.v_) ? a : b;
    const PAdicScalar& hi = (*a.v_ <= *b.v_) ? b : a;
    long dv = *hi.v_ - *lo.v_;
    // unit sum trusted mod p^mm
    long mm = std::min(lo.prec_, hi.prec_ + dv);
    if (mm < 1)
        throw PrecisionError("p-adic addition lost all trusted digits");
    Int pmm = int_pow(lo.p_, static_cast<unsigned long>(mm));
    Int sum = mod_reduce(lo.unit_ + hi.unit_ * int_pow(lo.p_, static_cast<unsigned long>(dv)), pmm);
    if (sum == 0)
        // Cancellation below the trusted depth: indistinguishable from zero.
        return PAdicScalar(lo.p_, std::nullopt, Int(0), 0);
    long j = int_valuation(sum, lo.p_);
    Int unit = sum / int_pow(lo.p_, static_cast<unsigned long>(j));
    return PAdicScalar(lo.p_, *lo.v_ + j, std::move(unit), mm - j);
}

PAdicScalar PAdicScalar::operator-() const {
    if (is_zero()) return *this;
    Int pm = int_pow(p_, static_cast<unsigned long>(prec_));
    return PAdicScalar(p_, v_, mod_reduce(pm - unit_, pm), prec_);
}

PAdicScalar PAdicScalar::inverse() const {
    if (is_zero()) throw ArgumentError("inverse of the zero p-adic scalar");
    Int pm = int_pow(p_, static_cast<unsigned long>(prec_));
    return PAdicScalar(p_, -*v_, mod_inverse(unit_, pm), prec_);
}

PAdicScalar PAdicScalar::shifted(long k) const {
    if (is_zero()) return *this;
    return PAdicScalar(p_, *v_ + k, unit_, prec_);
}

PAdicVector::PAdicVector(std::vector<PAdicScalar> comps) : x_(std::move(comps)) {
    if (x_.empty()) throw ArgumentError("empty p-adic vector");
    for (const auto& c : x_)
        if (c.prime() != x_.front().prime())
            throw ArgumentError("mixing primes inside a p-adic vector");
}

PAdicVector PAdicVector::from_rationals(const std::vector<Rat>& xs, const Int& p, long prec) {
    std::vector<PAdicScalar> comps;
    comps.reserve(xs.size());
    for (const auto& x : xs) comps.push_back(PAdicScalar::from_rational(x, p, prec));
    return PAdicVector(std::move(comps));
}

Rat PAdicVector::norm() const {
    auto v = min_valuation();
    return v ? rat_pow(Rat(prime()), -*v) : Rat(0);
}

std::optional<long> PAdicVector::min_valuation() const {
    std::optional<long> best;
    for (const auto& c : x_) {
        auto v = c.val();
        if (v && (!best || *v < *best)) best = v;
    }
    return best;
}

long PAdicVector::character_depth() const {
    auto v = min_valuation();
    return (v && *v < 0) ? -*v : 0;
}

Rat PAdicVector::pairing_fraction(std::span<const long> y) const {
    if (static_cast<long>(y.size()) != dim())
        throw ArgumentError("pairing dimension mismatch");
    Rat frac(0);
    for (long i = 0; i < dim(); ++i) {
        const PAdicScalar& c = x_[static_cast<size_t>(i)];
        auto v = c.val();
        if (!v || *v >= 0) continue;  // integral component contributes nothing mod Z_p
        long k = -*v;
        if (c.trusted_digits() < k)
            throw PrecisionError("component needs " + std::to_string(k) + " trusted digits");
        Int pk = int_pow(prime(), static_cast<unsigned long>(k));
        Int a = mod_reduce(c.angular(k) * Int(y[static_cast<size_t>(i)]), pk);
        frac += make_rat(a, pk);
    }
    // reduce mod 1
    Int whole = frac.get_num() / frac.get_den();
    frac -= Rat(whole);
    frac.canonicalize();
    return frac;
}

PAdicVector PAdicVector::scaled_by_p_power(long k) const {
    std::vector<PAdicScalar> comps;
    comps.reserve(x_.size());
    for (const auto& c : x_) comps.push_back(c.shifted(k));
    return PAdicVector(std::move(comps));
}

std::uint64_t coset_count(long n, long m, const Int& p) {
    if (m < 1) throw ArgumentError("coset depth must be >= 1");
    if (n < 1) throw ArgumentError("dimension must be >= 1");
    require_prime(p);
    Int total = int_pow(p, static_cast<unsigned long>(m * n));
    Int budget(static_cast<unsigned long>(enumeration_budget()));
    if (total > budget)
        throw ResourceError("coset enumeration over budget",
                            total.fits_ulong_p() ? total.get_ui() : UINT64_MAX,
                            enumeration_budget());
    return total.get_ui();
}

void for_each_coset(long n, long m, const Int& p,
                    const std::function<void(std::span<const long>)>& fn) {
    std::uint64_t total = coset_count(n, m, p);
    long pm = pow_long(static_cast<long>(p.get_si()), m);
    std::vector<long> rep(static_cast<size_t>(n), 0);
    for (std::uint64_t idx = 0;; ++idx) {
        fn(std::span<const long>(rep.data(), rep.size()));
        if (idx + 1 == total) break;
        for (long i = n - 1; i >= 0; --i) {
            if (++rep[static_cast<size_t>(i)] < pm) break;
            rep[static_cast<size_t>(i)] = 0;
        }
    }
}

std::vector<CosetId> enumerate_cosets(long n, long m, const Int& p) {
    std::vector<CosetId> out;
    out.reserve(coset_count(n, m, p));
    for_each_coset(n, m, p, [&](std::span<const long> rep) {
        out.push_back(CosetId{p, m, n, std::vector<long>(rep.begin(), rep.end())});
    });
    return out;
}

}  // namespace pzeta
