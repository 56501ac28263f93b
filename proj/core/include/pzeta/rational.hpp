#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <optional>
#include <string>

#include "pzeta/errors.hpp"

namespace pzeta {

using Int = mpz_class;
using Rat = mpq_class;

inline bool fe_is_zero(const Rat& x) { return x == 0; }
inline Rat fe_one(const Rat&) { return Rat(1); }

// mpq_class(a, b) does not canonicalize; this does.
inline Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}
inline Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// q^e for integer e (exact rational for negative exponents).
inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (base == 0) {
        if (e < 0) throw ArgumentError("0 raised to a negative power");
        return Rat(0);
    }
    Rat r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()),
               static_cast<unsigned long>(e < 0 ? -e : e));
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()),
               static_cast<unsigned long>(e < 0 ? -e : e));
    r.canonicalize();
    if (e < 0) r = 1 / r;
    return r;
}

inline bool is_prime(const Int& p) {
    return p >= 2 && mpz_probab_prime_p(p.get_mpz_t(), 32) != 0;
}

inline void require_prime(const Int& p) {
    if (!is_prime(p)) throw ArgumentError("p = " + p.get_str() + " is not prime");
}

// p-adic valuation of a nonzero integer.
inline long int_valuation(Int x, const Int& p) {
    if (x == 0) throw ArgumentError("valuation of zero integer requested");
    long v = 0;
    Int q, r;
    for (;;) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
        if (r != 0) break;
        x = q;
        ++v;
    }
    return v;
}

// p-adic valuation of a rational; std::nullopt encodes +infinity (x == 0).
inline std::optional<long> rat_valuation(const Rat& x, const Int& p) {
    require_prime(p);
    if (x == 0) return std::nullopt;
    return int_valuation(Int(x.get_num()), p) - int_valuation(Int(x.get_den()), p);
}

inline Int mod_reduce(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline Int mod_inverse(const Int& a, const Int& m) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw ArgumentError("no inverse of " + a.get_str() + " modulo " + m.get_str());
    return r;
}

// Exact square root of a rational if it is a perfect square.
inline std::optional<Rat> rat_sqrt(const Rat& x) {
    if (x < 0) return std::nullopt;
    Int num = x.get_num(), den = x.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
    Int sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    return Rat(sn, sd);
}

inline std::string rat_str(const Rat& x) { return x.get_str(); }

// Parses "a" or "a/b" (also accepts a leading sign); exact.
inline Rat parse_rat(const std::string& text) {
    try {
        Rat r(text);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw ArgumentError("cannot parse rational from \"" + text + "\"");
    }
}

inline long rat_to_long(const Rat& x, const char* what) {
    if (x.get_den() != 1 || !x.get_num().fits_slong_p())
        throw ArgumentError(std::string(what) + " must be a small integer, got " + rat_str(x));
    return x.get_num().get_si();
}

}  // namespace pzeta
