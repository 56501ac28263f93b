#pragma once

#include <random>

#include "pzeta/delta.hpp"

namespace pzeta::testing {

inline std::mt19937_64& rng() {
    static std::mt19937_64 eng(20240517);
    return eng;
}

inline long rand_int(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng());
}

inline Rat rand_rat(long max_abs_num = 9, long max_den = 7) {
    long num = rand_int(-max_abs_num, max_abs_num);
    long den = rand_int(1, max_den);
    return make_rat(num, den);
}

inline Rat rand_nonzero_rat(long max_abs_num = 9, long max_den = 7) {
    for (;;) {
        Rat r = rand_rat(max_abs_num, max_den);
        if (r != 0) return r;
    }
}

inline DeltaFunction rand_delta(const Int& p, long n, long lmin = -3, long lmax = 3,
                                long max_terms = 4) {
    DeltaFunction f(p, n);
    long terms = rand_int(1, max_terms);
    for (long i = 0; i < terms; ++i) {
        long level = rand_int(lmin, lmax);
        Rat c = rand_nonzero_rat();
        f = f + DeltaFunction::indicator(p, n, level, c);
    }
    return f;
}

inline bool tiny(const Real& x, const char* bound = "1e-30") {
    return abs(x) < Real(bound);
}

inline bool tiny(const Complex& z, const char* bound = "1e-30") {
    return abs(z) < Real(bound);
}

}  // namespace pzeta::testing
