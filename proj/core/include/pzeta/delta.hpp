#pragma once

#include <string>
#include <vector>

#include "pzeta/padic.hpp"
#include "pzeta/symfunc.hpp"

namespace pzeta {

// Finite linear combination of ball indicators W[l] (the indicator of
// (p^l Z_p)^n), in canonical form: levels strictly increasing, no zero
// coefficients.  Closed under Fourier transform, convolution and pointwise
// product; all operations are exact.
class DeltaFunction {
  public:
    struct Term {
        long level;
        Rat coeff;
    };

    DeltaFunction(Int p, long n) : p_(std::move(p)), n_(n) {
        require_prime(p_);
        if (n_ < 1) throw ArgumentError("dimension must be >= 1");
    }
    static DeltaFunction indicator(const Int& p, long n, long level, const Rat& coeff = Rat(1));

    const Int& prime() const { return p_; }
    long dim() const { return n_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool in_delta0() const;    // all levels >= 0
    bool in_delta_inf() const; // all levels <= 0

    friend DeltaFunction operator+(const DeltaFunction& a, const DeltaFunction& b);
    friend DeltaFunction operator-(const DeltaFunction& a, const DeltaFunction& b);
    friend DeltaFunction operator*(const Rat& c, const DeltaFunction& a);
    friend bool operator==(const DeltaFunction& a, const DeltaFunction& b) {
        return (a - b).is_zero();
    }

    // Linear extension of W[l] -> q^(-n l) W[-l]; an involution on this space.
    DeltaFunction fourier() const;

    // Haar integral with vol(Z_p^n) = 1.
    Rat integrate() const;

    // Bilinear extension of W[a] * W[b] = q^(-n max(a,b)) W[min(a,b)].
    DeltaFunction convolve(const DeltaFunction& other) const;

    // Pointwise product; W[a] . W[b] = W[max(a,b)].
    DeltaFunction pointwise_product(const DeltaFunction& other) const;

    Rat value_at_zero() const;
    Rat eval(const PAdicVector& x) const;

    // Textual form "c*W[l] + ...": parse/print round-trip is the identity.
    std::string str() const;
    static DeltaFunction parse(const std::string& text, const Int& p, long n);

  private:
    void add_term(long level, const Rat& coeff);

    Int p_;
    long n_;
    std::vector<Term> terms_;
};

// <||x||^a, Phi> by the exact geometric shell decomposition of each ball:
//   <||x||^a, W[l]> = q^(-l(n+a)) (1-q^(-n)) / (1-q^(-n-a)).
// The defining integral converges only for n + a > 0; outside that range the
// value is the meromorphic continuation and is reported only on request.
// a = -n is a genuine pole of the continuation.
QScalar pair_radial(const Rat& a, const DeltaFunction& phi, bool continued = false);

// Same pairing with a symbolic affine exponent a(s) = a1*s + a0 (always the
// continued value; poles become denominator factors of the result).
SymFunc pair_radial_sym(const Rat& a1, const Rat& a0, const DeltaFunction& phi);

// Numeric pairing at a complex exponent; pole lattice detected within 1e-20.
Complex pair_radial(const Complex& a, const DeltaFunction& phi, bool continued = false);

// coeff * ||x||^exponent restricted to Delta pairings; the carrier type for
// fundamental solutions and expansion terms.
struct RadialPower {
    QScalar coeff;
    Rat exponent;
    long n = 1;
    Int p = 0;  // 0: symbolic q

    // Continued pairing <coeff*||x||^exponent, Phi>.
    QScalar pair(const DeltaFunction& phi) const { return coeff * pair_radial(exponent, phi, true); }
};

}  // namespace pzeta
