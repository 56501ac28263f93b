#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "pzeta/numeric.hpp"
#include "pzeta/rational.hpp"

namespace pzeta {

// Desk-scale guardrail for every coset enumeration; requests above the budget
// fail loudly with the size they would have needed.
std::uint64_t enumeration_budget();
void set_enumeration_budget(std::uint64_t points);

// v_p(x); std::nullopt encodes +infinity (x = 0).
std::optional<long> valuation(const Rat& x, const Int& p);

// x * p^(-v(x)) reduced mod p^m; defined for x != 0, always coprime to p.
Int angular_component(const Rat& x, const Int& p, long m = 1);

// The standard additive character: x with p-power denominator is mapped to
// exp(2*pi*i * {x}_p) where {x}_p is the p-adic fractional part.
Complex additive_character(const Rat& x, const Int& p, long prec = 0);

// Finite-precision element of Q_p stored as (valuation, unit mod p^prec).
// Norms and angular components are O(1) in this representation; exact
// rationals are accepted at the boundary and converted.
class PAdicScalar {
  public:
    static constexpr long kDefaultPrecision = 12;

    static PAdicScalar zero(const Int& p);
    static PAdicScalar from_rational(const Rat& x, const Int& p, long prec = kDefaultPrecision);

    const Int& prime() const { return p_; }
    bool is_zero() const { return !v_.has_value(); }
    std::optional<long> val() const { return v_; }
    long trusted_digits() const { return prec_; }
    Rat norm() const { return is_zero() ? Rat(0) : rat_pow(Rat(p_), -*v_); }

    // unit part mod p^m; m may not exceed the trusted digits.
    Int angular(long m = 1) const;

    friend PAdicScalar operator+(const PAdicScalar& a, const PAdicScalar& b);
    friend PAdicScalar operator*(const PAdicScalar& a, const PAdicScalar& b);
    PAdicScalar operator-() const;
    PAdicScalar inverse() const;

    // multiplication by p^k
    PAdicScalar shifted(long k) const;

  private:
    PAdicScalar(Int p, std::optional<long> v, Int unit, long prec)
        : p_(std::move(p)), v_(v), unit_(std::move(unit)), prec_(prec) {}
    static void check_compatible(const PAdicScalar& a, const PAdicScalar& b);

    Int p_;
    std::optional<long> v_;  // nullopt: the zero element
    Int unit_;               // coprime to p, known mod p_^prec_
    long prec_;
};

class PAdicVector {
  public:
    explicit PAdicVector(std::vector<PAdicScalar> comps);
    static PAdicVector from_rationals(const std::vector<Rat>& xs, const Int& p,
                                      long prec = PAdicScalar::kDefaultPrecision);

    long dim() const { return static_cast<long>(x_.size()); }
    const PAdicScalar& operator[](long i) const { return x_[static_cast<size_t>(i)]; }
    const Int& prime() const { return x_.front().prime(); }

    // max-norm: a power of p, or 0.
    Rat norm() const;
    std::optional<long> min_valuation() const;

    // Depth at which y -> Psi([x, y]) is locally constant on Z_p^n cosets.
    long character_depth() const;

    // {[x, y]}_p for an integer coset representative y.
    Rat pairing_fraction(std::span<const long> y) const;

    // componentwise multiplication by p^k
    PAdicVector scaled_by_p_power(long k) const;

  private:
    std::vector<PAdicScalar> x_;
};

// Canonical representative of a coset of (p^m Z_p)^n inside Z_p^n.
struct CosetId {
    Int p;
    long depth = 1;
    long dim = 1;
    std::vector<long> rep;  // each in [0, p^depth)
};

// Number of cosets p^(m n), after checking it against the budget.
std::uint64_t coset_count(long n, long m, const Int& p);

// Deterministic enumeration of all cosets at depth m: the representative is
// the base-p^m odometer of the running index, last coordinate fastest.
// The callback receives the representative; enumeration is a bijection onto
// (Z/p^m)^n.
void for_each_coset(long n, long m, const Int& p,
                    const std::function<void(std::span<const long>)>& fn);

// CosetId stream form of the same enumeration.
std::vector<CosetId> enumerate_cosets(long n, long m, const Int& p);

}  // namespace pzeta
