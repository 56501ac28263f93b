#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pzeta/form.hpp"
#include "pzeta/padic.hpp"
#include "pzeta/symfunc.hpp"

namespace pzeta {

// One denominator factor (1 - sigma * q^(-a) * t^b)^mult of a rational zeta
// function in t = q^(-s).  Roots satisfy |t| = q^(a/b), i.e. Re(s) = -a/b.
struct ZetaFactor {
    int sigma = 1;  // +1 or -1
    Rat a;          // q-exponent, must stay positive for pole-sign soundness
    long b = 1;     // t-power
    long mult = 1;

    QScalar coefficient(QMode mode) const {
        return QScalar(sigma) * mode.q_pow(-a);
    }
    std::string str() const;
};

struct ZetaPole {
    Rat real_part;       // -a/b
    long order;
    bool off_axis;       // sigma = -1: imaginary offset pi/(b log q)
    std::string factor;
};

// Z(s, f) as an exact rational function of t = q^(-s), denominator kept in
// factored form.  Construction reduces the fraction, then enforces the
// structural invariants: value 1 at s = 0, every pole with negative real
// part, and (for concrete q) nonnegative series coefficients with partial
// sums <= 1.
class RationalZeta {
  public:
    static RationalZeta make(QMode mode, long n, long d, Polynomial<QScalar> num,
                             std::vector<ZetaFactor> den, std::string provenance);

    const QMode& mode() const { return mode_; }
    long dim() const { return n_; }
    long degree() const { return d_; }
    const std::string& provenance() const { return prov_; }
    const Polynomial<QScalar>& num_poly() const { return num_; }
    const std::vector<ZetaFactor>& den_factors() const { return den_; }
    Polynomial<QScalar> den_poly() const;

    std::vector<ZetaPole> poles() const;

    // Exact value at rational s (t = q^(-s) in the q^(1/D) field).
    QScalar eval(const Rat& s) const;
    Complex eval(const Complex& s, const Rat& q_value = Rat(0)) const;
    SymFunc to_symfunc() const;
    // Z at the rational monomial substitution s -> c0 + c1*s (symbolic result).
    SymFunc to_symfunc_shifted(const Rat& c1, const Rat& c0) const;

    bool has_pole_at(const Rat& s) const;
    // The denominator factor vanishing at s, if any.
    std::optional<std::string> vanishing_factor(const Rat& s) const;

    // Taylor coefficients in t around 0.
    std::vector<QScalar> series(long M) const;
    std::vector<Rat> series_rat(long M) const;  // concrete q only

    std::string str() const;

  private:
    RationalZeta() = default;
    QMode mode_;
    long n_ = 1, d_ = 1;
    Polynomial<QScalar> num_;
    std::vector<ZetaFactor> den_;
    std::string prov_;
};

// <|f|^s, W[l]> = q^(-n l - d l s) Z(s, f), valid for all s by continuation.
QScalar scaled_pairing(const RationalZeta& Z, long l, const Rat& s);
Complex scaled_pairing(const RationalZeta& Z, long l, const Complex& s, const Rat& q_value = Rat(0));
SymFunc scaled_pairing_sym(const RationalZeta& Z, long l);

// Numerical data {(N_E, n_E)} of a resolution, supplied by the user, never
// computed here.  Candidate poles are -n_E/N_E.
struct ResolutionData {
    std::vector<std::pair<long, long>> pairs;  // (N_E, n_E), both positive
};

// ---- counting ----------------------------------------------------------

// N_m = #{x mod p^m : f(x) = 0 mod p^m} by full enumeration (N_0 = 1).
Int count_zeros(const Form& f, long m);

// Same count through the homogeneity recursion
//   N_m = P_m + q^(n(d-1)) N_(m-d)   (scaled zeros x = p z),
// with primitive zeros P_m counted by Hensel bookkeeping: nonsingular
// residue classes contribute exactly p^(n-1) lifts per level, singular
// classes are lifted explicitly.
Int count_zeros_fast(const Form& f, long m);

// true iff no nonzero residue point annihilates f and its whole gradient.
bool smooth_primitive_check(const Form& f);
std::optional<std::vector<long>> singular_primitive_zero(const Form& f);

// Anisotropy certificate for nondegenerate quadratic forms, p odd: absence of
// primitive zeros mod p^3 (primitive zeros of such forms lift by Hensel, so
// the depth-3 search is conclusive).
bool anisotropy_check(const Form& h);

// The classified anisotropic families for n in {2,3,4}.
std::vector<Form> catalog_anisotropic(long n, const Int& p);

// ---- level masses ------------------------------------------------------

// a_m = vol{x in Z_p^n : v(f(x)) = m} for m <= stored depth, with an optional
// exact geometric tail induced by a validated rational zeta.  mass() extends
// an internal cache; clone the series per thread for parallel sweeps.
class LevelMassSeries {
  public:
    long stored_depth() const { return static_cast<long>(masses_.size()) - 1; }
    bool has_tail() const { return den_.has_value(); }
    const Int& prime() const { return p_; }

    Rat mass(long m);                 // exact for any m when a tail is attached
    Rat tail_mass_after(long m);      // vol{v(f) > m}, exact
    const std::vector<Rat>& stored() const { return masses_; }

  private:
    friend LevelMassSeries level_masses(const Form&, long, const std::optional<RationalZeta>&);
    Int p_;
    long n_ = 1;
    std::vector<Rat> masses_;
    std::optional<std::vector<Rat>> den_;  // tail recurrence coefficients
    std::optional<std::vector<Rat>> num_;
};

LevelMassSeries level_masses(const Form& f, long M,
                             const std::optional<RationalZeta>& Z = std::nullopt);

// Degree-M Taylor truncation of Z(s, f) in t, from counted masses.
std::vector<Rat> zeta_truncated(const Form& f, long M);

// ---- closed forms ------------------------------------------------------

// Igusa's stationary phase formula for a homogeneous f whose reduction has no
// singular primitive zero:
//   Z = ((1 - q^-n N) + (q^(-n-1) + q^-n (N-1) - q^-1) t) /
//       ((1 - q^-1 t)(1 - q^-n t^d)),     N = N_1 including the origin.
RationalZeta zeta_spf(const Form& f);
RationalZeta spf_formula(QMode mode, long n, long d, const Rat& N);

// (1 - q^-n) / (1 - q^-n t^2): the classified closed form for anisotropic
// quadratic forms, 2 <= n <= 4.
RationalZeta zeta_elliptic(long n, QMode mode);

}  // namespace pzeta
