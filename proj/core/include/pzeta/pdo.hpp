#pragma once

#include <optional>

#include "pzeta/delta.hpp"
#include "pzeta/riesz.hpp"
#include "pzeta/zeta.hpp"

namespace pzeta {

// A pseudo-differential operator with symbol |f|^beta, together with the
// rational zeta function it acts through.
class OperatorSpec {
  public:
    // validate_depth > 0 additionally checks Z against counted level masses
    // to that depth (exact, and expensive for large primes).
    static OperatorSpec make(Form f, Rat beta, RationalZeta Z, long validate_depth = 0);

    const Form& form() const { return f_; }
    const Rat& beta() const { return beta_; }
    const RationalZeta& zeta() const { return Z_; }
    long dim() const { return f_.dim(); }
    long degree() const { return f_.degree(); }

  private:
    OperatorSpec(Form f, Rat beta, RationalZeta Z)
        : f_(std::move(f)), beta_(std::move(beta)), Z_(std::move(Z)) {}
    Form f_;
    Rat beta_;
    RationalZeta Z_;
};

struct AdmissibilityRecord {
    bool beta_not_n_over_d = false;
    bool no_zeta_pole = false;
    bool zeta_nonzero = false;
    std::optional<bool> resolution_ok;  // only when ResolutionData was supplied
    bool all() const {
        return beta_not_n_over_d && no_zeta_pole && zeta_nonzero &&
               resolution_ok.value_or(true);
    }
};

// E(x) = coeff * ||x||^(d beta - n), the convolution kernel inverting the
// operator on ball-indicator sources.
struct FundamentalSolution {
    RadialPower radial;
    AdmissibilityRecord checks;
    Rat beta;
    long n = 1, d = 1;
};

struct AsymptoticsReport {
    Rat origin_exponent;    // d beta - n
    Rat infinity_exponent;  // -d beta
    bool nonsingular_at_origin = false;
};

struct OperatorValue {
    Complex value;
    Real bound;        // certified bound on the dropped tail
    long depth_used;   // enumeration depth
};

// f(del, beta) Phi at the point x: exact character sums over the level sets
// {v(f) = m} for m <= M plus a certified tail bound
// q^(-beta (M+1)) vol{v(f) > M}.
OperatorValue apply_operator(const OperatorSpec& spec, const DeltaFunction& phi,
                             const PAdicVector& x, long M);

// Confirms that <|f|^(s+beta), W[l]> is pole-free at s = -beta and returns its
// value there minus the volume q^(-n l); exact zero when the shifted symbol
// degenerates to the identity on the ball.  Throws AdmissibilityError when
// Z has a pole at s = -beta.
QScalar holomorphy_shift_check(const OperatorSpec& spec, long l);

FundamentalSolution fundamental_solution(const OperatorSpec& spec,
                                         const std::optional<ResolutionData>& res = std::nullopt);

// Closed form for anisotropic quadratic symbols:
//   coeff = (1 - q^(-2 beta)) / (1 - q^(-n + 2 beta)),  exponent 2 beta - n.
FundamentalSolution elliptic_fundamental_solution(long n, const Rat& beta, QMode mode);

AsymptoticsReport asymptotics_report(const FundamentalSolution& E);

// One sample of an identity check; skipped samples carry the reason.
struct IdentitySample {
    Rat s;
    bool skipped = false;
    std::string reason;
    QScalar residual;
};
struct IdentitySampleC {
    Complex s;
    bool skipped = false;
    std::string reason;
    Complex residual;
};

// LHS - RHS of
//   <|f|^s, W[l]> = (Z(s)/Z(-s-n/d)) <|f|^(-s-n/d), F W[l]>.
std::vector<IdentitySample> functional_equation_check(const OperatorSpec& spec, long l,
                                                      const std::vector<Rat>& samples);
std::vector<IdentitySampleC> functional_equation_check(const OperatorSpec& spec, long l,
                                                       const std::vector<Complex>& samples);
// The same identity as a symbolic function of s (zero iff it holds).
SymFunc functional_equation_residual_sym(const RationalZeta& Z, long l);

// LHS - RHS of
//   <|f|^s, Phi> = ((1 - q^(-n-ds))/(1 - q^(-n))) Z(s) <||x||^(ds), Phi>.
std::vector<IdentitySample> radial_factorization_check(const OperatorSpec& spec,
                                                       const DeltaFunction& phi,
                                                       const std::vector<Rat>& samples);
std::vector<IdentitySampleC> radial_factorization_check(const OperatorSpec& spec,
                                                        const DeltaFunction& phi,
                                                        const std::vector<Complex>& samples);
SymFunc radial_factorization_residual_sym(const OperatorSpec& spec, const DeltaFunction& phi);

}  // namespace pzeta
