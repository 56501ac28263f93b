#pragma once

#include "pzeta/pdo.hpp"

namespace pzeta {

// (f(del, beta) + lambda) u = g: everything needed to evaluate the resolvent
// kernel pairings exactly: the operator, lambda > 0, and the level masses of
// f with their exact geometric tail.
class GreenSpec {
  public:
    // mass_depth: how many masses to count directly before the tail
    // recurrence takes over (they are also the validation window for Z).
    static GreenSpec make(OperatorSpec op, Rat lambda, long mass_depth = 8);
    // Assemble from precomputed masses (possibly without a tail; exact
    // pairings are then limited by the truncation floor).
    static GreenSpec make_with_masses(OperatorSpec op, Rat lambda, LevelMassSeries masses);

    const OperatorSpec& op() const { return op_; }
    const Rat& lambda() const { return lambda_; }
    LevelMassSeries& masses() { return masses_; }

  private:
    GreenSpec(OperatorSpec op, Rat lambda, LevelMassSeries masses)
        : op_(std::move(op)), lambda_(std::move(lambda)), masses_(std::move(masses)) {}
    OperatorSpec op_;
    Rat lambda_;
    LevelMassSeries masses_;
};

struct GreenValue {
    Real value;
    Rat bound;   // certified remainder bound actually achieved (< requested eps)
    long terms;  // number of mass levels summed
};

// <G_lambda, W[-l]> = sum_m a_m / (q^(-l d beta) q^(-beta m) + lambda),
// summed with the exact tail until the certified remainder (residual mass
// over lambda) falls below eps.
GreenValue green_pair_exact(GreenSpec& spec, long l, const Rat& eps);

// The expansion of the resolvent kernel at infinity.  `coeffs[m-1]` is the
// coefficient printed for the radial term ||x||^(-d beta m - n),
//   c_m = (-1)^(m-1) (1 - q^(d beta m)) Z(beta m) / ((1 - q^-n) lambda^(m+1));
// the paired partial sums below carry the m = 0 delta term 1/lambda and the
// alternating signs that make them converge to the exact pairing.
struct GreenExpansion {
    std::vector<QScalar> coeffs;  // m = 1..M
    Rat lambda;
    Rat beta;
    long n = 1, d = 1;
};

GreenExpansion green_expansion(const GreenSpec& spec, long M);

// P(l, M) = 1/lambda + sum_{m=1..M} (-1)^m q^(-l d beta m) Z(beta m) / lambda^(m+1).
QScalar green_partial_sum(const GreenSpec& spec, long l, long M);

// R(l, M) = q^(-l d beta (M+1)) Z(beta (M+1)) / lambda^(M+2): the first
// omitted term, an upper bound for |exact - P(l, M)| under the convergence
// guard q^(-l d beta) < lambda.
QScalar green_remainder_bound(const GreenSpec& spec, long l, long M);

struct RemainderRow {
    long l, M;
    Real exact;
    Real partial;
    Real error;
    Real bound;
    bool within_bound;
};

struct RemainderDiagnostic {
    std::vector<RemainderRow> rows;
    // least-squares decay exponent of the error in l, one entry per M;
    // should match d*beta*(M+1)
    std::vector<std::pair<long, double>> decay_exponents;
};

RemainderDiagnostic remainder_diagnostic(GreenSpec& spec, long l_min, long l_max, long M_min,
                                         long M_max);

}  // namespace pzeta
