#include "pzeta/green.hpp"

#include <cmath>

namespace pzeta {

GreenSpec GreenSpec::make(OperatorSpec op, Rat lambda, long mass_depth) {
    if (!(lambda > 0)) throw ArgumentError("lambda must be positive");
    LevelMassSeries masses = level_masses(op.form(), mass_depth, op.zeta());
    return GreenSpec(std::move(op), std::move(lambda), std::move(masses));
}

GreenSpec GreenSpec::make_with_masses(OperatorSpec op, Rat lambda, LevelMassSeries masses) {
    if (!(lambda > 0)) throw ArgumentError("lambda must be positive");
    return GreenSpec(std::move(op), std::move(lambda), std::move(masses));
}

GreenValue green_pair_exact(GreenSpec& spec, long l, const Rat& eps) {
    if (l < 0) throw ArgumentError("pairing level must be >= 0 (balls around infinity)");
    if (!(eps > 0)) throw ArgumentError("target precision must be positive");
    const Rat& lambda = spec.lambda();
    LevelMassSeries& masses = spec.masses();
    if (!masses.has_tail()) {
        Rat floor = masses.tail_mass_after(masses.stored_depth()) / lambda;
        if (eps < floor)
            throw PrecisionError("requested eps " + rat_str(eps) +
                                 " is below the truncation floor " + rat_str(floor) +
                                 " (no exact tail attached)");
    }
    Rat q(spec.op().form().prime());
    Rat dbeta = Rat(spec.op().degree()) * spec.op().beta();
    Real qr(q), lam(lambda);
    Real scale = pow(qr, Real(-Rat(l) * dbeta));

    Real sum(0L);
    long m = 0;
    Rat remainder;
    for (;; ++m) {
        remainder = masses.tail_mass_after(m - 1) / lambda;
        if (m > 0 && remainder < eps) break;
        Rat a = masses.mass(m);
        if (a != 0) {
            Real denom = scale * pow(qr, Real(-spec.op().beta() * m)) + lam;
            sum += Real(a) / denom;
        }
        if (m > 4096) throw PrecisionError("mass tail is not decaying; is lambda sane?");
    }
    return GreenValue{sum, remainder, m};
}

namespace {

QScalar zeta_at_beta_m(const GreenSpec& spec, long m) {
    return spec.op().zeta().eval(spec.op().beta() * m);
}

}  // namespace

GreenExpansion green_expansion(const GreenSpec& spec, long M) {
    if (M < 0) throw ArgumentError("negative expansion order");
    const Rat& lambda = spec.lambda();
    long n = spec.op().dim(), d = spec.op().degree();
    QMode mode = spec.op().zeta().mode();
    GreenExpansion out;
    out.lambda = lambda;
    out.beta = spec.op().beta();
    out.n = n;
    out.d = d;
    QScalar vol_factor = QScalar(1) - mode.q_pow(Rat(-n));
    for (long m = 1; m <= M; ++m) {
        QScalar num = QScalar(1) - mode.q_pow(Rat(d * m) * out.beta);
        QScalar c = num * zeta_at_beta_m(spec, m) / vol_factor / QScalar(rat_pow(lambda, m + 1));
        if (m % 2 == 0) c = -c;  // (-1)^(m-1)
        out.coeffs.push_back(std::move(c));
    }
    return out;
}

QScalar green_partial_sum(const GreenSpec& spec, long l, long M) {
    const Rat& lambda = spec.lambda();
    long d = spec.op().degree();
    QMode mode = spec.op().zeta().mode();
    QScalar sum = QScalar(1) / QScalar(lambda);  // m = 0 delta term
    for (long m = 1; m <= M; ++m) {
        QScalar term = mode.q_pow(Rat(-l * d * m) * spec.op().beta()) * zeta_at_beta_m(spec, m) /
                       QScalar(rat_pow(lambda, m + 1));
        if (m % 2 == 1) term = -term;  // (-1)^m
        sum = sum + term;
    }
    return sum;
}

QScalar green_remainder_bound(const GreenSpec& spec, long l, long M) {
    long d = spec.op().degree();
    QMode mode = spec.op().zeta().mode();
    return mode.q_pow(Rat(-l * d * (M + 1)) * spec.op().beta()) * zeta_at_beta_m(spec, M + 1) /
           QScalar(rat_pow(spec.lambda(), M + 2));
}

RemainderDiagnostic remainder_diagnostic(GreenSpec& spec, long l_min, long l_max, long M_min,
                                         long M_max) {
    if (l_min > l_max || M_min > M_max) throw ArgumentError("empty diagnostic range");
    Rat q(spec.op().form().prime());
    Rat dbeta = Rat(spec.op().degree()) * spec.op().beta();
    // convergence guard: q^(-l d beta) < lambda on the whole range
    Real worst = pow(Real(q), Real(-Rat(l_min) * dbeta));
    if (!(worst < Real(spec.lambda())))
        throw DomainError("expansion requires q^(-l d beta) < lambda (violated at l = " +
                          std::to_string(l_min) + ")");

    RemainderDiagnostic out;
    Real logq = log(Real(q));
    for (long M = M_min; M <= M_max; ++M) {
        std::vector<double> ls, logerrs;
        for (long l = l_min; l <= l_max; ++l) {
            QScalar bound = green_remainder_bound(spec, l, M);
            Real boundr = bound.to_real();
            // aim two orders below the bound we want to certify against
            Rat eps = Rat(1, 1000000) * Rat(1, 1000000);
            Real target = boundr / Real(10000L);
            while (Real(eps) > target && eps > Rat(1, Int("1" + std::string(55, '0'))))
                eps /= 1000000;
            GreenValue exact = green_pair_exact(spec, l, eps);
            Real partial = green_partial_sum(spec, l, M).to_real();
            Real err = abs(exact.value - partial);
            RemainderRow row{l,       M,   exact.value,
                             partial, err, boundr,
                             err <= boundr + Real(exact.bound)};
            out.rows.push_back(row);
            if (err.sign() > 0) {
                ls.push_back(static_cast<double>(l));
                logerrs.push_back((log(err) / logq).to_double());
            }
        }
        // least-squares slope of log_q(error) against l
        double exponent = 0.0;
        if (ls.size() >= 2) {
            double mx = 0, my = 0;
            for (size_t i = 0; i < ls.size(); ++i) {
                mx += ls[i];
                my += logerrs[i];
            }
            mx /= static_cast<double>(ls.size());
            my /= static_cast<double>(ls.size());
            double sxy = 0, sxx = 0;
            for (size_t i = 0; i < ls.size(); ++i) {
                sxy += (ls[i] - mx) * (logerrs[i] - my);
                sxx += (ls[i] - mx) * (ls[i] - mx);
            }
            exponent = -sxy / sxx;
        }
        out.decay_exponents.emplace_back(M, exponent);
    }
    return out;
}

}  // namespace pzeta
