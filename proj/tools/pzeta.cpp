// pzeta: exact local zeta functions, fundamental solutions and resolvent
// pairings for pseudo-differential operators with homogeneous-form symbols
// over Q_p.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>

#include "pzeta/green.hpp"

using namespace pzeta;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIdentityFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitAdmissibility = 3;
constexpr int kExitResource = 4;

struct JobConfig {
    long prime = 3;
    long n = 2;
    std::string form_text;
    std::string beta = "1";
    std::string lambda = "1";
    long depth = 4;
    long level = 1;
    std::string eps = "1/1000000";
    std::string zeta_json;  // optional user-supplied rational zeta
    std::string phi_text;   // optional test function "c*W[l] + ..."
    bool json = false;
};

Rat parse_rat_or_decimal(const std::string& s, const char* what) {
    // accept "a/b", integers, and decimal/scientific literals, all parsed
    // exactly ("2.5e-3" becomes 1/400)
    try {
        std::string mant = s;
        long exp10 = 0;
        auto e = s.find_first_of("eE");
        if (e != std::string::npos && s.find('/') == std::string::npos) {
            mant = s.substr(0, e);
            exp10 = std::stol(s.substr(e + 1));
        }
        auto dot = mant.find('.');
        Rat r;
        if (dot == std::string::npos) {
            r = parse_rat(mant);
        } else {
            std::string digits = mant.substr(0, dot) + mant.substr(dot + 1);
            long frac_digits = static_cast<long>(mant.size() - dot - 1);
            r = parse_rat(digits) / rat_pow(Rat(10), frac_digits);
        }
        return r * rat_pow(Rat(10), exp10);
    } catch (const std::exception&) {
        throw ArgumentError(std::string(what) + ": cannot parse \"" + s + "\"");
    }
}

std::string real_str(const Real& x, int digits = 12) { return x.str(digits); }

ordered_json zeta_to_json(const RationalZeta& z) {
    ordered_json j;
    j["q"] = z.mode().symbolic() ? std::string("q") : z.mode().p.get_str();
    j["t"] = "q^-s";
    ordered_json num = ordered_json::array();
    for (long k = 0; k <= z.num_poly().degree(); ++k) num.push_back(z.num_poly().coeff(k).str());
    j["num"] = num;
    ordered_json den = ordered_json::array();
    auto dp = z.den_poly();
    for (long k = 0; k <= dp.degree(); ++k) den.push_back(dp.coeff(k).str());
    j["den"] = den;
    ordered_json factors = ordered_json::array();
    for (const auto& f : z.den_factors())
        factors.push_back({f.sigma, rat_str(f.a), f.b, f.mult});
    j["den_factors"] = factors;
    j["provenance"] = z.provenance();
    return j;
}

RationalZeta zeta_from_json(const std::string& text, long n, long d) {
    ordered_json j = ordered_json::parse(text);
    QMode mode;
    std::string q = j.at("q").get<std::string>();
    if (q != "q") mode.p = Int(q);
    std::vector<QScalar> num;
    for (const auto& c : j.at("num")) num.push_back(QScalar(parse_rat(c.get<std::string>())));
    std::vector<ZetaFactor> factors;
    for (const auto& f : j.at("den_factors"))
        factors.push_back(ZetaFactor{f.at(0).get<int>(), parse_rat(f.at(1).get<std::string>()),
                                     f.at(2).get<long>(), f.at(3).get<long>()});
    return RationalZeta::make(mode, n, d, Polynomial<QScalar>(std::move(num)), std::move(factors),
                              "user");
}

// Closed-form resolution: stationary phase when its hypothesis holds, else
// the anisotropic table for quadratic forms, else none (series only).
std::optional<RationalZeta> resolve_zeta(const Form& f, std::string* how) {
    if (smooth_primitive_check(f)) {
        *how = "spf";
        return zeta_spf(f);
    }
    if (f.degree() == 2 && f.prime() != 2) {
        try {
            if (anisotropy_check(f)) {
                *how = "elliptic";
                return zeta_elliptic(f.dim(), QMode{f.prime()});
            }
        } catch (const DomainError&) {
            // degenerate quadratic: fall through
        }
    }
    *how = "none";
    return std::nullopt;
}

int cmd_zeta(const JobConfig& cfg) {
    Form f = Form::parse(cfg.form_text, cfg.n, Int(cfg.prime));
    auto series = zeta_truncated(f, cfg.depth);
    std::string how;
    auto closed = cfg.zeta_json.empty() ? resolve_zeta(f, &how)
                                        : std::optional<RationalZeta>(
                                              zeta_from_json(cfg.zeta_json, f.dim(), f.degree()));
    if (!cfg.zeta_json.empty()) how = "user";

    bool consistent = true;
    if (closed) {
        auto zs = closed->series_rat(cfg.depth);
        for (size_t m = 0; m < series.size(); ++m) consistent = consistent && zs[m] == series[m];
    }

    ordered_json out;
    out["form"] = f.str();
    out["prime"] = cfg.prime;
    ordered_json ser = ordered_json::array();
    for (const auto& a : series) ser.push_back(rat_str(a));
    out["series"] = ser;
    if (closed) {
        out["zeta"] = zeta_to_json(*closed);
        ordered_json poles = ordered_json::array();
        for (const auto& pole : closed->poles())
            poles.push_back({{"re_s", rat_str(pole.real_part)},
                             {"order", pole.order},
                             {"factor", pole.factor},
                             {"off_axis", pole.off_axis}});
        out["poles"] = poles;
        out["verdict"] = consistent ? "CONSISTENT" : "INCONSISTENT";
    } else {
        out["zeta"] = nullptr;
        out["verdict"] = "SERIES-ONLY";
    }
    if (cfg.json) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "form: " << f.str() << "  (p = " << cfg.prime << ", degree " << f.degree()
                  << ")\n";
        std::cout << "series in t = q^-s:";
        for (const auto& a : series) std::cout << " " << rat_str(a);
        std::cout << "\n";
        if (closed) {
            std::cout << "closed form [" << closed->provenance() << "]: " << closed->str() << "\n";
            for (const auto& pole : closed->poles())
                std::cout << "  pole: Re(s) = " << rat_str(pole.real_part) << "  order "
                          << pole.order << "  from " << pole.factor << "\n";
            std::cout << "verdict: " << (consistent ? "CONSISTENT" : "INCONSISTENT") << "\n";
        } else {
            std::cout << "no closed form available; series only\n";
        }
    }
    return consistent ? kExitOk : kExitIdentityFailure;
}

int cmd_solve(const JobConfig& cfg) {
    Form f = Form::parse(cfg.form_text, cfg.n, Int(cfg.prime));
    Rat beta = parse_rat_or_decimal(cfg.beta, "beta");
    std::string how;
    auto closed = cfg.zeta_json.empty() ? resolve_zeta(f, &how)
                                        : std::optional<RationalZeta>(
                                              zeta_from_json(cfg.zeta_json, f.dim(), f.degree()));
    if (!closed)
        throw ArgumentError("no closed-form zeta available for this form; supply one via --zeta");
    auto spec = OperatorSpec::make(f, beta, *closed);
    auto E = fundamental_solution(spec);
    auto rep = asymptotics_report(E);

    ordered_json shifts;
    bool shifts_ok = true;
    for (long l : {0L, 1L, 2L}) {
        bool zero = holomorphy_shift_check(spec, l).is_zero();
        shifts_ok = shifts_ok && zero;
        shifts["l=" + std::to_string(l)] = zero ? "0" : "nonzero";
    }

    ordered_json out;
    out["coefficient"] = E.radial.coeff.str();
    out["exponent"] = rat_str(E.radial.exponent);
    out["admissible"] = E.checks.all();
    out["checks"] = {{"beta_not_n_over_d", E.checks.beta_not_n_over_d},
                     {"no_zeta_pole_at_minus_beta", E.checks.no_zeta_pole},
                     {"zeta_nonzero_at_minus_beta", E.checks.zeta_nonzero}};
    out["holomorphy_shift"] = shifts;
    out["asymptotics"] = {{"origin_exponent", rat_str(rep.origin_exponent)},
                          {"infinity_exponent", rat_str(rep.infinity_exponent)},
                          {"nonsingular_at_origin", rep.nonsingular_at_origin}};
    if (cfg.json) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "E(x) = " << E.radial.coeff.str() << " * ||x||^" << rat_str(E.radial.exponent)
                  << "\n";
        std::cout << "admissible: yes (beta != n/d, no pole, Z(-beta) != 0)\n";
        std::cout << "holomorphy shift residuals: " << (shifts_ok ? "all zero" : "NONZERO") << "\n";
        std::cout << "asymptotics: O(||x||^" << rat_str(rep.origin_exponent) << ") at 0, O(||x||^"
                  << rat_str(rep.infinity_exponent) << ") at infinity, "
                  << (rep.nonsingular_at_origin ? "nonsingular" : "singular") << " at the origin\n";
    }
    return shifts_ok ? kExitOk : kExitIdentityFailure;
}

int cmd_green(const JobConfig& cfg) {
    Form f = Form::parse(cfg.form_text, cfg.n, Int(cfg.prime));
    Rat beta = parse_rat_or_decimal(cfg.beta, "beta");
    Rat lambda = parse_rat_or_decimal(cfg.lambda, "lambda");
    if (!(lambda > 0)) throw ArgumentError("lambda must be positive");
    Rat eps = parse_rat_or_decimal(cfg.eps, "eps");
    std::string how;
    auto closed = cfg.zeta_json.empty() ? resolve_zeta(f, &how)
                                        : std::optional<RationalZeta>(
                                              zeta_from_json(cfg.zeta_json, f.dim(), f.degree()));
    if (!closed)
        throw ArgumentError("no closed-form zeta available for this form; supply one via --zeta");
    auto spec = OperatorSpec::make(f, beta, *closed);
    auto g = GreenSpec::make(spec, lambda);

    auto exact = green_pair_exact(g, cfg.level, eps);
    ordered_json partials;
    for (long M = 0; M <= cfg.depth; ++M) {
        QScalar P = green_partial_sum(g, cfg.level, M);
        partials["M=" + std::to_string(M)] =
            P.is_rational() ? rat_str(P.rat()) : real_str(P.to_real());
    }
    QScalar bound = green_remainder_bound(g, cfg.level, cfg.depth);

    ordered_json out;
    out["exact"] = real_str(exact.value);
    out["exact_bound"] = rat_str(exact.bound);
    out["partial"] = partials;
    out["bound"] = bound.is_rational() ? rat_str(bound.rat()) : real_str(bound.to_real());
    // decay measurement over a short l-window when the guard allows
    Real guard = pow(Real(Rat(cfg.prime)), Real(-Rat(cfg.level) * f.degree() * beta));
    if (guard < Real(lambda)) {
        auto diag = remainder_diagnostic(g, cfg.level, cfg.level + 3, cfg.depth, cfg.depth);
        out["decay_exponent"] = diag.decay_exponents.front().second;
        ordered_json rows = ordered_json::array();
        for (const auto& r : diag.rows)
            rows.push_back({{"l", r.l},
                            {"M", r.M},
                            {"error", real_str(r.error)},
                            {"bound", real_str(r.bound)},
                            {"within", r.within_bound}});
        out["remainder_table"] = rows;
    }
    if (cfg.json) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "<G_lambda, W[-" << cfg.level << "]> = " << real_str(exact.value) << "  (+/- "
                  << rat_str(exact.bound) << ")\n";
        for (auto& [k, v] : partials.items())
            std::cout << "  partial " << k << ": " << v.get<std::string>() << "\n";
        if (out.contains("decay_exponent"))
            std::cout << "observed decay exponent: " << out["decay_exponent"].get<double>()
                      << "\n";
    }
    return kExitOk;
}

int cmd_verify(const JobConfig& cfg) {
    Form f = Form::parse(cfg.form_text, cfg.n, Int(cfg.prime));
    std::string how;
    auto closed = cfg.zeta_json.empty() ? resolve_zeta(f, &how)
                                        : std::optional<RationalZeta>(
                                              zeta_from_json(cfg.zeta_json, f.dim(), f.degree()));
    if (!closed)
        throw ArgumentError("no closed-form zeta available for this form; supply one via --zeta");

    ordered_json out;
    bool all_ok = true;
    auto record = [&](const std::string& name, bool ok, const std::string& detail = "") {
        all_ok = all_ok && ok;
        out[name] = ok ? "PASS" : ("FAIL" + (detail.empty() ? "" : ": " + detail));
        if (!cfg.json)
            std::cout << (ok ? "PASS  " : "FAIL  ") << name
                      << (ok || detail.empty() ? "" : "  (" + detail + ")") << "\n";
    };

    // series consistency against counted masses
    try {
        level_masses(f, cfg.depth, *closed);
        record("mass_consistency", true);
    } catch (const ValidationError& e) {
        record("mass_consistency", false, e.what());
    }

    // kernel Fourier identity
    bool kernel_ok = true;
    for (long l = -2; l <= 2; ++l) {
        auto phi = DeltaFunction::indicator(f.prime(), f.dim(), l);
        for (const Rat& a : {Rat(1, 2), Rat(1), Rat(3), Rat(-5, 3)}) {
            if (a == Rat(f.dim())) continue;
            kernel_ok = kernel_ok && riesz_fourier_residual(a, phi).is_zero();
        }
    }
    record("riesz_fourier_identity", kernel_ok);

    auto spec = OperatorSpec::make(f, Rat(1, 2), *closed);
    DeltaFunction phi = cfg.phi_text.empty()
                            ? DeltaFunction::indicator(f.prime(), f.dim(), 1)
                            : DeltaFunction::parse(cfg.phi_text, f.prime(), f.dim());
    bool factor_ok = radial_factorization_residual_sym(spec, phi).is_zero();
    for (const auto& r :
         radial_factorization_check(spec, DeltaFunction::indicator(f.prime(), f.dim(), 0), {Rat(1), Rat(2)}))
        factor_ok = factor_ok && (r.skipped || r.residual.is_zero());
    for (const auto& r : radial_factorization_check(spec, phi, {Rat(1), Rat(3)}))
        factor_ok = factor_ok && (r.skipped || r.residual.is_zero());
    record("radial_factorization", factor_ok);

    bool fe_ok = functional_equation_residual_sym(*closed, 1).is_zero();
    for (const auto& r : functional_equation_check(spec, 0, {Rat(1), Rat(2)}))
        fe_ok = fe_ok && (r.skipped || r.residual.is_zero());
    record("functional_equation", fe_ok);

    if (cfg.json) std::cout << out.dump(2) << "\n";
    return all_ok ? kExitOk : kExitIdentityFailure;
}

int cmd_catalog(const JobConfig& cfg) {
    ordered_json out = ordered_json::array();
    for (const auto& h : catalog_anisotropic(cfg.n, Int(cfg.prime))) {
        ordered_json item;
        item["form"] = h.str();
        item["anisotropic"] = anisotropy_check(h);
        item["smooth_primitive"] = smooth_primitive_check(h);
        item["zeta"] = zeta_to_json(zeta_elliptic(cfg.n, QMode{Int(cfg.prime)}));
        out.push_back(item);
        if (!cfg.json)
            std::cout << h.str() << "  anisotropic="
                      << (item["anisotropic"].get<bool>() ? "yes" : "no")
                      << "  smooth_reduction="
                      << (item["smooth_primitive"].get<bool>() ? "yes" : "no") << "\n";
    }
    if (cfg.json) std::cout << out.dump(2) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact p-adic zeta / pseudo-differential engine"};
    app.require_subcommand(1);

    JobConfig cfg;
    if (const char* env = std::getenv("PZETA_ENUM_BUDGET")) {
        try {
            set_enumeration_budget(std::stoull(env));
        } catch (const std::exception&) {
            std::cerr << "bad PZETA_ENUM_BUDGET\n";
            return kExitInputError;
        }
    }

    auto add_common = [&](CLI::App* sub, bool needs_form) {
        sub->add_option("--prime", cfg.prime, "prime p");
        sub->add_option("--n", cfg.n, "dimension");
        if (needs_form) sub->add_option("--form", cfg.form_text, "homogeneous form")->required();
        sub->add_option("--depth", cfg.depth, "series / expansion depth");
        sub->add_flag("--json", cfg.json, "machine-readable output");
        sub->add_option("--zeta", cfg.zeta_json, "user-supplied rational zeta (JSON)");
    };

    auto* zeta = app.add_subcommand("zeta", "local zeta function of a form");
    add_common(zeta, true);
    auto* solve = app.add_subcommand("solve", "fundamental solution of f(del,beta)u = g");
    add_common(solve, true);
    solve->add_option("--beta", cfg.beta, "symbol exponent");
    auto* green = app.add_subcommand("green", "resolvent pairings of f(del,beta)+lambda");
    add_common(green, true);
    green->add_option("--beta", cfg.beta, "symbol exponent");
    green->add_option("--lambda", cfg.lambda, "spectral shift, positive");
    green->add_option("--level", cfg.level, "pairing level l (ball around infinity)");
    green->add_option("--eps", cfg.eps, "target precision for the exact pairing");
    auto* verify = app.add_subcommand("verify", "run the identity suite for a form");
    add_common(verify, true);
    verify->add_option("--phi", cfg.phi_text, "test function, e.g. \"1*W[0] + -2/3*W[1]\"");
    auto* catalog = app.add_subcommand("catalog", "anisotropic quadratic forms");
    add_common(catalog, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (zeta->parsed()) return cmd_zeta(cfg);
        if (solve->parsed()) return cmd_solve(cfg);
        if (green->parsed()) return cmd_green(cfg);
        if (verify->parsed()) return cmd_verify(cfg);
        if (catalog->parsed()) return cmd_catalog(cfg);
    } catch (const AdmissibilityError& e) {
        std::cerr << "inadmissible: " << e.what() << "\n";
        return kExitAdmissibility;
    } catch (const ResourceError& e) {
        std::cerr << "resource: " << e.what() << "\n";
        return kExitResource;
    } catch (const ValidationError& e) {
        std::cerr << "validation: " << e.what() << "\n";
        return kExitInputError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
