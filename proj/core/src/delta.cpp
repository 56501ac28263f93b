#include "pzeta/delta.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace pzeta {

DeltaFunction DeltaFunction::indicator(const Int& p, long n, long level, const Rat& coeff) {
    DeltaFunction f(p, n);
    f.add_term(level, coeff);
    return f;
}

void DeltaFunction::add_term(long level, const Rat& coeff) {
    if (coeff == 0) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), level,
                               [](const Term& t, long l) { return t.level < l; });
    if (it != terms_.end() && it->level == level) {
        it->coeff += coeff;
        if (it->coeff == 0) terms_.erase(it);
    } else {
        terms_.insert(it, Term{level, coeff});
    }
}

bool DeltaFunction::in_delta0() const {
    return terms_.empty() || terms_.front().level >= 0;
}

bool DeltaFunction::in_delta_inf() const {
    return terms_.empty() || terms_.back().level <= 0;
}

DeltaFunction operator+(const DeltaFunction& a, const DeltaFunction& b) {
    if (a.p_ != b.p_ || a.n_ != b.n_) throw ArgumentError("mixing incompatible Delta spaces");
    DeltaFunction r = a;
    for (const auto& t : b.terms_) r.add_term(t.level, t.coeff);
    return r;
}

DeltaFunction operator-(const DeltaFunction& a, const DeltaFunction& b) {
    return a + (Rat(-1) * b);
}

DeltaFunction operator*(const Rat& c, const DeltaFunction& a) {
    DeltaFunction r(a.p_, a.n_);
    if (c == 0) return r;
    r.terms_ = a.terms_;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
}

DeltaFunction DeltaFunction::fourier() const {
    DeltaFunction r(p_, n_);
    for (const auto& t : terms_)
        r.add_term(-t.level, t.coeff * rat_pow(Rat(p_), -n_ * t.level));
    return r;
}

Rat DeltaFunction::integrate() const {
    Rat s(0);
    for (const auto& t : terms_) s += t.coeff * rat_pow(Rat(p_), -n_ * t.level);
    return s;
}

DeltaFunction DeltaFunction::convolve(const DeltaFunction& other) const {
    if (p_ != other.p_ || n_ != other.n_) throw ArgumentError("mixing incompatible Delta spaces");
    DeltaFunction r(p_, n_);
    for (const auto& s : terms_)
        for (const auto& t : other.terms_)
            r.add_term(std::min(s.level, t.level),
                       s.coeff * t.coeff * rat_pow(Rat(p_), -n_ * std::max(s.level, t.level)));
    return r;
}

DeltaFunction DeltaFunction::pointwise_product(const DeltaFunction& other) const {
    if (p_ != other.p_ || n_ != other.n_) throw ArgumentError("mixing incompatible Delta spaces");
    DeltaFunction r(p_, n_);
    for (const auto& s : terms_)
        for (const auto& t : other.terms_)
            r.add_term(std::max(s.level, t.level), s.coeff * t.coeff);
    return r;
}

Rat DeltaFunction::value_at_zero() const {
    Rat s(0);
    for (const auto& t : terms_) s += t.coeff;
    return s;
}

Rat DeltaFunction::eval(const PAdicVector& x) const {
    if (x.prime() != p_ || x.dim() != n_) throw ArgumentError("point outside this Delta space");
    auto mv = x.min_valuation();
    Rat s(0);
    for (const auto& t : terms_)
        if (!mv || *mv >= t.level) s += t.coeff;
    return s;
}

std::string DeltaFunction::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < terms_.size(); ++i) {
        if (i) out += " + ";
        out += rat_str(terms_[i].coeff) + "*W[" + std::to_string(terms_[i].level) + "]";
    }
    return out;
}

DeltaFunction DeltaFunction::parse(const std::string& text, const Int& p, long n) {
    DeltaFunction r(p, n);
    std::string s = text;
    std::erase(s, ' ');
    if (s.empty() || s == "0") return r;
    size_t pos = 0;
    int sign = 1;
    if (s[0] == '+' || s[0] == '-') {
        sign = s[0] == '-' ? -1 : 1;
        pos = 1;
    }
    while (pos < s.size()) {
        size_t star = s.find("*W[", pos);
        if (star == std::string::npos) throw ArgumentError("expected c*W[l] near \"" + s.substr(pos) + "\"");
        Rat coeff = parse_rat(s.substr(pos, star - pos)) * sign;
        size_t close = s.find(']', star);
        if (close == std::string::npos) throw ArgumentError("unterminated W[..] in \"" + text + "\"");
        long level = 0;
        try {
            level = std::stol(s.substr(star + 3, close - star - 3));
        } catch (const std::exception&) {
            throw ArgumentError("bad level in \"" + text + "\"");
        }
        r.add_term(level, coeff);
        pos = close + 1;
        if (pos == s.size()) break;
        if (s[pos] == '+') sign = 1;
        else if (s[pos] == '-') sign = -1;
        else throw ArgumentError("expected + or - near \"" + s.substr(pos) + "\"");
        ++pos;
    }
    return r;
}

namespace {

// Shell sum over one ball: <||x||^a, W[l]> for concrete q.
QScalar shell_sum(const Int& p, long n, long l, const Rat& a) {
    QScalar qa = QScalar::num_q_pow(p, Rat(-l) * (a + n));
    QScalar one_minus_qn = QScalar(1) - QScalar::num_q_pow(p, Rat(-n));
    QScalar den = QScalar(1) - QScalar::num_q_pow(p, -(a + n));
    return qa * one_minus_qn / den;
}

}  // namespace

QScalar pair_radial(const Rat& a, const DeltaFunction& phi, bool continued) {
    long n = phi.dim();
    if (a == Rat(-n))
        throw PoleError("radial pairing at the pole a = -n", "(1 - q^-(n+a))");
    if (!continued && a + n <= 0)
        throw PoleError("radial pairing diverges for n + a <= 0 (continuation available on request)",
                        "(1 - q^-(n+a))");
    QScalar s(0);
    for (const auto& t : phi.terms())
        s = s + QScalar(t.coeff) * shell_sum(phi.prime(), n, t.level, a);
    return s;
}

SymFunc pair_radial_sym(const Rat& a1, const Rat& a0, const DeltaFunction& phi) {
    QMode mode{phi.prime()};
    long n = phi.dim();
    SymFunc one_minus_qn = SymFunc(mode, QScalar(1) - mode.q_pow(Rat(-n)));
    // 1 - q^(-n-a(s))
    SymFunc den = SymFunc(mode, QScalar(1)) - SymFunc::exp_affine(mode, -a1, Rat(-n) - a0);
    SymFunc s(mode, QScalar(0));
    for (const auto& t : phi.terms()) {
        SymFunc shell = SymFunc::exp_affine(mode, Rat(-t.level) * a1, Rat(-t.level) * (a0 + n));
        s = s + SymFunc(mode, QScalar(t.coeff)) * shell;
    }
    return s * one_minus_qn / den;
}

Complex pair_radial(const Complex& a, const DeltaFunction& phi, bool continued) {
    Rat q(phi.prime());
    long n = phi.dim();
    Complex na = a + Complex(Rat(n));
    Complex w = pow_complex(q, -na);
    Real tol("1e-20");
    if (abs(w - Complex(Rat(1))) < tol)
        throw PoleError("radial pairing at the pole lattice a = -n (mod 2*pi*i/log q)",
                        "(1 - q^-(n+a))");
    if (!continued && !(na.real() > Real(0L)))
        throw PoleError("radial pairing diverges for Re(n + a) <= 0 (continuation available)",
                        "(1 - q^-(n+a))");
    Complex one(Rat(1));
    Complex qn = Complex(rat_pow(q, -n));
    Complex s;
    for (const auto& t : phi.terms()) {
        Complex shell = pow_complex(q, Complex(Real(Rat(-t.level)) * na.real(),
                                               Real(Rat(-t.level)) * na.imag()));
        s += Complex(t.coeff) * shell;
    }
    return s * (one - qn) / (one - w);
}

}  // namespace pzeta
