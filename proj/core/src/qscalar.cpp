#include "pzeta/qscalar.hpp"

#include <numeric>

namespace pzeta {

namespace {

// Extended Euclid over Q[y]: returns (g, u) with u*a = g mod m, g monic = gcd.
std::pair<Polynomial<Rat>, Polynomial<Rat>> half_ext_gcd(Polynomial<Rat> a, Polynomial<Rat> m) {
    Polynomial<Rat> u0(Rat(1)), u1;
    while (!m.is_zero()) {
        auto [q, r] = Polynomial<Rat>::divmod(a, m);
        a = std::move(m);
        m = std::move(r);
        Polynomial<Rat> u2 = u0 - q * u1;
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    Rat lead = a.leading();
    return {Rat(1 / lead) * a, Rat(1 / lead) * u0};
}

Polynomial<Rat> stretch(const Polynomial<Rat>& f, long k) {
    if (k == 1 || f.is_zero()) return f;
    std::vector<Rat> out(static_cast<size_t>(f.degree()) * k + 1, Rat(0));
    for (long i = 0; i <= f.degree(); ++i) out[static_cast<size_t>(i * k)] = f.coeff(i);
    return Polynomial<Rat>(std::move(out));
}

}  // namespace

QScalar QScalar::sym_q_pow(const Rat& e) {
    QScalar r;
    if (e == 0) return QScalar(1);
    r.mode_ = Mode::symbolic;
    r.D_ = static_cast<long>(e.get_den().get_si());
    Int num = e.get_num();
    long k = num.get_si();
    auto mono = Polynomial<Rat>::monomial(Rat(1), k >= 0 ? k : -k);
    r.sym_ = k >= 0 ? RatFunc<Rat>(mono) : RatFunc<Rat>(Polynomial<Rat>(Rat(1)), mono);
    r.demote();
    return r;
}

QScalar QScalar::num_q_pow(const Int& p, const Rat& e) {
    require_prime(p);
    if (e.get_den() == 1) return QScalar(rat_pow(Rat(p), e.get_num().get_si()));
    QScalar r;
    r.mode_ = Mode::algebraic;
    r.p_ = p;
    r.D_ = static_cast<long>(e.get_den().get_si());
    long a = e.get_num().get_si();
    long q = a >= 0 ? a / r.D_ : -((-a + r.D_ - 1) / r.D_);  // floor division
    long rem = a - q * r.D_;
    r.alg_.assign(static_cast<size_t>(r.D_), Rat(0));
    r.alg_[static_cast<size_t>(rem)] = rat_pow(Rat(p), q);
    r.demote();
    return r;
}

bool QScalar::is_zero() const {
    switch (mode_) {
        case Mode::rational: return rat_ == 0;
        case Mode::symbolic: return sym_.is_zero();
        case Mode::algebraic:
            for (const auto& c : alg_)
                if (c != 0) return false;
            return true;
    }
    return true;
}

const Rat& QScalar::rat() const {
    if (mode_ != Mode::rational)
        throw ArgumentError("exact scalar is not a plain rational: " + str());
    return rat_;
}

void QScalar::promote_to(Mode m, long D, const Int& p) {
    if (mode_ != Mode::rational) throw Error("internal: promote of non-rational scalar");
    mode_ = m;
    D_ = D;
    if (m == Mode::symbolic) {
        sym_ = RatFunc<Rat>(rat_);
    } else {
        p_ = p;
        alg_.assign(static_cast<size_t>(D), Rat(0));
        alg_[0] = rat_;
    }
    rat_ = 0;
}

void QScalar::rescale(long new_D) {
    if (new_D == D_) return;
    long k = new_D / D_;
    if (mode_ == Mode::symbolic) {
        sym_ = RatFunc<Rat>(stretch(sym_.num(), k), stretch(sym_.den(), k));
    } else if (mode_ == Mode::algebraic) {
        std::vector<Rat> out(static_cast<size_t>(new_D), Rat(0));
        for (long i = 0; i < D_; ++i) out[static_cast<size_t>(i * k)] = alg_[static_cast<size_t>(i)];
        alg_ = std::move(out);
    }
    D_ = new_D;
}

void QScalar::demote() {
    if (mode_ == Mode::symbolic) {
        if (sym_.num().degree() <= 0 && sym_.den().degree() <= 0) {
            Rat v = sym_.is_zero() ? Rat(0) : sym_.num().coeff(0) / sym_.den().coeff(0);
            *this = QScalar(v);
        }
    } else if (mode_ == Mode::algebraic) {
        for (size_t i = 1; i < alg_.size(); ++i)
            if (alg_[i] != 0) return;
        *this = QScalar(alg_.empty() ? Rat(0) : alg_[0]);
    }
}

void QScalar::unify(QScalar& a, QScalar& b) {
    if (a.mode_ == Mode::rational && b.mode_ == Mode::rational) return;
    if (a.mode_ == Mode::rational) {
        a.promote_to(b.mode_, b.D_, b.p_);
    } else if (b.mode_ == Mode::rational) {
        b.promote_to(a.mode_, a.D_, a.p_);
    }
    if (a.mode_ != b.mode_ || (a.mode_ == Mode::algebraic && a.p_ != b.p_))
        throw Error("cannot mix symbolic-q and numeric-q exact scalars");
    long D = std::lcm(a.D_, b.D_);
    a.rescale(D);
    b.rescale(D);
}

QScalar QScalar::inverse() const {
    if (is_zero()) throw ArgumentError("division by zero exact scalar");
    switch (mode_) {
        case Mode::rational: return QScalar(1 / rat_);
        case Mode::symbolic: {
            QScalar r = *this;
            r.sym_ = RatFunc<Rat>(Polynomial<Rat>(Rat(1))) / sym_;
            r.demote();
            return r;
        }
        case Mode::algebraic: {
            std::vector<Rat> mod(static_cast<size_t>(D_) + 1, Rat(0));
            mod[0] = Rat(-p_);
            mod.back() = 1;
            auto [g, u] = half_ext_gcd(Polynomial<Rat>(alg_), Polynomial<Rat>(std::move(mod)));
            if (g.degree() != 0) throw Error("internal: reducible modulus in algebraic inverse");
            QScalar r = *this;
            Polynomial<Rat> inv = Rat(1 / g.coeff(0)) * u;
            r.alg_.assign(static_cast<size_t>(D_), Rat(0));
            for (long i = 0; i <= inv.degree(); ++i) r.alg_[static_cast<size_t>(i)] = inv.coeff(i);
            r.demote();
            return r;
        }
    }
    throw Error("unreachable");
}

QScalar QScalar::binop(QScalar a, QScalar b, Op op) {
    if (op == Op::div) return binop(std::move(a), b.inverse(), Op::mul);
    unify(a, b);
    switch (a.mode_) {
        case Mode::rational:
            switch (op) {
                case Op::add: return QScalar(a.rat_ + b.rat_);
                case Op::sub: return QScalar(a.rat_ - b.rat_);
                case Op::mul: return QScalar(a.rat_ * b.rat_);
                default: break;
            }
            break;
        case Mode::symbolic: {
            QScalar r = a;
            r.sym_ = op == Op::add ? a.sym_ + b.sym_
                   : op == Op::sub ? a.sym_ - b.sym_
                                   : a.sym_ * b.sym_;
            r.demote();
            return r;
        }
        case Mode::algebraic: {
            QScalar r = a;
            if (op == Op::mul) {
                std::vector<Rat> out(static_cast<size_t>(a.D_), Rat(0));
                for (long i = 0; i < a.D_; ++i) {
                    if (a.alg_[static_cast<size_t>(i)] == 0) continue;
                    for (long j = 0; j < a.D_; ++j) {
                        if (b.alg_[static_cast<size_t>(j)] == 0) continue;
                        Rat term = a.alg_[static_cast<size_t>(i)] * b.alg_[static_cast<size_t>(j)];
                        long k = i + j;
                        if (k >= a.D_) {
                            k -= a.D_;
                            term *= Rat(a.p_);
                        }
                        out[static_cast<size_t>(k)] += term;
                    }
                }
                r.alg_ = std::move(out);
            } else {
                for (long i = 0; i < a.D_; ++i)
                    r.alg_[static_cast<size_t>(i)] =
                        op == Op::add
                            ? Rat(a.alg_[static_cast<size_t>(i)] + b.alg_[static_cast<size_t>(i)])
                            : Rat(a.alg_[static_cast<size_t>(i)] - b.alg_[static_cast<size_t>(i)]);
            }
            r.demote();
            return r;
        }
    }
    throw Error("unreachable");
}

QScalar QScalar::pow(long e) const {
    if (e == 0) return QScalar(1);
    QScalar base = e < 0 ? inverse() : *this;
    unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    QScalar acc(1);
    while (n) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

Real QScalar::to_real(const Rat& q_value, long prec) const {
    switch (mode_) {
        case Mode::rational: return Real(rat_, prec);
        case Mode::symbolic: {
            if (q_value <= 0)
                throw ArgumentError("numeric evaluation of a symbolic scalar needs q > 0");
            Real y = pzeta::pow(Real(q_value, prec), Real(Rat(1, D_), prec));
            Real num(0L, prec), den(0L, prec);
            for (long i = sym_.num().degree(); i >= 0; --i)
                num = num * y + Real(sym_.num().coeff(i), prec);
            for (long i = sym_.den().degree(); i >= 0; --i)
                den = den * y + Real(sym_.den().coeff(i), prec);
            return num / den;
        }
        case Mode::algebraic: {
            Real y = pzeta::pow(Real(Rat(p_), prec), Real(Rat(1, D_), prec));
            Real acc(0L, prec);
            for (size_t i = alg_.size(); i-- > 0;) acc = acc * y + Real(alg_[i], prec);
            return acc;
        }
    }
    throw Error("unreachable");
}

std::string QScalar::str() const {
    switch (mode_) {
        case Mode::rational: return rat_str(rat_);
        case Mode::symbolic: {
            auto poly_str = [&](const Polynomial<Rat>& f) {
                std::string s;
                for (long i = f.degree(); i >= 0; --i) {
                    if (f.coeff(i) == 0) continue;
                    if (!s.empty()) s += " + ";
                    s += rat_str(f.coeff(i));
                    if (i != 0) {
                        s += "*q^";
                        Rat e(i, D_);
                        s += rat_str(e);
                    }
                }
                return s.empty() ? std::string("0") : s;
            };
            if (sym_.is_polynomial()) return poly_str(sym_.num());
            return "(" + poly_str(sym_.num()) + ")/(" + poly_str(sym_.den()) + ")";
        }
        case Mode::algebraic: {
            std::string s;
            for (size_t i = 0; i < alg_.size(); ++i) {
                if (alg_[i] == 0) continue;
                if (!s.empty()) s += " + ";
                s += rat_str(alg_[i]);
                if (i != 0) s += "*" + p_.get_str() + "^(" + std::to_string(i) + "/" + std::to_string(D_) + ")";
            }
            return s.empty() ? std::string("0") : s;
        }
    }
    return "?";
}

}  // namespace pzeta
