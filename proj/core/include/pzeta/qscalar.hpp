#pragma once

#include <string>
#include <vector>

#include "pzeta/numeric.hpp"
#include "pzeta/poly.hpp"
#include "pzeta/rational.hpp"

namespace pzeta {

// Exact scalar in the field Q(q^(1/D)).
//
// Three representations, unified under arithmetic:
//   rational   -- a plain rational number (no q present);
//   symbolic   -- a rational function in y = q^(1/D) with q an indeterminate;
//   algebraic  -- an element of Q[y]/(y^D - p) for a concrete prime q = p,
//                 i.e. exact arithmetic with fractional powers of p.
// y^D - p is irreducible over Q (Eisenstein at p), so the algebraic mode is a
// field.  Values reduce to the rational mode whenever possible, which makes
// cross-mode equality behave as expected.  Symbolic and algebraic values must
// not be mixed; doing so is a programming error and throws.
class QScalar {
  public:
    QScalar() : rat_(0) {}
    QScalar(long v) : rat_(v) {}          // NOLINT: implicit by design
    QScalar(const Rat& v) : rat_(v) {}    // NOLINT
    QScalar(const Int& v) : rat_(Rat(v)) {}

    // q^e with q symbolic.
    static QScalar sym_q_pow(const Rat& e);
    // p^e for a concrete prime p; exact rational when e is an integer.
    static QScalar num_q_pow(const Int& p, const Rat& e);
    // q^e in the given mode: symbolic when p == 0, else concrete.
    static QScalar q_pow(const Int& p, const Rat& e) {
        return p == 0 ? sym_q_pow(e) : num_q_pow(p, e);
    }

    bool is_rational() const { return mode_ == Mode::rational; }
    bool is_symbolic() const { return mode_ == Mode::symbolic; }
    bool is_zero() const;
    const Rat& rat() const;  // throws unless rational

    friend QScalar operator+(const QScalar& a, const QScalar& b) { return binop(a, b, Op::add); }
    friend QScalar operator-(const QScalar& a, const QScalar& b) { return binop(a, b, Op::sub); }
    friend QScalar operator*(const QScalar& a, const QScalar& b) { return binop(a, b, Op::mul); }
    friend QScalar operator/(const QScalar& a, const QScalar& b) { return binop(a, b, Op::div); }
    QScalar operator-() const { return QScalar(Rat(-1)) * *this; }
    friend bool operator==(const QScalar& a, const QScalar& b) { return (a - b).is_zero(); }
    friend bool operator!=(const QScalar& a, const QScalar& b) { return !(a == b); }

    QScalar pow(long e) const;

    // Numeric value; symbolic values need a concrete q supplied.
    Real to_real(const Rat& q_value = Rat(0), long prec = 0) const;

    std::string str() const;

  private:
    enum class Mode { rational, symbolic, algebraic };
    enum class Op { add, sub, mul, div };

    static QScalar binop(QScalar a, QScalar b, Op op);
    static void unify(QScalar& a, QScalar& b);
    void promote_to(Mode m, long D, const Int& p);
    void rescale(long new_D);
    void demote();
    QScalar inverse() const;

    Mode mode_ = Mode::rational;
    Rat rat_;                 // rational mode
    long D_ = 1;              // exponent denominator (symbolic/algebraic)
    RatFunc<Rat> sym_;        // symbolic mode: element of Q(y)
    Int p_ = 0;               // algebraic mode: the concrete prime
    std::vector<Rat> alg_;    // algebraic mode: coeffs of 1, y, ..., y^(D-1)
};

inline bool fe_is_zero(const QScalar& x) { return x.is_zero(); }
inline QScalar fe_one(const QScalar&) { return QScalar(1); }

}  // namespace pzeta
