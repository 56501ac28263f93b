#pragma once

#include <span>
#include <string>
#include <vector>

#include "pzeta/rational.hpp"

namespace pzeta {

// Homogeneous integer-coefficient polynomial in variables x1..xn, kept in
// graded-lexicographic canonical form.  The prime records the evaluation
// context (all counting happens over Z_p).
class Form {
  public:
    struct Monomial {
        std::vector<unsigned> exps;  // one exponent per variable, total = degree
        Int coeff;                   // nonzero
    };

    // Grammar: form := term (('+'|'-') term)*
    //          term := [int '*']? var ('^' uint)? ('*' var ('^' uint)?)*
    // with variables x1..xn.  Homogeneity is enforced; the degree is inferred.
    static Form parse(const std::string& text, long n, const Int& p);
    static Form from_monomials(std::vector<Monomial> monos, long n, const Int& p);

    long dim() const { return n_; }
    long degree() const { return d_; }
    const Int& prime() const { return p_; }
    const std::vector<Monomial>& monomials() const { return monos_; }

    // Not all coefficients divisible by p.
    bool primitive() const;

    // Value mod m; m must stay below 2^31 so products fit in int64.
    long eval_mod(std::span<const long> x, long m) const;
    std::vector<long> gradient_mod(std::span<const long> x, long m) const;

    Int eval_int(std::span<const Int> x) const;

    std::string str() const;

  private:
    Form() = default;
    void canonicalize();

    long n_ = 0;
    long d_ = 0;
    Int p_;
    std::vector<Monomial> monos_;
};

inline long pow_mod(long base, unsigned e, long m) {
    long r = 1 % m;
    base %= m;
    if (base < 0) base += m;
    while (e) {
        if (e & 1) r = (r * base) % m;
        base = (base * base) % m;
        e >>= 1;
    }
    return r;
}

}  // namespace pzeta
