#include "pzeta/form.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace pzeta {

namespace {

struct Lexer {
    std::string s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    // unsigned integer literal
    unsigned long integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw ArgumentError("expected an integer at \"" + s.substr(start) + "\"");
        return std::stoul(s.substr(start, pos - start));
    }
    // variable xk, 1-based index
    long variable(long n) {
        skip_ws();
        if (peek() != 'x') throw ArgumentError("expected a variable at \"" + s.substr(pos) + "\"");
        ++pos;
        long k = static_cast<long>(integer());
        if (k < 1 || k > n)
            throw ArgumentError("unknown variable x" + std::to_string(k) + " (dimension " +
                                std::to_string(n) + ")");
        return k - 1;
    }
};

std::string monomial_str(const Form::Monomial& m) {
    std::string vars;
    for (size_t i = 0; i < m.exps.size(); ++i) {
        if (m.exps[i] == 0) continue;
        if (!vars.empty()) vars += "*";
        vars += "x" + std::to_string(i + 1);
        if (m.exps[i] > 1) vars += "^" + std::to_string(m.exps[i]);
    }
    if (vars.empty()) return m.coeff.get_str();
    if (m.coeff == 1) return vars;
    if (m.coeff == -1) return "-" + vars;
    return m.coeff.get_str() + "*" + vars;
}

}  // namespace

Form Form::parse(const std::string& text, long n, const Int& p) {
    require_prime(p);
    if (n < 1) throw ArgumentError("dimension must be >= 1");
    Lexer lex{text};
    std::vector<Monomial> monos;
    int sign = 1;
    if (lex.accept('-')) sign = -1;
    else lex.accept('+');
    for (;;) {
        Monomial m;
        m.exps.assign(static_cast<size_t>(n), 0);
        m.coeff = sign;
        if (std::isdigit(static_cast<unsigned char>(lex.peek()))) {
            m.coeff = sign * Int(static_cast<unsigned long>(lex.integer()));
            if (!lex.accept('*'))
                throw ArgumentError("expected '*' after coefficient in \"" + text + "\"");
        }
        for (;;) {
            long var = lex.variable(n);
            unsigned e = 1;
            if (lex.accept('^')) e = static_cast<unsigned>(lex.integer());
            m.exps[static_cast<size_t>(var)] += e;
            if (!lex.accept('*')) break;
        }
        monos.push_back(std::move(m));
        if (lex.eof()) break;
        if (lex.accept('+')) sign = 1;
        else if (lex.accept('-')) sign = -1;
        else throw ArgumentError("expected '+' or '-' at \"" + lex.s.substr(lex.pos) + "\"");
    }
    return from_monomials(std::move(monos), n, p);
}

Form Form::from_monomials(std::vector<Monomial> monos, long n, const Int& p) {
    require_prime(p);
    Form f;
    f.n_ = n;
    f.p_ = p;
    f.monos_ = std::move(monos);
    f.canonicalize();
    return f;
}

void Form::canonicalize() {
    // merge equal exponent vectors
    std::map<std::vector<unsigned>, Int, std::greater<>> merged;
    for (auto& m : monos_) {
        if (static_cast<long>(m.exps.size()) != n_)
            throw ArgumentError("monomial arity mismatch");
        merged[m.exps] += m.coeff;
    }
    monos_.clear();
    for (auto& [exps, coeff] : merged)
        if (coeff != 0) monos_.push_back(Monomial{exps, coeff});
    if (monos_.empty()) throw ArgumentError("the zero polynomial is not a form");

    auto total = [](const Monomial& m) {
        long t = 0;
        for (unsigned e : m.exps) t += e;
        return t;
    };
    d_ = total(monos_.front());
    for (const auto& m : monos_) {
        if (total(m) != d_) {
            std::string offending = monomial_str(monos_.front()) + " (degree " +
                                    std::to_string(d_) + ") vs " + monomial_str(m) +
                                    " (degree " + std::to_string(total(m)) + ")";
            throw HomogeneityError("polynomial is not homogeneous: " + offending, offending);
        }
    }
    if (d_ == 0) throw ArgumentError("constant polynomials are not admitted");
}

bool Form::primitive() const {
    for (const auto& m : monos_)
        if (mod_reduce(m.coeff, p_) != 0) return true;
    return false;
}

long Form::eval_mod(std::span<const long> x, long m) const {
    if (static_cast<long>(x.size()) != n_) throw ArgumentError("evaluation arity mismatch");
    if (m < 2 || m > (1L << 31)) throw ArgumentError("modulus out of the int64-safe range");
    long acc = 0;
    for (const auto& mono : monos_) {
        long term = static_cast<long>(mpz_fdiv_ui(mono.coeff.get_mpz_t(), static_cast<unsigned long>(m)));
        for (size_t i = 0; i < mono.exps.size(); ++i)
            if (mono.exps[i]) term = (term * pow_mod(x[i], mono.exps[i], m)) % m;
        acc = (acc + term) % m;
    }
    return acc;
}

std::vector<long> Form::gradient_mod(std::span<const long> x, long m) const {
    if (static_cast<long>(x.size()) != n_) throw ArgumentError("evaluation arity mismatch");
    std::vector<long> g(static_cast<size_t>(n_), 0);
    for (const auto& mono : monos_) {
        long base = static_cast<long>(mpz_fdiv_ui(mono.coeff.get_mpz_t(), static_cast<unsigned long>(m)));
        for (size_t j = 0; j < mono.exps.size(); ++j) {
            if (mono.exps[j] == 0) continue;
            long term = (base * static_cast<long>(mono.exps[j] % static_cast<unsigned>(m))) % m;
            for (size_t i = 0; i < mono.exps.size(); ++i) {
                unsigned e = mono.exps[i] - (i == j ? 1 : 0);
                if (e) term = (term * pow_mod(x[i], e, m)) % m;
            }
            g[j] = (g[j] + term) % m;
        }
    }
    return g;
}

Int Form::eval_int(std::span<const Int> x) const {
    if (static_cast<long>(x.size()) != n_) throw ArgumentError("evaluation arity mismatch");
    Int acc(0);
    for (const auto& mono : monos_) {
        Int term = mono.coeff;
        for (size_t i = 0; i < mono.exps.size(); ++i)
            for (unsigned e = 0; e < mono.exps[i]; ++e) term *= x[i];
        acc += term;
    }
    return acc;
}

std::string Form::str() const {
    std::string out;
    for (size_t i = 0; i < monos_.size(); ++i) {
        std::string ms = monomial_str(monos_[i]);
        if (i == 0) {
            out = ms;
        } else if (!ms.empty() && ms[0] == '-') {
            out += " - " + ms.substr(1);
        } else {
            out += " + " + ms;
        }
    }
    return out;
}

}  // namespace pzeta
