#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pzeta {

// Base class for everything thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid argument at an API boundary (non-prime prime, zero where a unit is
// required, malformed text, lambda <= 0, ...).
struct ArgumentError : Error {
    using Error::Error;
};

// A polynomial that fails the homogeneity requirement; carries the offending
// monomials in printable form.
struct HomogeneityError : ArgumentError {
    HomogeneityError(const std::string& msg, std::string offending)
        : ArgumentError(msg), monomials(std::move(offending)) {}
    std::string monomials;
};

// Evaluation at a pole of a meromorphic quantity.  `factor` names the
// vanishing denominator factor, e.g. "(1 - q^-2*t^2)".
struct PoleError : Error {
    PoleError(const std::string& msg, std::string vanishing)
        : Error(msg + " [vanishing factor " + vanishing + "]"),
          factor(std::move(vanishing)) {}
    std::string factor;
};

// An enumeration request larger than the configured budget.
struct ResourceError : Error {
    ResourceError(const std::string& msg, std::uint64_t needed, std::uint64_t allowed)
        : Error(msg + " (needs " + std::to_string(needed) + " points, budget " +
                std::to_string(allowed) + ")"),
          required_budget(needed), budget(allowed) {}
    std::uint64_t required_budget;
    std::uint64_t budget;
};

// Trusted digits ran out, or a requested tolerance is below what the stored
// data can certify.
struct PrecisionError : Error {
    using Error::Error;
};

// One or more fundamental-solution hypotheses failed; `reasons` carries every
// violated hypothesis (a single beta can violate several at once).
struct AdmissibilityError : Error {
    enum class Reason {
        beta_equals_n_over_d,
        zeta_pole_at_minus_beta,
        zeta_zero_at_minus_beta,
        resolution_pole,
    };
    AdmissibilityError(const std::string& msg, Reason r) : Error(msg), reasons{r} {}
    AdmissibilityError(const std::string& msg, std::vector<Reason> rs)
        : Error(msg), reasons(std::move(rs)) {}
    bool has(Reason r) const {
        for (Reason x : reasons)
            if (x == r) return true;
        return false;
    }
    std::vector<Reason> reasons;
};

// Supplied data contradicts independently computed data (e.g. a rational zeta
// whose series disagrees with counted masses).
struct ValidationError : Error {
    ValidationError(const std::string& msg, long where = -1)
        : Error(msg), location(where) {}
    long location;  // series index of first mismatch, or -1
};

// A mathematical precondition on the inputs fails (convergence guards,
// smoothness hypotheses, degenerate forms).
struct DomainError : Error {
    using Error::Error;
};

}  // namespace pzeta
