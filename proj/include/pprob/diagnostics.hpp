// Shared result and error types.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pprob {

/// Index of an element inside a finite algebra's element list.
using Elem = std::size_t;

/// Outcome of an exhaustive law check. On failure `law` names the first
/// violated law and `witness` holds the offending elements.
struct CheckResult {
    bool ok = true;
    std::string law;
    std::vector<Elem> witness;
    std::string detail;

    static CheckResult pass() { return {}; }
    static CheckResult fail(std::string law, std::vector<Elem> witness, std::string detail = {}) {
        return {false, std::move(law), std::move(witness), std::move(detail)};
    }
    explicit operator bool() const { return ok; }
};

/// Thrown when a candidate table fails certification.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(CheckResult diagnostic)
        : std::runtime_error(describe(diagnostic)), diagnostic_(std::move(diagnostic)) {}

    const CheckResult& diagnostic() const noexcept { return diagnostic_; }
    const std::string& law() const noexcept { return diagnostic_.law; }

private:
    static std::string describe(const CheckResult& d) {
        std::string s = "validation failed: " + d.law;
        if (!d.witness.empty()) {
            s += " (witness";
            for (Elem e : d.witness) s += " " + std::to_string(e);
            s += ")";
        }
        if (!d.detail.empty()) s += ": " + d.detail;
        return s;
    }
    CheckResult diagnostic_;
};

/// Which precondition of an operation failed.
enum class Precondition {
    zero_measure,         // division by a zero (first component of a) value
    not_in_nabla,         // conditioning element outside [n,1]
    not_isotone,          // base valuation is not isotone
    not_distributive,     // lattice must be distributive
    not_complemented,     // lattice must be Boolean
    not_bijective,        // morphism must be an isomorphism
    not_prime,            // ideal is not a prime ideal
    contains_fixed_point, // ideal contains n
    order_violation,      // a <= b where a not<= b was required
    cap_exceeded,         // exhaustive search bound exceeded
    kind_mismatch,        // classical vs Kleene mismatch
    unassigned_variable,  // formula uses a variable with no generator
    invalid_weights,      // weights negative or not summing to one
    not_isotone_function, // sentence probability is not isotone on the corpus
    not_compatible,       // sentence probability does not respect equivalence
    not_full_field,       // operation needs the whole of D(S)
    inconsistent_condition, // conditioning formula entails 0
};

inline const char* to_string(Precondition p) {
    switch (p) {
        case Precondition::zero_measure: return "zero-measure";
        case Precondition::not_in_nabla: return "not-in-nabla";
        case Precondition::not_isotone: return "not-isotone";
        case Precondition::not_distributive: return "not-distributive";
        case Precondition::not_complemented: return "not-complemented";
        case Precondition::not_bijective: return "not-bijective";
        case Precondition::not_prime: return "not-prime";
        case Precondition::contains_fixed_point: return "contains-fixed-point";
        case Precondition::order_violation: return "order-violation";
        case Precondition::cap_exceeded: return "cap-exceeded";
        case Precondition::kind_mismatch: return "kind-mismatch";
        case Precondition::unassigned_variable: return "unassigned-variable";
        case Precondition::invalid_weights: return "invalid-weights";
        case Precondition::not_isotone_function: return "not-isotone-function";
        case Precondition::not_compatible: return "not-compatible";
        case Precondition::not_full_field: return "not-full-field";
        case Precondition::inconsistent_condition: return "inconsistent-condition";
    }
    return "unknown";
}

class PreconditionError : public std::invalid_argument {
public:
    PreconditionError(Precondition kind, const std::string& message)
        : std::invalid_argument(std::string(to_string(kind)) + ": " + message), kind_(kind) {}
    Precondition kind() const noexcept { return kind_; }

private:
    Precondition kind_;
};

}  // namespace pprob
