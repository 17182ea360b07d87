// Partial sets over a finite sample space, the value set T and partial
// probability measures.
#pragma once

#include "diagnostics.hpp"
#include "dmf.hpp"
#include "rational.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pprob {

/// Points of the sample space are bit positions; at most 64 of them.
struct PartialSet {
    std::uint64_t pos = 0;
    std::uint64_t neg = 0;

    friend bool operator==(const PartialSet&, const PartialSet&) = default;

    /// Canonical order: ternary counting with one digit per point
    /// (0 = negative, 1 = neither, 2 = positive), point 0 least significant.
    friend bool operator<(const PartialSet& a, const PartialSet& b) {
        for (int i = 63; i >= 0; --i) {
            const std::uint64_t bit = std::uint64_t{1} << i;
            auto digit = [bit](const PartialSet& p) { return (p.pos & bit) ? 2 : (p.neg & bit) ? 0 : 1; };
            const int da = digit(a), db = digit(b);
            if (da != db) return da < db;
        }
        return false;
    }
};

inline std::uint64_t full_mask(std::size_t size) {
    return size >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size) - 1;
}

inline PartialSet ps_meet(PartialSet a, PartialSet b) { return {a.pos & b.pos, a.neg | b.neg}; }
inline PartialSet ps_join(PartialSet a, PartialSet b) { return {a.pos | b.pos, a.neg & b.neg}; }
inline PartialSet ps_neg(PartialSet a) { return {a.neg, a.pos}; }
inline bool ps_leq(PartialSet a, PartialSet b) { return (a.pos & ~b.pos) == 0 && (b.neg & ~a.neg) == 0; }
inline bool ps_disjoint(PartialSet a) { return (a.pos & a.neg) == 0; }

inline std::string mask_name(std::uint64_t mask, const std::vector<std::string>& space) {
    std::string s = "{";
    bool first = true;
    for (std::size_t i = 0; i < space.size(); ++i)
        if (mask & (std::uint64_t{1} << i)) {
            if (!first) s += ',';
            s += space[i];
            first = false;
        }
    return s + "}";
}

/// "({a},{b})".
inline std::string ps_name(PartialSet a, const std::vector<std::string>& space) {
    return "(" + mask_name(a.pos, space) + "," + mask_name(a.neg, space) + ")";
}

/// The operations of D(S) on raw partial sets, for generic closure code.
struct PartialSetOps {
    using value_type = PartialSet;
    std::size_t space_size = 0;

    PartialSet meet(PartialSet a, PartialSet b) const { return ps_meet(a, b); }
    PartialSet join(PartialSet a, PartialSet b) const { return ps_join(a, b); }
    PartialSet neg(PartialSet a) const { return ps_neg(a); }
    PartialSet bottom() const { return {0, full_mask(space_size)}; }
    PartialSet top() const { return {full_mask(space_size), 0}; }
    PartialSet fix() const { return {0, 0}; }
};

// ---------------------------------------------------------------------------
// T and arithmetic in Q²

struct TValue {
    Rational first;
    Rational second;

    friend bool operator==(const TValue&, const TValue&) = default;
    friend TValue operator+(const TValue& a, const TValue& b) { return {a.first + b.first, a.second + b.second}; }
    friend TValue operator-(const TValue& a, const TValue& b) { return {a.first - b.first, a.second - b.second}; }
    friend TValue operator*(const TValue& a, const Rational& k) { return {a.first * k, a.second * k}; }
};

inline TValue tvalue_add(const TValue& a, const TValue& b) { return a + b; }
inline TValue tvalue_sub(const TValue& a, const TValue& b) { return a - b; }
inline TValue tvalue_scale(const TValue& a, const Rational& k) { return a * k; }

inline TValue sigma(const TValue& t) { return {t.second, t.first}; }

/// (x,y) ≼ (w,z) iff x <= w and z <= y.
inline bool precedes(const TValue& a, const TValue& b) { return a.first <= b.first && b.second <= a.second; }

inline bool in_T(const TValue& t) { return t.first >= 0 && t.second >= 0 && t.first + t.second <= 1; }

inline std::string to_string(const TValue& t) { return "(" + to_string(t.first) + ", " + to_string(t.second) + ")"; }

inline TValue tvalue(long long a, long long b, long long c, long long d) {
    return {make_rational(a, b), make_rational(c, d)};
}

// ---------------------------------------------------------------------------
// Fields of partial sets

/// A subalgebra of D(S). Members are kept in canonical order.
class PartialField {
public:
    /// Sorts and deduplicates `members`, then checks that they contain the
    /// three constants and are closed under meet, join and negation.
    static PartialField certify(std::vector<std::string> space, std::vector<PartialSet> members) {
        if (space.size() > 64) throw PreconditionError(Precondition::cap_exceeded, "sample space larger than 64 points");
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        PartialField f(std::move(space), std::move(members));
        if (auto d = f.diagnose(); !d) throw ValidationError(std::move(d));
        return f;
    }

    const std::vector<std::string>& space() const noexcept { return space_; }
    const std::vector<PartialSet>& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    PartialSetOps ops() const { return PartialSetOps{space_.size()}; }

    std::optional<Elem> index_of(PartialSet a) const {
        auto it = std::lower_bound(members_.begin(), members_.end(), a);
        if (it == members_.end() || !(*it == a)) return std::nullopt;
        return static_cast<Elem>(it - members_.begin());
    }

    std::string name(Elem i) const { return ps_name(members_.at(i), space_); }

    /// The field as a table-based DMF-algebra, same element order.
    DmfAlgebra to_dmf() const {
        const auto o = ops();
        auto at = [&](PartialSet p) { return *index_of(p); };
        std::vector<std::string> names;
        for (Elem i = 0; i < size(); ++i) names.push_back(name(i));
        auto L = FiniteLattice::from_operations(
            std::move(names), [&](Elem a, Elem b) { return at(o.meet(members_[a], members_[b])); },
            [&](Elem a, Elem b) { return at(o.join(members_[a], members_[b])); }, at(o.bottom()), at(o.top()));
        std::vector<Elem> neg(size());
        for (Elem i = 0; i < size(); ++i) neg[i] = at(o.neg(members_[i]));
        return DmfAlgebra::certify(L, std::move(neg), at(o.fix()));
    }

private:
    PartialField(std::vector<std::string> space, std::vector<PartialSet> members)
        : space_(std::move(space)), members_(std::move(members)) {}

    CheckResult diagnose() const {
        const std::uint64_t full = full_mask(space_.size());
        for (Elem i = 0; i < size(); ++i) {
            const auto& m = members_[i];
            if (!ps_disjoint(m) || ((m.pos | m.neg) & ~full))
                return CheckResult::fail("disjointness", {i}, "not a partial set over the space");
        }
        const auto o = ops();
        if (!index_of(o.bottom())) return CheckResult::fail("constants", {}, "missing 0");
        if (!index_of(o.top())) return CheckResult::fail("constants", {}, "missing 1");
        if (!index_of(o.fix())) return CheckResult::fail("constants", {}, "missing n");
        for (Elem a = 0; a < size(); ++a) {
            if (!index_of(o.neg(members_[a]))) return CheckResult::fail("closure", {a}, "negation");
            for (Elem b = a + 1; b < size(); ++b) {
                if (!index_of(o.meet(members_[a], members_[b]))) return CheckResult::fail("closure", {a, b}, "meet");
                if (!index_of(o.join(members_[a], members_[b]))) return CheckResult::fail("closure", {a, b}, "join");
            }
        }
        return CheckResult::pass();
    }

    std::vector<std::string> space_;
    std::vector<PartialSet> members_;
};

/// All 3^|S| partial sets over `space`, in canonical order.
inline PartialField enumerate_DS(std::vector<std::string> space, std::size_t cap = 6) {
    const std::size_t k = space.size();
    if (k > cap)
        throw PreconditionError(Precondition::cap_exceeded,
                                "|S| = " + std::to_string(k) + " exceeds the cap " + std::to_string(cap));
    std::size_t total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= 3;
    std::vector<PartialSet> members;
    members.reserve(total);
    for (std::size_t code = 0; code < total; ++code) {
        PartialSet p;
        std::size_t c = code;
        for (std::size_t i = 0; i < k; ++i, c /= 3) {
            if (c % 3 == 0) p.neg |= std::uint64_t{1} << i;
            if (c % 3 == 2) p.pos |= std::uint64_t{1} << i;
        }
        members.push_back(p);
    }
    return PartialField::certify(std::move(space), std::move(members));
}

/// Point names "a", "b", ... for quick test spaces.
inline std::vector<std::string> letter_space(std::size_t k) {
    std::vector<std::string> s;
    for (std::size_t i = 0; i < k; ++i) s.push_back(std::string(1, static_cast<char>('a' + i)));
    return s;
}

// ---------------------------------------------------------------------------
// Partial measures

/// Values indexed like the field's members.
using PartialMeasure = std::vector<TValue>;

inline const std::vector<std::string>& partial_measure_laws() {
    static const std::vector<std::string> laws{"axiom 1", "axiom 2", "axiom 3", "axiom 4", "range"};
    return laws;
}

/// One measure law, evaluated on its own; `mu` must be total on the field.
/// Axiom 2 is inclusion-exclusion, μ(a) + μ(b) = μ(a ⊔ b) + μ(a ⊓ b), over Q².
inline CheckResult check_partial_measure_law(const PartialField& F, const PartialMeasure& mu, const std::string& law) {
    const auto o = F.ops();
    const auto& m = F.members();
    auto at = [&](PartialSet p) { return *F.index_of(p); };
    if (law == "axiom 1") {
        const Elem one = at(o.top());
        if (!(mu[one] == TValue{1, 0})) return CheckResult::fail(law, {one}, "mu(S,{}) = " + to_string(mu[one]));
    } else if (law == "axiom 2") {
        for (Elem a = 0; a < F.size(); ++a)
            for (Elem b = 0; b < F.size(); ++b)
                if (!(mu[a] + mu[b] == mu[at(o.join(m[a], m[b]))] + mu[at(o.meet(m[a], m[b]))]))
                    return CheckResult::fail(law, {a, b});
    } else if (law == "axiom 3") {
        for (Elem a = 0; a < F.size(); ++a)
            if (!(mu[at(o.neg(m[a]))] == sigma(mu[a]))) return CheckResult::fail(law, {a});
    } else if (law == "axiom 4") {
        for (Elem a = 0; a < F.size(); ++a)
            if (m[a].neg == 0 && !precedes(TValue{0, 0}, mu[a])) return CheckResult::fail(law, {a});
    } else if (law == "range") {
        for (Elem a = 0; a < F.size(); ++a)
            if (!in_T(mu[a])) return CheckResult::fail(law, {a}, to_string(mu[a]) + " is not in T");
    } else {
        throw std::invalid_argument("unknown measure law '" + law + "'");
    }
    return CheckResult::pass();
}

/// Laws in order: shape, axiom 1, axiom 2, axiom 3, axiom 4, range.
inline CheckResult is_partial_measure(const PartialField& F, const PartialMeasure& mu) {
    if (mu.size() != F.size()) return CheckResult::fail("shape", {}, "measure is not total on the field");
    for (const auto& law : partial_measure_laws())
        if (auto d = check_partial_measure_law(F, mu, law); !d) return d;
    return CheckResult::pass();
}

inline void validate_weights(const std::vector<Rational>& p) {
    Rational total = 0;
    for (const auto& w : p) {
        if (w < 0) throw PreconditionError(Precondition::invalid_weights, "negative weight " + to_string(w));
        total += w;
    }
    if (total != 1) throw PreconditionError(Precondition::invalid_weights, "weights sum to " + to_string(total));
}

inline Rational mask_weight(std::uint64_t mask, const std::vector<Rational>& p) {
    Rational s = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (mask & (std::uint64_t{1} << i)) s += p[i];
    return s;
}

/// μ(A,B) = (p(A), p(B)) on every member of F.
inline PartialMeasure associated_partial_space(const PartialField& F, const std::vector<Rational>& p) {
    if (p.size() != F.space().size())
        throw PreconditionError(Precondition::invalid_weights, "one weight per sample point is required");
    validate_weights(p);
    PartialMeasure mu;
    mu.reserve(F.size());
    for (const auto& m : F.members()) mu.push_back({mask_weight(m.pos, p), mask_weight(m.neg, p)});
    return mu;
}

}  // namespace pprob
