// Finite bounded lattices given by operation tables, classical valuations,
// relativization to [0,a] and conditional valuations.
#pragma once

#include "diagnostics.hpp"
#include "rational.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pprob {

/// Uncertified lattice description, as read from JSON or built in code.
struct LatticeTables {
    std::vector<std::string> elements;
    std::vector<std::vector<Elem>> meet;
    std::vector<std::vector<Elem>> join;
    Elem bottom = 0;
    Elem top = 0;
};

/// Checks the bounded-lattice laws on a candidate; returns the first failure.
/// Laws are tried in the order: shape, idempotence, commutativity,
/// associativity, absorption, bounds, degenerate.
inline CheckResult diagnose_lattice(const LatticeTables& t) {
    const std::size_t n = t.elements.size();
    if (n == 0) return CheckResult::fail("shape", {}, "element list is empty");
    auto square = [n](const std::vector<std::vector<Elem>>& tab) {
        if (tab.size() != n) return false;
        for (const auto& row : tab) {
            if (row.size() != n) return false;
            for (Elem e : row)
                if (e >= n) return false;
        }
        return true;
    };
    if (!square(t.meet)) return CheckResult::fail("shape", {}, "meet table is not a total square table");
    if (!square(t.join)) return CheckResult::fail("shape", {}, "join table is not a total square table");
    if (t.bottom >= n || t.top >= n) return CheckResult::fail("bounds", {}, "bottom/top index out of range");

    const auto& m = t.meet;
    const auto& j = t.join;
    for (Elem a = 0; a < n; ++a) {
        if (m[a][a] != a) return CheckResult::fail("idempotence", {a}, "meet");
        if (j[a][a] != a) return CheckResult::fail("idempotence", {a}, "join");
    }
    for (Elem a = 0; a < n; ++a)
        for (Elem b = a + 1; b < n; ++b) {
            if (m[a][b] != m[b][a]) return CheckResult::fail("commutativity", {a, b}, "meet");
            if (j[a][b] != j[b][a]) return CheckResult::fail("commutativity", {a, b}, "join");
        }
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            for (Elem c = 0; c < n; ++c) {
                if (m[m[a][b]][c] != m[a][m[b][c]]) return CheckResult::fail("associativity", {a, b, c}, "meet");
                if (j[j[a][b]][c] != j[a][j[b][c]]) return CheckResult::fail("associativity", {a, b, c}, "join");
            }
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) {
            if (m[a][j[a][b]] != a) return CheckResult::fail("absorption", {a, b}, "a meet (a join b) != a");
            if (j[a][m[a][b]] != a) return CheckResult::fail("absorption", {a, b}, "a join (a meet b) != a");
        }
    for (Elem a = 0; a < n; ++a) {
        if (j[t.bottom][a] != a) return CheckResult::fail("bounds", {t.bottom, a}, "bottom is not the join identity");
        if (m[t.top][a] != a) return CheckResult::fail("bounds", {t.top, a}, "top is not the meet identity");
    }
    if (n == 1) return CheckResult::fail("degenerate", {0}, "one-element lattice has 0 = 1");
    return CheckResult::pass();
}

/// Immutable certified finite bounded lattice. Copies share the tables.
class FiniteLattice {
public:
    /// Validates `tables`; throws ValidationError naming the first violated law.
    static FiniteLattice certify(LatticeTables tables) {
        if (auto d = diagnose_lattice(tables); !d) throw ValidationError(std::move(d));
        return FiniteLattice(std::move(tables));
    }

    /// Builds tables from operation callbacks, then certifies.
    template <class Meet, class Join>
    static FiniteLattice from_operations(std::vector<std::string> names, Meet&& meet, Join&& join, Elem bottom,
                                         Elem top) {
        LatticeTables t;
        const std::size_t n = names.size();
        t.elements = std::move(names);
        t.meet.assign(n, std::vector<Elem>(n));
        t.join.assign(n, std::vector<Elem>(n));
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b) {
                t.meet[a][b] = meet(a, b);
                t.join[a][b] = join(a, b);
            }
        t.bottom = bottom;
        t.top = top;
        return certify(std::move(t));
    }

    std::size_t size() const noexcept { return data_->size; }
    Elem meet(Elem a, Elem b) const noexcept { return data_->meet[a * data_->size + b]; }
    Elem join(Elem a, Elem b) const noexcept { return data_->join[a * data_->size + b]; }
    bool leq(Elem a, Elem b) const noexcept { return meet(a, b) == a; }
    Elem bottom() const noexcept { return data_->bottom; }
    Elem top() const noexcept { return data_->top; }
    bool distributive() const noexcept { return data_->distributive; }
    const std::string& name(Elem a) const { return data_->names.at(a); }
    const std::vector<std::string>& names() const noexcept { return data_->names; }

    std::optional<Elem> find(const std::string& name) const {
        auto it = std::find(data_->names.begin(), data_->names.end(), name);
        if (it == data_->names.end()) return std::nullopt;
        return static_cast<Elem>(it - data_->names.begin());
    }

    std::vector<Elem> elements() const {
        std::vector<Elem> all(size());
        std::iota(all.begin(), all.end(), Elem{0});
        return all;
    }

    LatticeTables tables() const {
        LatticeTables t;
        const std::size_t n = size();
        t.elements = data_->names;
        t.meet.assign(n, std::vector<Elem>(n));
        t.join.assign(n, std::vector<Elem>(n));
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b) {
                t.meet[a][b] = meet(a, b);
                t.join[a][b] = join(a, b);
            }
        t.bottom = bottom();
        t.top = top();
        return t;
    }

    friend bool operator==(const FiniteLattice& x, const FiniteLattice& y) {
        return x.data_ == y.data_ || (x.data_->size == y.data_->size && x.data_->meet == y.data_->meet &&
                                      x.data_->join == y.data_->join && x.data_->bottom == y.data_->bottom &&
                                      x.data_->top == y.data_->top);
    }

private:
    struct Data {
        std::size_t size = 0;
        std::vector<std::string> names;
        std::vector<Elem> meet;
        std::vector<Elem> join;
        Elem bottom = 0;
        Elem top = 0;
        bool distributive = false;
    };

    explicit FiniteLattice(LatticeTables t) {
        auto d = std::make_shared<Data>();
        const std::size_t n = t.elements.size();
        d->size = n;
        d->names = std::move(t.elements);
        d->meet.resize(n * n);
        d->join.resize(n * n);
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b) {
                d->meet[a * n + b] = t.meet[a][b];
                d->join[a * n + b] = t.join[a][b];
            }
        d->bottom = t.bottom;
        d->top = t.top;
        d->distributive = true;
        for (Elem a = 0; a < n && d->distributive; ++a)
            for (Elem b = 0; b < n && d->distributive; ++b)
                for (Elem c = 0; c < n; ++c) {
                    Elem lhs = d->meet[a * n + d->join[b * n + c]];
                    Elem rhs = d->join[d->meet[a * n + b] * n + d->meet[a * n + c]];
                    if (lhs != rhs) {
                        d->distributive = false;
                        break;
                    }
                }
        data_ = std::move(d);
    }

    std::shared_ptr<const Data> data_;
};

inline FiniteLattice validate_lattice(LatticeTables candidate) { return FiniteLattice::certify(std::move(candidate)); }

/// First triple violating a ∧ (b ∨ c) = (a ∧ b) ∨ (a ∧ c), if any.
inline CheckResult check_distributive(const FiniteLattice& L) {
    for (Elem a = 0; a < L.size(); ++a)
        for (Elem b = 0; b < L.size(); ++b)
            for (Elem c = 0; c < L.size(); ++c)
                if (L.meet(a, L.join(b, c)) != L.join(L.meet(a, b), L.meet(a, c)))
                    return CheckResult::fail("distributivity", {a, b, c});
    return CheckResult::pass();
}

// ---------------------------------------------------------------------------
// Standard lattices

/// The chain 0 < 1 < ... < k-1 (k >= 2).
inline FiniteLattice chain_lattice(std::size_t k) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < k; ++i) names.push_back(std::to_string(i));
    return FiniteLattice::from_operations(
        std::move(names), [](Elem a, Elem b) { return std::min(a, b); }, [](Elem a, Elem b) { return std::max(a, b); },
        0, k - 1);
}

/// Name of the subset of {0..k-1} encoded by `mask`, e.g. "{0,2}".
inline std::string subset_name(std::uint64_t mask, std::size_t k) {
    std::string s = "{";
    bool first = true;
    for (std::size_t i = 0; i < k; ++i)
        if (mask >> i & 1U) {
            if (!first) s += ",";
            s += std::to_string(i);
            first = false;
        }
    return s + "}";
}

/// The power set of a k-element set; element index = bitmask.
inline FiniteLattice boolean_lattice(std::size_t k) {
    const std::size_t n = std::size_t{1} << k;
    std::vector<std::string> names;
    for (std::size_t m = 0; m < n; ++m) names.push_back(subset_name(m, k));
    return FiniteLattice::from_operations(
        std::move(names), [](Elem a, Elem b) { return a & b; }, [](Elem a, Elem b) { return a | b; }, 0, n - 1);
}

/// M3: bottom, three pairwise incomparable atoms, top.
inline FiniteLattice diamond_m3() {
    auto meet = [](Elem a, Elem b) -> Elem {
        if (a == b) return a;
        if (a == 4) return b;
        if (b == 4) return a;
        return 0;
    };
    auto join = [](Elem a, Elem b) -> Elem {
        if (a == b) return a;
        if (a == 0) return b;
        if (b == 0) return a;
        return 4;
    };
    return FiniteLattice::from_operations({"0", "a", "b", "c", "1"}, meet, join, 0, 4);
}

/// Complement of every element, or nullopt if some element has none (or more
/// than one).
inline std::optional<std::vector<Elem>> complements(const FiniteLattice& L) {
    std::vector<Elem> comp(L.size());
    for (Elem a = 0; a < L.size(); ++a) {
        std::optional<Elem> found;
        for (Elem b = 0; b < L.size(); ++b)
            if (L.join(a, b) == L.top() && L.meet(a, b) == L.bottom()) {
                if (found) return std::nullopt;
                found = b;
            }
        if (!found) return std::nullopt;
        comp[a] = *found;
    }
    return comp;
}

inline bool is_boolean(const FiniteLattice& L) { return L.distributive() && complements(L).has_value(); }

// ---------------------------------------------------------------------------
// Valuations

/// Real-valued map on the elements of a lattice, indexed by element.
using Valuation = std::vector<Rational>;

/// v(0)=0, v(1)=1 and v(a∨b)=v(a)+v(b)−v(a∧b) for every pair.
inline CheckResult is_valuation(const FiniteLattice& L, const Valuation& v) {
    if (v.size() != L.size()) throw std::invalid_argument("valuation is not total on the lattice");
    if (v[L.bottom()] != 0) return CheckResult::fail("bottom", {L.bottom()}, "v(0) = " + to_string(v[L.bottom()]));
    if (v[L.top()] != 1) return CheckResult::fail("top", {L.top()}, "v(1) = " + to_string(v[L.top()]));
    for (Elem a = 0; a < L.size(); ++a)
        for (Elem b = a; b < L.size(); ++b)
            if (v[L.join(a, b)] != v[a] + v[b] - v[L.meet(a, b)])
                return CheckResult::fail("modularity", {a, b}, "v(a join b) != v(a) + v(b) - v(a meet b)");
    return CheckResult::pass();
}

/// Reported separately from is_valuation: the modular law alone does not bound
/// values without isotonicity.
inline CheckResult in_unit_range(const FiniteLattice& L, const Valuation& v) {
    for (Elem a = 0; a < L.size(); ++a)
        if (v[a] < 0 || v[a] > 1) return CheckResult::fail("range", {a}, to_string(v[a]));
    return CheckResult::pass();
}

inline CheckResult is_isotone(const FiniteLattice& L, const Valuation& v) {
    for (Elem a = 0; a < L.size(); ++a)
        for (Elem b = 0; b < L.size(); ++b)
            if (L.leq(a, b) && v[a] > v[b]) return CheckResult::fail("isotonicity", {a, b});
    return CheckResult::pass();
}

/// On a Boolean lattice: (bounded valuation?, additive with v(1)=1?). The two
/// answers coincide for every input.
inline std::pair<bool, bool> check_boolean_valuation_additivity(const FiniteLattice& L, const Valuation& v) {
    if (!L.distributive()) throw PreconditionError(Precondition::not_distributive, "lattice is not distributive");
    if (!complements(L)) throw PreconditionError(Precondition::not_complemented, "lattice is not complemented");
    const bool valuation = static_cast<bool>(is_valuation(L, v));
    bool additive = v[L.top()] == 1;
    for (Elem a = 0; a < L.size() && additive; ++a)
        for (Elem b = 0; b < L.size(); ++b)
            if (L.meet(a, b) == L.bottom() && v[L.join(a, b)] != v[a] + v[b]) {
                additive = false;
                break;
            }
    return {valuation, additive};
}

/// Valuation from nonnegative atom weights on boolean_lattice(k).
inline Valuation boolean_valuation_from_weights(std::size_t k, const std::vector<Rational>& atom_weights) {
    Valuation v(std::size_t{1} << k, Rational(0));
    for (std::size_t m = 0; m < v.size(); ++m)
        for (std::size_t i = 0; i < k; ++i)
            if (m >> i & 1U) v[m] += atom_weights.at(i);
    return v;
}

// ---------------------------------------------------------------------------
// Morphisms

/// Map between lattices that preserves ∧, ∨, 0 and 1.
class LatticeMorphism {
public:
    static LatticeMorphism certify(FiniteLattice source, FiniteLattice target, std::vector<Elem> map) {
        if (auto d = check(source, target, map); !d) throw ValidationError(std::move(d));
        return LatticeMorphism(std::move(source), std::move(target), std::move(map));
    }

    static CheckResult check(const FiniteLattice& s, const FiniteLattice& t, const std::vector<Elem>& map) {
        if (map.size() != s.size()) return CheckResult::fail("shape", {}, "map is not total on the source");
        for (Elem x : map)
            if (x >= t.size()) return CheckResult::fail("shape", {x}, "image outside the target");
        if (map[s.bottom()] != t.bottom()) return CheckResult::fail("bottom", {s.bottom()});
        if (map[s.top()] != t.top()) return CheckResult::fail("top", {s.top()});
        for (Elem a = 0; a < s.size(); ++a)
            for (Elem b = 0; b < s.size(); ++b) {
                if (map[s.meet(a, b)] != t.meet(map[a], map[b])) return CheckResult::fail("meet", {a, b});
                if (map[s.join(a, b)] != t.join(map[a], map[b])) return CheckResult::fail("join", {a, b});
            }
        return CheckResult::pass();
    }

    static LatticeMorphism identity(const FiniteLattice& L) { return LatticeMorphism(L, L, L.elements()); }

    const FiniteLattice& source() const noexcept { return source_; }
    const FiniteLattice& target() const noexcept { return target_; }
    const std::vector<Elem>& map() const noexcept { return map_; }
    Elem operator()(Elem a) const { return map_.at(a); }

    bool injective() const {
        std::vector<bool> hit(target_.size(), false);
        for (Elem x : map_) {
            if (hit[x]) return false;
            hit[x] = true;
        }
        return true;
    }
    bool surjective() const {
        std::vector<bool> hit(target_.size(), false);
        for (Elem x : map_) hit[x] = true;
        return std::all_of(hit.begin(), hit.end(), [](bool h) { return h; });
    }

private:
    LatticeMorphism(FiniteLattice s, FiniteLattice t, std::vector<Elem> m)
        : source_(std::move(s)), target_(std::move(t)), map_(std::move(m)) {}

    FiniteLattice source_;
    FiniteLattice target_;
    std::vector<Elem> map_;
};

/// v ∘ φ.
inline Valuation pullback_valuation(const LatticeMorphism& phi, const Valuation& v) {
    Valuation out(phi.source().size());
    for (Elem a = 0; a < out.size(); ++a) out[a] = v.at(phi(a));
    return out;
}

/// v ∘ φ⁻¹ for an isomorphism φ.
inline Valuation induced_valuation(const LatticeMorphism& phi, const Valuation& v) {
    if (!phi.injective() || !phi.surjective())
        throw PreconditionError(Precondition::not_bijective, "induced valuation needs an isomorphism");
    Valuation mu(phi.target().size());
    for (Elem a = 0; a < phi.source().size(); ++a) mu[phi(a)] = v.at(a);
    return mu;
}

/// Searches for a lattice isomorphism by backtracking with degree pruning.
inline std::optional<std::vector<Elem>> find_lattice_isomorphism(const FiniteLattice& a, const FiniteLattice& b) {
    if (a.size() != b.size()) return std::nullopt;
    const std::size_t n = a.size();
    auto profile = [](const FiniteLattice& L, Elem x) {
        std::size_t below = 0, above = 0;
        for (Elem y = 0; y < L.size(); ++y) {
            below += L.leq(y, x);
            above += L.leq(x, y);
        }
        return std::pair{below, above};
    };
    std::vector<Elem> map(n, n);
    std::vector<bool> used(n, false);
    std::function<bool(Elem)> extend = [&](Elem x) -> bool {
        if (x == n) return true;
        for (Elem y = 0; y < n; ++y) {
            if (used[y] || profile(a, x) != profile(b, y)) continue;
            bool ok = true;
            for (Elem z = 0; z < x && ok; ++z)
                ok = (a.leq(z, x) == b.leq(map[z], y)) && (a.leq(x, z) == b.leq(y, map[z]));
            if (!ok) continue;
            map[x] = y;
            used[y] = true;
            if (extend(x + 1)) return true;
            used[y] = false;
        }
        return false;
    };
    if (!extend(0)) return std::nullopt;
    return map;
}

// ---------------------------------------------------------------------------
// Relativization

/// The interval [0,a] as a bounded lattice together with f_a(x) = a ∧ x.
struct Relativization {
    FiniteLattice interval;
    std::vector<Elem> members;  // interval index -> index in the original lattice
    LatticeMorphism projection; // f_a
};

inline Relativization relativize(const FiniteLattice& L, Elem a) {
    if (!L.distributive())
        throw PreconditionError(Precondition::not_distributive, "relativization is a morphism only on distributive lattices");
    std::vector<Elem> members;
    std::vector<Elem> local(L.size(), L.size());
    for (Elem x = 0; x < L.size(); ++x)
        if (L.leq(x, a)) {
            local[x] = members.size();
            members.push_back(x);
        }
    std::vector<std::string> names;
    for (Elem x : members) names.push_back(L.name(x));
    auto interval = FiniteLattice::from_operations(
        std::move(names), [&](Elem x, Elem y) { return local[L.meet(members[x], members[y])]; },
        [&](Elem x, Elem y) { return local[L.join(members[x], members[y])]; }, local[L.bottom()], local[a]);
    std::vector<Elem> map(L.size());
    for (Elem x = 0; x < L.size(); ++x) map[x] = local[L.meet(a, x)];
    auto f = LatticeMorphism::certify(L, interval, std::move(map));
    return Relativization{std::move(interval), std::move(members), std::move(f)};
}

struct RelativizedValuation {
    Relativization relativization;
    Valuation values;  // indexed by interval element
};

/// v_a(x) = v(x) / v(a) on [0,a].
inline RelativizedValuation relativized_valuation(const FiniteLattice& L, const Valuation& v, Elem a) {
    if (v.at(a) == 0) throw PreconditionError(Precondition::zero_measure, "v(" + L.name(a) + ") = 0");
    auto rel = relativize(L, a);
    Valuation va(rel.members.size());
    for (Elem x = 0; x < va.size(); ++x) va[x] = v[rel.members[x]] / v[a];
    return {std::move(rel), std::move(va)};
}

/// v(·|a) = v_a ∘ f_a.
inline Valuation conditional_valuation(const FiniteLattice& L, const Valuation& v, Elem a) {
    auto rv = relativized_valuation(L, v, a);
    return pullback_valuation(rv.relativization.projection, rv.values);
}

/// v(x|a) = v(x ∧ a) / v(a), computed directly.
inline Valuation conditional_valuation_closed_form(const FiniteLattice& L, const Valuation& v, Elem a) {
    if (v.at(a) == 0) throw PreconditionError(Precondition::zero_measure, "v(" + L.name(a) + ") = 0");
    Valuation out(L.size());
    for (Elem x = 0; x < L.size(); ++x) out[x] = v[L.meet(x, a)] / v[a];
    return out;
}

}  // namespace pprob
