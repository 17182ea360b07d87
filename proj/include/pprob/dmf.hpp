// Finite DMF-algebras: bounded distributive lattices with an involutive
// De Morgan negation that satisfies normality and has the fixed point n.
#pragma once

#include "diagnostics.hpp"
#include "lattice.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace pprob {

struct DmfTables {
    LatticeTables lattice;
    std::vector<Elem> neg;
    Elem fix = 0;
};

/// Negation laws checked on top of a certified distributive lattice, in order.
inline const std::vector<std::string>& dmf_negation_laws() {
    static const std::vector<std::string> laws{"double negation", "de morgan", "normality", "fixed point",
                                               "fixed point uniqueness"};
    return laws;
}

/// One negation law, evaluated on its own. `neg` must already have the right shape.
inline CheckResult check_dmf_law(const FiniteLattice& L, const std::vector<Elem>& neg, Elem fix, const std::string& law) {
    const std::size_t n = L.size();
    if (law == "double negation") {
        for (Elem a = 0; a < n; ++a)
            if (neg[neg[a]] != a) return CheckResult::fail(law, {a});
    } else if (law == "de morgan") {
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b)
                if (neg[L.meet(a, b)] != L.join(neg[a], neg[b])) return CheckResult::fail(law, {a, b});
    } else if (law == "normality") {
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b)
                if (!L.leq(L.meet(a, neg[a]), L.join(b, neg[b]))) return CheckResult::fail(law, {a, b});
    } else if (law == "fixed point") {
        if (neg[fix] != fix) return CheckResult::fail(law, {fix}, "negation does not fix n");
    } else if (law == "fixed point uniqueness") {
        for (Elem a = 0; a < n; ++a)
            if (a != fix && neg[a] == a) return CheckResult::fail(law, {fix, a});
    } else {
        throw std::invalid_argument("unknown DMF law '" + law + "'");
    }
    return CheckResult::pass();
}

/// Shape of the negation table and fixed point against a lattice of `n` elements.
inline CheckResult check_dmf_shape(std::size_t n, const std::vector<Elem>& neg, Elem fix) {
    if (neg.size() != n) return CheckResult::fail("shape", {}, "negation table has wrong length");
    for (Elem e : neg)
        if (e >= n) return CheckResult::fail("shape", {}, "negation value out of range");
    if (fix >= n) return CheckResult::fail("shape", {}, "fixed point index out of range");
    return CheckResult::pass();
}

/// First violated law, in the order: lattice laws, distributivity, shape,
/// double negation, de morgan, normality, fixed point, fixed point uniqueness.
inline CheckResult diagnose_dmf(const DmfTables& t) {
    if (auto d = diagnose_lattice(t.lattice); !d) return d;
    auto L = FiniteLattice::certify(t.lattice);
    if (auto d = check_distributive(L); !d) return d;
    if (auto d = check_dmf_shape(L.size(), t.neg, t.fix); !d) return d;
    for (const auto& law : dmf_negation_laws())
        if (auto d = check_dmf_law(L, t.neg, t.fix, law); !d) return d;
    return CheckResult::pass();
}

/// Immutable certified DMF-algebra. Copies share the tables.
class DmfAlgebra {
public:
    static DmfAlgebra certify(DmfTables t) {
        if (auto d = diagnose_dmf(t); !d) throw ValidationError(std::move(d));
        return DmfAlgebra(FiniteLattice::certify(std::move(t.lattice)), std::move(t.neg), t.fix);
    }

    static DmfAlgebra certify(const FiniteLattice& L, std::vector<Elem> neg, Elem fix) {
        return certify(DmfTables{L.tables(), std::move(neg), fix});
    }

    const FiniteLattice& lattice() const noexcept { return data_->lattice; }
    std::size_t size() const noexcept { return data_->lattice.size(); }
    Elem meet(Elem a, Elem b) const noexcept { return data_->lattice.meet(a, b); }
    Elem join(Elem a, Elem b) const noexcept { return data_->lattice.join(a, b); }
    Elem neg(Elem a) const noexcept { return data_->neg[a]; }
    bool leq(Elem a, Elem b) const noexcept { return data_->lattice.leq(a, b); }
    Elem bottom() const noexcept { return data_->lattice.bottom(); }
    Elem top() const noexcept { return data_->lattice.top(); }
    Elem fix() const noexcept { return data_->fix; }
    const std::string& name(Elem a) const { return data_->lattice.name(a); }
    const std::vector<std::string>& names() const noexcept { return data_->lattice.names(); }
    std::optional<Elem> find(const std::string& s) const { return data_->lattice.find(s); }
    std::vector<Elem> elements() const { return data_->lattice.elements(); }
    const std::vector<Elem>& neg_table() const noexcept { return data_->neg; }

    DmfTables tables() const { return DmfTables{lattice().tables(), data_->neg, data_->fix}; }

    friend bool operator==(const DmfAlgebra& a, const DmfAlgebra& b) {
        if (a.data_ == b.data_) return true;
        return a.data_->fix == b.data_->fix && a.data_->neg == b.data_->neg && a.lattice() == b.lattice();
    }

private:
    struct Data {
        FiniteLattice lattice;
        std::vector<Elem> neg;
        Elem fix;
    };
    DmfAlgebra(FiniteLattice L, std::vector<Elem> neg, Elem fix)
        : data_(std::make_shared<const Data>(Data{std::move(L), std::move(neg), fix})) {}
    std::shared_ptr<const Data> data_;
};

inline DmfAlgebra validate_dmf(DmfTables candidate) { return DmfAlgebra::certify(std::move(candidate)); }

/// The three-element Kleene algebra K; indices 0 = "0", 1 = "n", 2 = "1".
inline DmfAlgebra kleene_algebra() {
    auto L = FiniteLattice::from_operations(
        {"0", "n", "1"}, [](Elem a, Elem b) { return std::min(a, b); }, [](Elem a, Elem b) { return std::max(a, b); },
        0, 2);
    return DmfAlgebra::certify(L, {2, 1, 0}, 1);
}

// ---------------------------------------------------------------------------
// Morphisms

class DmfMorphism {
public:
    static DmfMorphism certify(DmfAlgebra source, DmfAlgebra target, std::vector<Elem> map) {
        if (auto d = check(source, target, map); !d) throw ValidationError(std::move(d));
        return DmfMorphism(std::move(source), std::move(target), std::move(map));
    }

    /// Preservation of 0, 1, n, negation, meet and join, in that order.
    static CheckResult check(const DmfAlgebra& s, const DmfAlgebra& t, const std::vector<Elem>& map) {
        if (map.size() != s.size()) return CheckResult::fail("shape", {}, "map is not total");
        for (Elem e : map)
            if (e >= t.size()) return CheckResult::fail("shape", {}, "map value out of range");
        if (map[s.bottom()] != t.bottom()) return CheckResult::fail("preserves 0", {s.bottom()});
        if (map[s.top()] != t.top()) return CheckResult::fail("preserves 1", {s.top()});
        if (map[s.fix()] != t.fix()) return CheckResult::fail("preserves n", {s.fix()});
        for (Elem a = 0; a < s.size(); ++a)
            if (map[s.neg(a)] != t.neg(map[a])) return CheckResult::fail("preserves negation", {a});
        for (Elem a = 0; a < s.size(); ++a)
            for (Elem b = 0; b < s.size(); ++b) {
                if (map[s.meet(a, b)] != t.meet(map[a], map[b])) return CheckResult::fail("preserves meet", {a, b});
                if (map[s.join(a, b)] != t.join(map[a], map[b])) return CheckResult::fail("preserves join", {a, b});
            }
        return CheckResult::pass();
    }

    static DmfMorphism identity(const DmfAlgebra& A) { return DmfMorphism(A, A, A.elements()); }

    const DmfAlgebra& source() const noexcept { return source_; }
    const DmfAlgebra& target() const noexcept { return target_; }
    const std::vector<Elem>& map() const noexcept { return map_; }
    Elem operator()(Elem a) const { return map_.at(a); }

    bool injective() const {
        std::vector<bool> hit(target_.size(), false);
        for (Elem e : map_) {
            if (hit[e]) return false;
            hit[e] = true;
        }
        return true;
    }
    bool surjective() const {
        std::vector<bool> hit(target_.size(), false);
        for (Elem e : map_) hit[e] = true;
        return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
    }

private:
    DmfMorphism(DmfAlgebra s, DmfAlgebra t, std::vector<Elem> m)
        : source_(std::move(s)), target_(std::move(t)), map_(std::move(m)) {}
    DmfAlgebra source_;
    DmfAlgebra target_;
    std::vector<Elem> map_;
};

/// Backtracking search for an order- and negation-preserving bijection.
inline std::optional<std::vector<Elem>> find_dmf_isomorphism(const DmfAlgebra& a, const DmfAlgebra& b) {
    if (a.size() != b.size()) return std::nullopt;
    const std::size_t n = a.size();
    auto profile = [](const DmfAlgebra& A, Elem x) {
        std::size_t below = 0, above = 0;
        for (Elem y = 0; y < A.size(); ++y) {
            below += A.leq(y, x);
            above += A.leq(x, y);
        }
        return std::tuple{below, above, A.neg(x) == x};
    };
    std::vector<Elem> map(n, n);
    std::vector<bool> used(n, false);
    std::function<bool(Elem)> extend = [&](Elem x) -> bool {
        if (x == n) return true;
        for (Elem y = 0; y < n; ++y) {
            if (used[y] || profile(a, x) != profile(b, y)) continue;
            bool ok = true;
            for (Elem z = 0; z < x && ok; ++z) {
                ok = (a.leq(z, x) == b.leq(map[z], y)) && (a.leq(x, z) == b.leq(y, map[z]));
                if (ok && a.neg(x) == z) ok = b.neg(y) == map[z];
            }
            if (!ok) continue;
            map[x] = y;
            used[y] = true;
            if (extend(x + 1)) return true;
            used[y] = false;
        }
        return false;
    };
    if (!extend(0)) return std::nullopt;
    if (!DmfMorphism::check(a, b, map)) return std::nullopt;
    return map;
}

// ---------------------------------------------------------------------------
// Distinguished subsets

/// [n,1] as {x : n <= x}.
inline std::vector<Elem> nabla_by_order(const DmfAlgebra& A) {
    std::vector<Elem> out;
    for (Elem x = 0; x < A.size(); ++x)
        if (A.leq(A.fix(), x)) out.push_back(x);
    return out;
}

/// [n,1] as {x ∨ ¬x}.
inline std::vector<Elem> nabla_by_image(const DmfAlgebra& A) {
    std::vector<bool> hit(A.size(), false);
    for (Elem x = 0; x < A.size(); ++x) hit[A.join(x, A.neg(x))] = true;
    std::vector<Elem> out;
    for (Elem x = 0; x < A.size(); ++x)
        if (hit[x]) out.push_back(x);
    return out;
}

inline std::vector<Elem> delta_by_order(const DmfAlgebra& A) {
    std::vector<Elem> out;
    for (Elem x = 0; x < A.size(); ++x)
        if (A.leq(x, A.fix())) out.push_back(x);
    return out;
}

inline std::vector<Elem> delta_by_image(const DmfAlgebra& A) {
    std::vector<bool> hit(A.size(), false);
    for (Elem x = 0; x < A.size(); ++x) hit[A.meet(x, A.neg(x))] = true;
    std::vector<Elem> out;
    for (Elem x = 0; x < A.size(); ++x)
        if (hit[x]) out.push_back(x);
    return out;
}

/// Both characterizations are computed; a mismatch means a broken certificate.
inline std::vector<Elem> nabla(const DmfAlgebra& A) {
    auto a = nabla_by_order(A);
    if (a != nabla_by_image(A)) throw std::logic_error("nabla characterizations disagree");
    return a;
}

inline std::vector<Elem> delta(const DmfAlgebra& A) {
    auto a = delta_by_order(A);
    if (a != delta_by_image(A)) throw std::logic_error("delta characterizations disagree");
    return a;
}

inline bool in_nabla(const DmfAlgebra& A, Elem x) { return A.leq(A.fix(), x); }

/// {x : x ∨ ¬x = 1}.
inline std::vector<Elem> boolean_elements(const DmfAlgebra& A) {
    std::vector<Elem> out;
    for (Elem x = 0; x < A.size(); ++x)
        if (A.join(x, A.neg(x)) == A.top()) out.push_back(x);
    return out;
}

/// Restricts the lattice operations to a subset closed under meet and join
/// that contains `bottom` and `top`. Element order follows `members`.
inline FiniteLattice sublattice(const FiniteLattice& L, const std::vector<Elem>& members, Elem bottom, Elem top) {
    std::vector<Elem> local(L.size(), L.size());
    for (Elem i = 0; i < members.size(); ++i) local[members[i]] = i;
    auto at = [&](Elem x) {
        if (local[x] == L.size()) throw ValidationError(CheckResult::fail("closure", {x}, "subset is not closed"));
        return local[x];
    };
    std::vector<std::string> names;
    for (Elem x : members) names.push_back(L.name(x));
    return FiniteLattice::from_operations(
        std::move(names), [&](Elem a, Elem b) { return at(L.meet(members[a], members[b])); },
        [&](Elem a, Elem b) { return at(L.join(members[a], members[b])); }, at(bottom), at(top));
}

// ---------------------------------------------------------------------------
// The pair construction π(L)

struct PiAlgebra {
    DmfAlgebra algebra;
    std::vector<std::pair<Elem, Elem>> pairs;  // index -> (a, b) in the source lattice

    std::optional<Elem> index_of(Elem a, Elem b) const {
        for (Elem i = 0; i < pairs.size(); ++i)
            if (pairs[i] == std::pair{a, b}) return i;
        return std::nullopt;
    }
};

/// Pairs (a,b) with a ∧ b = 0, in lexicographic index order.
inline PiAlgebra pi_construction(const FiniteLattice& L) {
    if (!L.distributive())
        throw PreconditionError(Precondition::not_distributive, "pair construction needs a distributive lattice");
    const std::size_t n = L.size();
    std::vector<std::pair<Elem, Elem>> pairs;
    std::vector<Elem> index(n * n, n * n);
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            if (L.meet(a, b) == L.bottom()) {
                index[a * n + b] = pairs.size();
                pairs.emplace_back(a, b);
            }
    auto at = [&](Elem a, Elem b) { return index[a * n + b]; };
    std::vector<std::string> names;
    for (auto [a, b] : pairs) names.push_back("(" + L.name(a) + "," + L.name(b) + ")");
    auto lat = FiniteLattice::from_operations(
        std::move(names),
        [&](Elem x, Elem y) { return at(L.meet(pairs[x].first, pairs[y].first), L.join(pairs[x].second, pairs[y].second)); },
        [&](Elem x, Elem y) { return at(L.join(pairs[x].first, pairs[y].first), L.meet(pairs[x].second, pairs[y].second)); },
        at(L.bottom(), L.top()), at(L.top(), L.bottom()));
    std::vector<Elem> neg(pairs.size());
    for (Elem i = 0; i < pairs.size(); ++i) neg[i] = at(pairs[i].second, pairs[i].first);
    auto A = DmfAlgebra::certify(lat, std::move(neg), at(L.bottom(), L.bottom()));
    return PiAlgebra{std::move(A), std::move(pairs)};
}

/// ∇ as a bounded lattice with bottom n and top 1; `members` maps back into A.
struct NablaLattice {
    FiniteLattice lattice;
    std::vector<Elem> members;
    std::vector<Elem> local;  // A index -> ∇ index, or A.size() outside ∇
};

inline NablaLattice nabla_lattice(const DmfAlgebra& A) {
    auto members = nabla(A);
    auto L = sublattice(A.lattice(), members, A.fix(), A.top());
    std::vector<Elem> local(A.size(), A.size());
    for (Elem i = 0; i < members.size(); ++i) local[members[i]] = i;
    return NablaLattice{std::move(L), std::move(members), std::move(local)};
}

struct NablaEmbedding {
    NablaLattice nabla;
    PiAlgebra pi;
    DmfMorphism phi;  // x -> (x ∨ n, ¬x ∨ n)
};

inline Elem positive_part(const DmfAlgebra& A, Elem x) { return A.join(x, A.fix()); }
inline Elem negative_part(const DmfAlgebra& A, Elem x) { return A.join(A.neg(x), A.fix()); }

/// The monomorphism A -> π(∇_A).
inline NablaEmbedding embed_into_pi_nabla(const DmfAlgebra& A) {
    auto nab = nabla_lattice(A);
    auto pi = pi_construction(nab.lattice);
    std::vector<Elem> map(A.size());
    for (Elem x = 0; x < A.size(); ++x) {
        auto i = pi.index_of(nab.local[positive_part(A, x)], nab.local[negative_part(A, x)]);
        if (!i) throw std::logic_error("embedding image is not a disjoint pair");
        map[x] = *i;
    }
    auto phi = DmfMorphism::certify(A, pi.algebra, std::move(map));
    if (!phi.injective()) throw std::logic_error("embedding into pi(nabla) is not injective");
    return NablaEmbedding{std::move(nab), std::move(pi), std::move(phi)};
}

// ---------------------------------------------------------------------------
// Interval algebra [¬a, a]

struct IntervalDmf {
    DmfAlgebra algebra;
    std::vector<Elem> members;  // interval index -> A index
    std::vector<Elem> local;    // A index -> interval index, or A.size()
    DmfMorphism projection;     // x -> (x ∨ ¬a) ∧ a
};

inline IntervalDmf interval_dmf(const DmfAlgebra& A, Elem a) {
    const Elem na = A.neg(a);
    if (!A.leq(na, a))
        throw PreconditionError(Precondition::not_in_nabla, "~" + A.name(a) + " is not below " + A.name(a));
    if (a == A.fix()) throw PreconditionError(Precondition::zero_measure, "[n, n] has a single element");
    std::vector<Elem> members;
    std::vector<Elem> local(A.size(), A.size());
    for (Elem x = 0; x < A.size(); ++x)
        if (A.leq(na, x) && A.leq(x, a)) {
            local[x] = members.size();
            members.push_back(x);
        }
    auto L = sublattice(A.lattice(), members, na, a);
    std::vector<Elem> neg(members.size());
    for (Elem i = 0; i < members.size(); ++i) neg[i] = local[A.neg(members[i])];
    auto B = DmfAlgebra::certify(L, std::move(neg), local[A.fix()]);
    std::vector<Elem> map(A.size());
    for (Elem x = 0; x < A.size(); ++x) {
        Elem f1 = A.meet(A.join(x, na), a);
        Elem f2 = A.join(A.meet(x, a), na);
        if (f1 != f2) throw std::logic_error("interval projection forms disagree");
        map[x] = local[f1];
    }
    auto f = DmfMorphism::certify(A, B, std::move(map));
    return IntervalDmf{std::move(B), std::move(members), std::move(local), std::move(f)};
}

}  // namespace pprob
