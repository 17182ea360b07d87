// Partial valuations on DMF-algebras: axioms, structure, isotonicity,
// decomposition through π(∇), relativization, conditioning and the Bayes
// identities.
#pragma once

#include "dmf.hpp"
#include "partial_set.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pprob {

/// Values indexed by algebra element.
using PartialValuation = std::vector<TValue>;

/// Laws in order: shape, axiom 1, axiom 2, axiom 3, axiom 4, range.
inline CheckResult is_partial_valuation(const DmfAlgebra& A, const PartialValuation& v) {
    if (v.size() != A.size()) return CheckResult::fail("shape", {}, "valuation is not total");
    if (!(v[A.bottom()] == TValue{0, 1}))
        return CheckResult::fail("axiom 1", {A.bottom()}, "v(0) = " + to_string(v[A.bottom()]));
    for (Elem a = 0; a < A.size(); ++a)
        for (Elem b = 0; b < A.size(); ++b)
            if (!(v[A.join(a, b)] == v[a] + v[b] - v[A.meet(a, b)])) return CheckResult::fail("axiom 2", {a, b});
    for (Elem a = 0; a < A.size(); ++a)
        if (!(v[A.neg(a)] == sigma(v[a]))) return CheckResult::fail("axiom 3", {a});
    for (Elem a = 0; a < A.size(); ++a)
        if (A.leq(A.fix(), a) && !precedes(TValue{0, 0}, v[a])) return CheckResult::fail("axiom 4", {a});
    for (Elem a = 0; a < A.size(); ++a)
        if (!in_T(v[a])) return CheckResult::fail("range", {a}, to_string(v[a]) + " is not in T");
    return CheckResult::pass();
}

struct StructuralReport {
    std::vector<std::pair<std::string, CheckResult>> items;

    bool all_pass() const {
        for (const auto& [name, r] : items)
            if (!r) return false;
        return true;
    }
};

/// The five consequences of the axioms, checked on every element.
inline StructuralReport structural_properties(const DmfAlgebra& A, const PartialValuation& v) {
    StructuralReport rep;
    const Elem n = A.fix();
    rep.items.emplace_back("v(1) = (1, 0)", v[A.top()] == TValue{1, 0} ? CheckResult::pass()
                                                                        : CheckResult::fail("v(1) = (1, 0)", {A.top()}));
    rep.items.emplace_back("v(n) = (0, 0)",
                           v[n] == TValue{0, 0} ? CheckResult::pass() : CheckResult::fail("v(n) = (0, 0)", {n}));
    auto each = [&](const std::string& law, auto&& holds) {
        for (Elem a = 0; a < A.size(); ++a)
            if (!holds(a)) return CheckResult::fail(law, {a});
        return CheckResult::pass();
    };
    const std::string l3 = "a <= n implies v(a) <= (0, 0)";
    rep.items.emplace_back(l3, each(l3, [&](Elem a) { return !A.leq(a, n) || precedes(v[a], TValue{0, 0}); }));
    const std::string l4 = "v(a) = v(a & n) + v(a | n)";
    rep.items.emplace_back(l4, each(l4, [&](Elem a) { return v[a] == v[A.meet(a, n)] + v[A.join(a, n)]; }));
    const std::string l5 = "v(a) = (v(a | n)_0, v(~a | n)_0)";
    rep.items.emplace_back(l5, each(l5, [&](Elem a) {
                               return v[a] == TValue{v[A.join(a, n)].first, v[A.join(A.neg(a), n)].first};
                           }));
    return rep;
}

/// x <= y implies v(x) ≼ v(y); the witness is the first offending pair.
inline CheckResult is_isotone(const DmfAlgebra& A, const PartialValuation& v) {
    for (Elem x = 0; x < A.size(); ++x)
        for (Elem y = 0; y < A.size(); ++y)
            if (A.leq(x, y) && !precedes(v[x], v[y])) return CheckResult::fail("isotone", {x, y});
    return CheckResult::pass();
}

/// v ∘ φ.
inline PartialValuation pullback_partial_valuation(const DmfMorphism& phi, const PartialValuation& v) {
    if (v.size() != phi.target().size()) throw std::invalid_argument("valuation does not match the morphism target");
    PartialValuation out;
    out.reserve(phi.source().size());
    for (Elem x = 0; x < phi.source().size(); ++x) out.push_back(v[phi(x)]);
    return out;
}

struct InducedPartialValuation {
    PiAlgebra pi;
    PartialValuation values;
};

/// v̄(x,y) = (v(x), v(y)) on π(L).
inline InducedPartialValuation induced_partial_valuation(const FiniteLattice& L, const Valuation& v) {
    if (v.size() != L.size()) throw std::invalid_argument("valuation is not total");
    auto pi = pi_construction(L);
    PartialValuation out;
    for (auto [a, b] : pi.pairs) out.push_back({v[a], v[b]});
    return {std::move(pi), std::move(out)};
}

struct NablaValuation {
    NablaLattice nabla;
    Valuation values;  // indexed by ∇ element
};

/// v(x) = v̄(x)_0 on ∇ with bottom n and top 1.
inline NablaValuation extract_nabla_valuation(const DmfAlgebra& A, const PartialValuation& v) {
    auto nab = nabla_lattice(A);
    Valuation out;
    for (Elem x : nab.members) out.push_back(v.at(x).first);
    return {std::move(nab), std::move(out)};
}

struct Decomposition {
    NablaEmbedding embedding;   // φ : A -> π(∇)
    Valuation nabla_values;     // v on ∇
    PartialValuation induced;   // v̄_v on π(∇)
};

/// v̄(b) = v̄_v(φ(b)) for every b.
inline CheckResult decomposition_identity(const DmfAlgebra& A, const PartialValuation& v, const Decomposition& d) {
    for (Elem b = 0; b < A.size(); ++b)
        if (!(v[b] == d.induced[d.embedding.phi(b)])) return CheckResult::fail("decomposition", {b});
    return CheckResult::pass();
}

inline Decomposition decompose(const DmfAlgebra& A, const PartialValuation& v) {
    auto emb = embed_into_pi_nabla(A);
    Valuation nv;
    for (Elem x : emb.nabla.members) nv.push_back(v.at(x).first);
    PartialValuation induced;
    for (auto [a, b] : emb.pi.pairs) induced.push_back({nv[a], nv[b]});
    Decomposition d{std::move(emb), std::move(nv), std::move(induced)};
    if (auto r = decomposition_identity(A, v, d); !r)
        throw std::logic_error("decomposition identity fails at " + A.name(r.witness[0]));
    return d;
}

/// p(i) = μ({i},∅)_0 on a full D(S); checks μ(A,B) = (p(A), p(B)) everywhere.
inline std::vector<Rational> recover_classical(const PartialField& F, const PartialMeasure& mu) {
    std::size_t full = 1;
    for (std::size_t i = 0; i < F.space().size(); ++i) full *= 3;
    if (F.size() != full) throw PreconditionError(Precondition::not_full_field, "field is not the whole of D(S)");
    std::vector<Rational> p;
    for (std::size_t i = 0; i < F.space().size(); ++i) p.push_back(mu.at(*F.index_of({std::uint64_t{1} << i, 0})).first);
    for (Elem x = 0; x < F.size(); ++x) {
        const auto& m = F.members()[x];
        if (!(mu[x] == TValue{mask_weight(m.pos, p), mask_weight(m.neg, p)}))
            throw std::logic_error("measure at " + F.name(x) + " is not the associated measure");
    }
    return p;
}

/// u(a) = 1 - (v(a)_0 + v(a)_1).
inline Rational indetermination(const PartialValuation& v, Elem a) { return 1 - (v.at(a).first + v.at(a).second); }

/// θ(a) = v(a)_1 / v(a)_0.
inline Rational bias(const PartialValuation& v, Elem a) {
    if (v.at(a).first == 0) throw PreconditionError(Precondition::zero_measure, "first component is zero");
    return v[a].second / v[a].first;
}

// ---------------------------------------------------------------------------
// Relativization and conditioning

struct ConditionContext {
    DmfAlgebra algebra;
    Elem h;
    IntervalDmf interval;
    PartialValuation values;  // v̄_h, indexed by interval element
};

/// Checks, in order, h ∈ ∇, isotonicity of v, and v(h)_0 != 0.
inline void require_condition(const DmfAlgebra& A, const PartialValuation& v, Elem h) {
    if (!in_nabla(A, h)) throw PreconditionError(Precondition::not_in_nabla, A.name(h) + " is not in [n,1]");
    if (auto r = is_isotone(A, v); !r)
        throw PreconditionError(Precondition::not_isotone,
                                "valuation is not isotone at " + A.name(r.witness[0]) + " <= " + A.name(r.witness[1]));
    if (v[h].first == 0)
        throw PreconditionError(Precondition::zero_measure, "first component of v(" + A.name(h) + ") is zero");
}

/// v̄_h(x) = v̄(x) / v̄(h)_0 on [¬h, h].
inline ConditionContext relativized_partial_valuation(const DmfAlgebra& A, const PartialValuation& v, Elem h) {
    require_condition(A, v, h);
    auto iv = interval_dmf(A, h);
    const Rational k = 1 / v[h].first;
    PartialValuation vh;
    for (Elem x : iv.members) vh.push_back(v[x] * k);
    return ConditionContext{A, h, std::move(iv), std::move(vh)};
}

/// v̄(x|h) = v̄_h((x ∨ ¬h) ∧ h).
inline PartialValuation conditional_partial_valuation(const DmfAlgebra& A, const PartialValuation& v, Elem h) {
    auto ctx = relativized_partial_valuation(A, v, h);
    return pullback_partial_valuation(ctx.interval.projection, ctx.values);
}

struct IdentitySides {
    TValue lhs;
    TValue rhs;
    bool holds() const { return lhs == rhs; }
};

/// v̄(h|e) against v̄(e|h) · v̄(h)_0 / v̄(e)_0, for h, e ∈ ∇.
inline IdentitySides weak_bayes(const DmfAlgebra& A, const PartialValuation& v, Elem h, Elem e) {
    require_condition(A, v, h);
    require_condition(A, v, e);
    const TValue lhs = conditional_partial_valuation(A, v, e)[h];
    const TValue rhs = conditional_partial_valuation(A, v, h)[e] * (v[h].first / v[e].first);
    return {lhs, rhs};
}

struct PosNegParts {
    Elem plus;   // e ∨ n
    Elem minus;  // ¬e ∨ n
    Elem both;   // e ∨ ¬e
};

inline PosNegParts posneg_parts(const DmfAlgebra& A, Elem e) {
    return {A.join(e, A.fix()), A.join(A.neg(e), A.fix()), A.join(e, A.neg(e))};
}

struct PosNegIdentity {
    TValue lhs;          // v̄(h|e⁺)
    TValue rhs;          // v̄(h|∇e)(1+θ) − v̄(h|e⁻)θ
    TValue given_plus;   // v̄(h|e⁺)
    TValue given_both;   // v̄(h|∇e)
    TValue given_minus;  // v̄(h|e⁻)
    Rational theta;
    bool holds() const { return lhs == rhs; }
};

/// The three conditionals on e⁺, ∇e and e⁻, computed once per e.
struct PosNegConditionals {
    PosNegParts parts;
    PartialValuation given_plus;
    PartialValuation given_both;
    PartialValuation given_minus;
    Rational theta;

    PosNegIdentity at(Elem h) const {
        PosNegIdentity out;
        out.given_plus = given_plus.at(h);
        out.given_both = given_both.at(h);
        out.given_minus = given_minus.at(h);
        out.theta = theta;
        out.lhs = out.given_plus;
        out.rhs = out.given_both * (1 + theta) - out.given_minus * theta;
        return out;
    }
};

/// Also asserts v̄(e⁺)_0 = v̄(e)_0.
inline PosNegConditionals posneg_conditionals(const DmfAlgebra& A, const PartialValuation& v, Elem e) {
    if (auto r = is_isotone(A, v); !r)
        throw PreconditionError(Precondition::not_isotone, "valuation is not isotone");
    if (v[e].first == 0 || v[e].second == 0)
        throw PreconditionError(Precondition::zero_measure,
                                "v(" + A.name(e) + ") = " + to_string(v[e]) + " needs both components nonzero");
    const auto parts = posneg_parts(A, e);
    if (v[parts.plus].first != v[e].first) throw std::logic_error("v(e+)_0 differs from v(e)_0");
    return PosNegConditionals{parts, conditional_partial_valuation(A, v, parts.plus),
                              conditional_partial_valuation(A, v, parts.both),
                              conditional_partial_valuation(A, v, parts.minus), bias(v, e)};
}

inline PosNegIdentity posneg_conditional_identity(const DmfAlgebra& A, const PartialValuation& v, Elem h, Elem e) {
    return posneg_conditionals(A, v, e).at(h);
}

}  // namespace pprob
