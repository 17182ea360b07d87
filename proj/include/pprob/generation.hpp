// Subalgebras generated by a set of elements, with formula witnesses, and
// evaluation of formulas in an algebra under a generator assignment.
#pragma once

#include "dmf.hpp"
#include "formula.hpp"
#include "partial_set.hpp"

#include <concepts>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pprob {

/// Anything with the DMF signature over copyable, ordered values.
template <class M>
concept DmfModel = requires(const M& m, typename M::value_type a) {
    { m.meet(a, a) } -> std::convertible_to<typename M::value_type>;
    { m.join(a, a) } -> std::convertible_to<typename M::value_type>;
    { m.neg(a) } -> std::convertible_to<typename M::value_type>;
    { m.bottom() } -> std::convertible_to<typename M::value_type>;
    { m.top() } -> std::convertible_to<typename M::value_type>;
    { m.fix() } -> std::convertible_to<typename M::value_type>;
    { a < a } -> std::convertible_to<bool>;
};

/// A certified DmfAlgebra seen through the generic signature.
struct TableOps {
    using value_type = Elem;
    DmfAlgebra algebra;

    Elem meet(Elem a, Elem b) const { return algebra.meet(a, b); }
    Elem join(Elem a, Elem b) const { return algebra.join(a, b); }
    Elem neg(Elem a) const { return algebra.neg(a); }
    Elem bottom() const { return algebra.bottom(); }
    Elem top() const { return algebra.top(); }
    Elem fix() const { return algebra.fix(); }
};

/// Evaluates `f` in the model with p_i ↦ assignment[i].
template <DmfModel M>
typename M::value_type free_extension(const M& model, const std::vector<typename M::value_type>& assignment,
                                      const Formula& f) {
    using K = Formula::Kind;
    switch (f.kind()) {
        case K::var:
            if (f.index() >= assignment.size())
                throw PreconditionError(Precondition::unassigned_variable,
                                        "p" + std::to_string(f.index()) + " has no assigned element");
            return assignment[f.index()];
        case K::zero: return model.bottom();
        case K::one: return model.top();
        case K::unknown: return model.fix();
        case K::neg: return model.neg(free_extension(model, assignment, f.operand()));
        case K::conj:
            return model.meet(free_extension(model, assignment, f.left()), free_extension(model, assignment, f.right()));
        case K::disj:
            return model.join(free_extension(model, assignment, f.left()), free_extension(model, assignment, f.right()));
    }
    throw std::logic_error("unreachable formula kind");
}

inline Elem free_extension(const DmfAlgebra& A, const std::vector<Elem>& assignment, const Formula& f) {
    return free_extension(TableOps{A}, assignment, f);
}

template <class V>
struct GeneratedSubalgebra {
    std::vector<V> members;          // ascending in the model's order
    std::vector<Formula> witnesses;  // witnesses[i] evaluates to members[i]
    DmfAlgebra algebra;              // same element order as members

    std::optional<Elem> index_of(const V& v) const {
        auto it = std::lower_bound(members.begin(), members.end(), v);
        if (it == members.end() || *it < v || v < *it) return std::nullopt;
        return static_cast<Elem>(it - members.begin());
    }
};

namespace detail {

struct Candidate {
    std::size_t depth;
    std::string text;
    std::optional<Formula> formula;

    bool better_than(const Candidate& o) const {
        if (!o.formula) return true;
        if (depth != o.depth) return depth < o.depth;
        return text < o.text;
    }
};

}  // namespace detail

/// Breadth-first saturation from the constants and generators. Level k holds
/// the values first reached by a term of depth k; each value keeps the least
/// (depth, printed text) term built from the witnesses of earlier levels.
template <DmfModel M>
GeneratedSubalgebra<typename M::value_type> generated_subalgebra(
    const M& model, const std::vector<typename M::value_type>& generators,
    std::function<std::string(const typename M::value_type&)> namer = {}, std::size_t cap = 4096) {
    using V = typename M::value_type;
    std::map<V, detail::Candidate> found;
    auto offer = [](std::map<V, detail::Candidate>& into, const V& v, Formula f) {
        detail::Candidate c{f.depth(), print(f), f};
        auto it = into.find(v);
        if (it == into.end())
            into.emplace(v, std::move(c));
        else if (c.better_than(it->second))
            it->second = std::move(c);
    };

    std::map<V, detail::Candidate> level;
    offer(level, model.bottom(), Formula::zero());
    offer(level, model.top(), Formula::one());
    offer(level, model.fix(), Formula::unknown());
    for (std::size_t i = 0; i < generators.size(); ++i) offer(level, generators[i], Formula::var(i));

    std::vector<std::pair<V, Formula>> old_items, new_items;
    while (!level.empty()) {
        for (auto& [v, c] : level) {
            found.emplace(v, c);
            new_items.emplace_back(v, *c.formula);
        }
        if (found.size() > cap)
            throw PreconditionError(Precondition::cap_exceeded,
                                    "generated subalgebra exceeds " + std::to_string(cap) + " elements");
        std::map<V, detail::Candidate> next;
        auto consider = [&](const V& v, Formula f) {
            if (!found.count(v)) offer(next, v, std::move(f));
        };
        for (const auto& [a, fa] : new_items) consider(model.neg(a), ~fa);
        for (const auto& [a, fa] : new_items) {
            for (const auto& [b, fb] : new_items) {
                consider(model.meet(a, b), fa & fb);
                consider(model.join(a, b), fa | fb);
            }
            for (const auto& [b, fb] : old_items) {
                consider(model.meet(a, b), fa & fb);
                consider(model.meet(b, a), fb & fa);
                consider(model.join(a, b), fa | fb);
                consider(model.join(b, a), fb | fa);
            }
        }
        old_items.insert(old_items.end(), new_items.begin(), new_items.end());
        new_items.clear();
        level = std::move(next);
    }

    GeneratedSubalgebra<V> out{{}, {}, kleene_algebra()};
    for (auto& [v, c] : found) {
        out.members.push_back(v);
        out.witnesses.push_back(*c.formula);
    }
    const auto& mem = out.members;
    auto at = [&](const V& v) { return *out.index_of(v); };
    std::vector<std::string> names;
    for (Elem i = 0; i < mem.size(); ++i) names.push_back(namer ? namer(mem[i]) : print(out.witnesses[i]));
    auto L = FiniteLattice::from_operations(
        std::move(names), [&](Elem a, Elem b) { return at(model.meet(mem[a], mem[b])); },
        [&](Elem a, Elem b) { return at(model.join(mem[a], mem[b])); }, at(model.bottom()), at(model.top()));
    std::vector<Elem> neg(mem.size());
    for (Elem i = 0; i < mem.size(); ++i) neg[i] = at(model.neg(mem[i]));
    out.algebra = DmfAlgebra::certify(L, std::move(neg), at(model.fix()));
    return out;
}

/// Convenience overload for table algebras; element names are inherited.
inline GeneratedSubalgebra<Elem> generated_subalgebra(const DmfAlgebra& A, const std::vector<Elem>& generators) {
    return generated_subalgebra(TableOps{A}, generators, [&A](const Elem& e) { return A.name(e); });
}

}  // namespace pprob
