// Classical and Kleene semantics of formulas: worlds, truth values, meanings,
// logical consequence and Lindenbaum classes.
#pragma once

#include "formula.hpp"
#include "generation.hpp"
#include "partial_set.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pprob {

/// Values of K; the numeric codes match kleene_algebra() indices.
enum class Truth : std::uint8_t { f = 0, u = 1, t = 2 };

inline char to_char(Truth v) { return v == Truth::f ? '0' : v == Truth::u ? 'n' : '1'; }
inline Truth truth_min(Truth a, Truth b) { return std::min(a, b); }
inline Truth truth_max(Truth a, Truth b) { return std::max(a, b); }
inline Truth truth_neg(Truth a) { return static_cast<Truth>(2 - static_cast<int>(a)); }

inline std::size_t world_count(std::size_t n, LogicKind kind) {
    std::size_t c = 1;
    for (std::size_t i = 0; i < n; ++i) c *= kind == LogicKind::kleene ? 3 : 2;
    return c;
}

/// Largest arity whose worlds fit in a 64-bit set.
inline std::size_t max_arity(LogicKind kind) { return kind == LogicKind::kleene ? 3 : 6; }

inline void require_arity(std::size_t n, LogicKind kind) {
    if (n > max_arity(kind))
        throw PreconditionError(Precondition::cap_exceeded, "arity " + std::to_string(n) + " exceeds " +
                                                                std::to_string(max_arity(kind)) + " for " +
                                                                to_string(kind) + " worlds");
}

/// Worlds as strings, p0 first, counted with '0' < 'n' < '1' (classical: '0' < '1').
inline std::vector<std::string> enumerate_worlds(std::size_t n, LogicKind kind) {
    const std::string alphabet = kind == LogicKind::kleene ? "0n1" : "01";
    std::vector<std::string> out;
    const std::size_t total = world_count(n, kind);
    out.reserve(total);
    for (std::size_t code = 0; code < total; ++code) {
        std::string w(n, '0');
        std::size_t c = code;
        for (std::size_t i = n; i-- > 0; c /= alphabet.size()) w[i] = alphabet[c % alphabet.size()];
        out.push_back(std::move(w));
    }
    return out;
}

inline Truth truth_of_char(char c) {
    switch (c) {
        case '0': return Truth::f;
        case 'n': return Truth::u;
        case '1': return Truth::t;
    }
    throw std::invalid_argument(std::string("world symbol '") + c + "' is not one of 0, n, 1");
}

/// V_s(f) in K.
inline Truth eval_kleene(const Formula& f, const std::string& world) {
    using K = Formula::Kind;
    switch (f.kind()) {
        case K::var:
            if (f.index() >= world.size())
                throw PreconditionError(Precondition::unassigned_variable,
                                        "p" + std::to_string(f.index()) + " is outside world '" + world + "'");
            return truth_of_char(world[f.index()]);
        case K::zero: return Truth::f;
        case K::one: return Truth::t;
        case K::unknown: return Truth::u;
        case K::neg: return truth_neg(eval_kleene(f.operand(), world));
        case K::conj: return truth_min(eval_kleene(f.left(), world), eval_kleene(f.right(), world));
        case K::disj: return truth_max(eval_kleene(f.left(), world), eval_kleene(f.right(), world));
    }
    throw std::logic_error("unreachable formula kind");
}

inline bool eval_classical(const Formula& f, const std::string& world) {
    if (f.mentions_unknown())
        throw PreconditionError(Precondition::kind_mismatch, "constant n has no classical value");
    for (char c : world)
        if (c != '0' && c != '1') throw std::invalid_argument("classical world '" + world + "' must be over {0,1}");
    return eval_kleene(f, world) == Truth::t;
}

/// g(p_i) over K^n: (worlds with s_i = 1, worlds with s_i = 0).
inline PartialSet kleene_generator(std::size_t i, std::size_t n) {
    const std::size_t total = world_count(n, LogicKind::kleene);
    std::size_t stride = 1;
    for (std::size_t k = i + 1; k < n; ++k) stride *= 3;
    PartialSet g;
    for (std::size_t w = 0; w < total; ++w) {
        const std::size_t digit = (w / stride) % 3;  // 0 -> '0', 1 -> 'n', 2 -> '1'
        if (digit == 2) g.pos |= std::uint64_t{1} << w;
        if (digit == 0) g.neg |= std::uint64_t{1} << w;
    }
    return g;
}

inline void require_variables(const Formula& f, std::size_t n) {
    if (f.arity() > n)
        throw PreconditionError(Precondition::unassigned_variable,
                                "formula uses p" + std::to_string(f.arity() - 1) + " but the arity is " +
                                    std::to_string(n));
}

/// M(f) over D(K^n), built structurally from g and the constants.
inline PartialSet meaning_kleene(const Formula& f, std::size_t n) {
    require_arity(n, LogicKind::kleene);
    require_variables(f, n);
    std::vector<PartialSet> gens;
    for (std::size_t i = 0; i < n; ++i) gens.push_back(kleene_generator(i, n));
    return free_extension(PartialSetOps{world_count(n, LogicKind::kleene)}, gens, f);
}

/// M(f) rebuilt world by world from V_s: positive where V_s = 1, negative where V_s = 0.
inline PartialSet meaning_kleene_by_eval(const Formula& f, std::size_t n) {
    require_arity(n, LogicKind::kleene);
    require_variables(f, n);
    const auto worlds = enumerate_worlds(n, LogicKind::kleene);
    PartialSet m;
    for (std::size_t w = 0; w < worlds.size(); ++w) {
        const Truth v = eval_kleene(f, worlds[w]);
        if (v == Truth::t) m.pos |= std::uint64_t{1} << w;
        if (v == Truth::f) m.neg |= std::uint64_t{1} << w;
    }
    return m;
}

/// V_s read off a meaning: 1 in the positive models, 0 in the negative ones, n otherwise.
inline Truth truth_from_meaning(PartialSet m, std::size_t world_index) {
    const std::uint64_t bit = std::uint64_t{1} << world_index;
    return (m.pos & bit) ? Truth::t : (m.neg & bit) ? Truth::f : Truth::u;
}

namespace detail {

/// Worlds are numbered in enumeration order, so p_i is bit n-1-i of the index.
inline std::uint64_t classical_mask(const Formula& f, std::size_t n, std::uint64_t full) {
    using K = Formula::Kind;
    switch (f.kind()) {
        case K::var: {
            std::uint64_t m = 0;
            for (std::size_t w = 0; w < (std::size_t{1} << n); ++w)
                if ((w >> (n - 1 - f.index())) & 1) m |= std::uint64_t{1} << w;
            return m;
        }
        case K::zero: return 0;
        case K::one: return full;
        case K::unknown: throw PreconditionError(Precondition::kind_mismatch, "constant n has no classical meaning");
        case K::neg: return full & ~classical_mask(f.operand(), n, full);
        case K::conj: return classical_mask(f.left(), n, full) & classical_mask(f.right(), n, full);
        case K::disj: return classical_mask(f.left(), n, full) | classical_mask(f.right(), n, full);
    }
    throw std::logic_error("unreachable formula kind");
}

}  // namespace detail

/// The set of satisfying worlds of 2^n, as a bit mask.
inline std::uint64_t meaning_classical(const Formula& f, std::size_t n) {
    require_arity(n, LogicKind::classical);
    require_variables(f, n);
    return detail::classical_mask(f, n, full_mask(world_count(n, LogicKind::classical)));
}

/// Meaning as a partial set for either logic; classically (M, 2^n − M).
inline PartialSet lindenbaum_class(const Formula& f, std::size_t n, LogicKind kind) {
    if (kind == LogicKind::kleene) return meaning_kleene(f, n);
    const std::uint64_t m = meaning_classical(f, n);
    return {m, full_mask(world_count(n, kind)) & ~m};
}

inline bool equivalent(const Formula& f, const Formula& g, std::size_t n, LogicKind kind) {
    return lindenbaum_class(f, n, kind) == lindenbaum_class(g, n, kind);
}

struct ConsequenceResult {
    bool holds = true;
    std::optional<std::string> counter_world;  // first world in enumeration order
};

/// Γ ⊨ α. Kleene: ⊓M(Γ) ⊑ M(α), cross-checked against min V_s(Γ) <= V_s(α)
/// on every world. Classical: model inclusion. An empty Γ means {1}.
inline ConsequenceResult consequence(const std::vector<Formula>& premises, const Formula& conclusion, std::size_t n,
                                     LogicKind kind) {
    const auto worlds = enumerate_worlds(n, kind);
    ConsequenceResult r;
    if (kind == LogicKind::classical) {
        std::uint64_t models = full_mask(worlds.size());
        for (const auto& g : premises) models &= meaning_classical(g, n);
        const std::uint64_t bad = models & ~meaning_classical(conclusion, n);
        r.holds = bad == 0;
        for (std::size_t w = 0; w < worlds.size() && !r.holds; ++w)
            if (bad & (std::uint64_t{1} << w)) {
                r.counter_world = worlds[w];
                break;
            }
        return r;
    }
    const PartialSetOps ops{worlds.size()};
    PartialSet meet = ops.top();
    for (const auto& g : premises) meet = ps_meet(meet, meaning_kleene(g, n));
    const PartialSet m = meaning_kleene(conclusion, n);
    r.holds = ps_leq(meet, m);

    bool pointwise = true;
    for (std::size_t w = 0; w < worlds.size(); ++w) {
        Truth lhs = Truth::t;
        for (const auto& g : premises) lhs = truth_min(lhs, eval_kleene(g, worlds[w]));
        if (lhs > eval_kleene(conclusion, worlds[w])) {
            if (pointwise) r.counter_world = worlds[w];
            pointwise = false;
        }
    }
    if (pointwise != r.holds) throw std::logic_error("meaning and valuation forms of consequence disagree");
    return r;
}

struct LindenbaumAlgebra {
    std::size_t n = 0;
    std::vector<std::string> worlds;
    GeneratedSubalgebra<PartialSet> sub;  // members are meanings, witnesses are formulas
};

/// The subalgebra of D(K^n) generated by the g(p_i), with formula witnesses.
inline LindenbaumAlgebra kleene_lindenbaum_algebra(std::size_t n, std::size_t arity_cap = 2) {
    if (n > arity_cap)
        throw PreconditionError(Precondition::cap_exceeded,
                                "Lindenbaum algebra arity " + std::to_string(n) + " exceeds " + std::to_string(arity_cap));
    require_arity(n, LogicKind::kleene);
    auto worlds = enumerate_worlds(n, LogicKind::kleene);
    std::vector<PartialSet> gens;
    for (std::size_t i = 0; i < n; ++i) gens.push_back(kleene_generator(i, n));
    auto sub = generated_subalgebra(PartialSetOps{worlds.size()}, gens,
                                    [&worlds](const PartialSet& p) { return ps_name(p, worlds); });
    return {n, std::move(worlds), std::move(sub)};
}

}  // namespace pprob
