// Probability functions on sentences, grounded in world weights, and audits
// of the probability axioms over finite formula corpora.
#pragma once

#include "kleene.hpp"
#include "partial_set.hpp"

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace pprob {

/// A distribution over the worlds of 2^n or K^n, in enumeration order.
class WorldWeights {
public:
    /// Missing worlds get weight 0. Weights must be nonnegative and sum to 1.
    static WorldWeights make(std::size_t n, LogicKind kind, const std::map<std::string, Rational>& weights) {
        require_arity(n, kind);
        auto worlds = enumerate_worlds(n, kind);
        std::vector<Rational> w(worlds.size(), Rational(0));
        for (const auto& [world, q] : weights) {
            auto it = std::find(worlds.begin(), worlds.end(), world);
            if (it == worlds.end())
                throw PreconditionError(Precondition::invalid_weights,
                                        "'" + world + "' is not a " + to_string(kind) + " world of arity " +
                                            std::to_string(n));
            w[it - worlds.begin()] = q;
        }
        validate_weights(w);
        return WorldWeights(n, kind, std::move(worlds), std::move(w));
    }

    static WorldWeights from_vector(std::size_t n, LogicKind kind, std::vector<Rational> w) {
        require_arity(n, kind);
        auto worlds = enumerate_worlds(n, kind);
        if (w.size() != worlds.size()) throw PreconditionError(Precondition::invalid_weights, "one weight per world");
        validate_weights(w);
        return WorldWeights(n, kind, std::move(worlds), std::move(w));
    }

    std::size_t n() const noexcept { return n_; }
    LogicKind kind() const noexcept { return kind_; }
    const std::vector<std::string>& worlds() const noexcept { return worlds_; }
    const std::vector<Rational>& weights() const noexcept { return weights_; }
    Rational mass(std::uint64_t world_mask) const { return mask_weight(world_mask, weights_); }

private:
    WorldWeights(std::size_t n, LogicKind kind, std::vector<std::string> worlds, std::vector<Rational> w)
        : n_(n), kind_(kind), worlds_(std::move(worlds)), weights_(std::move(w)) {}
    std::size_t n_;
    LogicKind kind_;
    std::vector<std::string> worlds_;
    std::vector<Rational> weights_;
};

using ClassicalPi = std::function<Rational(const Formula&)>;
using PartialPi = std::function<TValue(const Formula&)>;

/// π(f) = w(M(f)).
inline Rational classical_pi(const WorldWeights& w, const Formula& f) {
    if (w.kind() != LogicKind::classical)
        throw PreconditionError(Precondition::kind_mismatch, "classical probability needs classical weights");
    return w.mass(meaning_classical(f, w.n()));
}

/// π(f) = (w(M(f)_0), w(M(f)_1)).
inline TValue partial_pi(const WorldWeights& w, const Formula& f) {
    if (w.kind() != LogicKind::kleene)
        throw PreconditionError(Precondition::kind_mismatch, "partial probability needs Kleene weights");
    const PartialSet m = meaning_kleene(f, w.n());
    return {w.mass(m.pos), w.mass(m.neg)};
}

inline ClassicalPi classical_pi_of(const WorldWeights& w) {
    return [w](const Formula& f) { return classical_pi(w, f); };
}
inline PartialPi partial_pi_of(const WorldWeights& w) {
    return [w](const Formula& f) { return partial_pi(w, f); };
}

/// π(α|δ) = π(α ∧ δ) / π(δ).
inline ClassicalPi conditional_pi(const ClassicalPi& pi, const Formula& delta) {
    const Rational d = pi(delta);
    if (d == 0) throw PreconditionError(Precondition::zero_measure, "pi(" + print(delta) + ") = 0");
    return [pi, delta, d](const Formula& a) { return pi(a & delta) / d; };
}

inline ClassicalPi conditional_pi(const WorldWeights& w, const Formula& delta) {
    return conditional_pi(classical_pi_of(w), delta);
}

/// Conjunction of a finite premise set; the empty set gives 1.
inline Formula conjunction(const std::vector<Formula>& gamma) {
    if (gamma.empty()) return Formula::one();
    Formula f = gamma.front();
    for (std::size_t i = 1; i < gamma.size(); ++i) f = f & gamma[i];
    return f;
}

// ---------------------------------------------------------------------------
// Corpora

/// Every formula of depth <= `depth` over p0..p{n-1} and the constants
/// (n only in the Kleene language). Ordered by depth, then by construction.
inline std::vector<Formula> formula_corpus(std::size_t n, LogicKind kind, std::size_t depth) {
    std::vector<Formula> all{Formula::zero(), Formula::one()};
    if (kind == LogicKind::kleene) all.push_back(Formula::unknown());
    for (std::size_t i = 0; i < n; ++i) all.push_back(Formula::var(i));
    std::size_t prev_end = 0;  // formulas [prev_end, all.size()) have maximal depth
    for (std::size_t d = 1; d <= depth; ++d) {
        const std::size_t end = all.size();
        std::vector<Formula> next;
        for (std::size_t i = prev_end; i < end; ++i) next.push_back(~all[i]);
        for (std::size_t i = 0; i < end; ++i)
            for (std::size_t j = 0; j < end; ++j) {
                if (i < prev_end && j < prev_end) continue;
                next.push_back(all[i] & all[j]);
                next.push_back(all[i] | all[j]);
            }
        prev_end = end;
        all.insert(all.end(), next.begin(), next.end());
    }
    return all;
}

/// Outcome of a corpus audit; the witness holds the offending formulas.
struct CorpusCheck {
    bool ok = true;
    std::string law;
    std::vector<Formula> witness;

    static CorpusCheck pass() { return {}; }
    static CorpusCheck fail(std::string law, std::vector<Formula> w) { return {false, std::move(law), std::move(w)}; }
    explicit operator bool() const { return ok; }
};

inline std::size_t corpus_arity(const std::vector<Formula>& corpus) {
    std::size_t n = 0;
    for (const auto& f : corpus) n = std::max(n, f.arity());
    return n;
}

/// Axioms relative to δ (δ ⊨ α gives 1; δ ⊨ ¬(α∧β) gives additivity) and
/// their consequences: range, negation, equivalence, monotonicity,
/// inclusion-exclusion. Pairwise laws run over all corpus pairs.
inline CorpusCheck check_relative_probability_axioms(const ClassicalPi& pi, const Formula& delta, std::size_t n,
                                                     const std::vector<Formula>& corpus) {
    const std::uint64_t d = meaning_classical(delta, n);
    if (d == 0) throw PreconditionError(Precondition::inconsistent_condition, print(delta) + " entails 0");
    std::vector<std::uint64_t> m;
    std::vector<Rational> v;
    for (const auto& a : corpus) {
        m.push_back(meaning_classical(a, n));
        v.push_back(pi(a));
    }
    auto entails = [d](std::uint64_t a) { return (d & ~a) == 0; };
    for (std::size_t i = 0; i < corpus.size(); ++i)
        if (v[i] < 0 || v[i] > 1) return CorpusCheck::fail("range", {corpus[i]});
    for (std::size_t i = 0; i < corpus.size(); ++i)
        if (entails(m[i]) && v[i] != 1) return CorpusCheck::fail("axiom 1", {corpus[i]});
    for (std::size_t i = 0; i < corpus.size(); ++i)
        if (pi(~corpus[i]) != 1 - v[i]) return CorpusCheck::fail("negation", {corpus[i]});
    for (std::size_t i = 0; i < corpus.size(); ++i)
        for (std::size_t j = 0; j < corpus.size(); ++j) {
            const auto &a = corpus[i], &b = corpus[j];
            if ((d & m[i] & m[j]) == 0 && pi(a | b) != v[i] + v[j]) return CorpusCheck::fail("axiom 2", {a, b});
            if ((d & m[i]) == (d & m[j]) && v[i] != v[j]) return CorpusCheck::fail("equivalence", {a, b});
            if ((d & m[i] & ~m[j]) == 0 && v[i] > v[j]) return CorpusCheck::fail("monotonicity", {a, b});
            if (pi(a | b) != v[i] + v[j] - pi(a & b)) return CorpusCheck::fail("inclusion-exclusion", {a, b});
        }
    return CorpusCheck::pass();
}

/// Plain probability axioms: the relative ones with δ = 1.
inline CorpusCheck check_probability_axioms(const ClassicalPi& pi, std::size_t n, const std::vector<Formula>& corpus) {
    return check_relative_probability_axioms(pi, Formula::one(), n, corpus);
}

/// Axioms 1-4 and the derived properties, in the order: range, axiom 1,
/// axiom 3, axiom 4, axiom 2, pi(n) = (0, 0), entails 0, entails n,
/// n-decomposition.
inline CorpusCheck check_partial_probability_axioms(const PartialPi& pi, std::size_t n,
                                                    const std::vector<Formula>& corpus) {
    const std::size_t worlds = world_count(n, LogicKind::kleene);
    const PartialSetOps ops{worlds};
    std::vector<PartialSet> m;
    std::vector<TValue> v;
    for (const auto& a : corpus) {
        m.push_back(meaning_kleene(a, n));
        v.push_back(pi(a));
    }
    for (std::size_t i = 0; i < corpus.size(); ++i)
        if (!in_T(v[i])) return CorpusCheck::fail("range", {corpus[i]});
    for (std::size_t i = 0; i < corpus.size(); ++i)
        if (ps_leq(ops.top(), m[i]) && !(v[i] == TValue{1, 0})) return CorpusCheck::fail("axiom 1", {corpus[i]});
    for (std::size_t i = 0; i < corpus.size(); ++i)
        if (!(pi(~corpus[i]) == sigma(v[i]))) return CorpusCheck::fail("axiom 3", {~corpus[i]});
    for (std::size_t i = 0; i < corpus.size(); ++i)
        if (ps_leq(ops.fix(), m[i]) && !precedes(TValue{0, 0}, v[i])) return CorpusCheck::fail("axiom 4", {corpus[i]});
    for (std::size_t i = 0; i < corpus.size(); ++i)
        for (std::size_t j = 0; j < corpus.size(); ++j) {
            const auto &a = corpus[i], &b = corpus[j];
            if (!(pi(a | b) == v[i] + v[j] - pi(a & b))) return CorpusCheck::fail("axiom 2", {a, b});
        }
    if (!(pi(Formula::unknown()) == TValue{0, 0})) return CorpusCheck::fail("pi(n) = (0, 0)", {Formula::unknown()});
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        if (ps_leq(m[i], ops.bottom()) && !(v[i] == TValue{0, 1})) return CorpusCheck::fail("entails 0", {corpus[i]});
        if (ps_leq(m[i], ops.fix()) && !precedes(v[i], TValue{0, 0})) return CorpusCheck::fail("entails n", {corpus[i]});
        const Formula n_f = Formula::unknown();
        if (!(v[i] == pi(corpus[i] | n_f) + pi(corpus[i] & n_f)))
            return CorpusCheck::fail("n-decomposition", {corpus[i]});
    }
    return CorpusCheck::pass();
}

/// α ⊨ β implies π(α) ≼ π(β), over all corpus pairs.
inline CorpusCheck is_isotone_pi(const PartialPi& pi, std::size_t n, const std::vector<Formula>& corpus) {
    std::vector<PartialSet> m;
    std::vector<TValue> v;
    for (const auto& a : corpus) {
        m.push_back(meaning_kleene(a, n));
        v.push_back(pi(a));
    }
    for (std::size_t i = 0; i < corpus.size(); ++i)
        for (std::size_t j = 0; j < corpus.size(); ++j)
            if (ps_leq(m[i], m[j]) && !precedes(v[i], v[j])) return CorpusCheck::fail("isotone", {corpus[i], corpus[j]});
    return CorpusCheck::pass();
}

/// Equal meanings give equal values.
inline CorpusCheck is_compatible_pi(const PartialPi& pi, std::size_t n, const std::vector<Formula>& corpus) {
    std::map<PartialSet, std::pair<Formula, TValue>> seen;
    for (const auto& a : corpus) {
        const PartialSet m = meaning_kleene(a, n);
        const TValue v = pi(a);
        auto [it, fresh] = seen.emplace(m, std::pair{a, v});
        if (!fresh && !(it->second.second == v)) return CorpusCheck::fail("compatible", {it->second.first, a});
    }
    return CorpusCheck::pass();
}

}  // namespace pprob
