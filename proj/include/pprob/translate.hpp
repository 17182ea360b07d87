// Translations between probability on sentences and probability on (partial)
// sets, in both directions and for both logics.
#pragma once

#include "generation.hpp"
#include "kleene.hpp"
#include "lattice.hpp"
#include "partial_valuation.hpp"
#include "prob_sentences.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pprob {

struct EqualityRow {
    std::string event;
    std::string formula;
    std::string lhs;
    std::string rhs;
    bool equal = false;
};

/// Serializable record of a translation: facts in insertion order, one row
/// per event, and the outcome of the corpus checks.
struct TranslationCertificate {
    std::string direction;  // "s2e" or "e2s"
    std::string logic;      // "classical" or "partial"
    std::vector<std::pair<std::string, std::string>> facts;
    std::vector<EqualityRow> equalities;
    std::size_t corpus_checked = 0;
    std::vector<std::string> failures;

    bool ok() const {
        if (!failures.empty()) return false;
        for (const auto& r : equalities)
            if (!r.equal) return false;
        return true;
    }

    std::optional<EqualityRow> first_failing_row() const {
        for (const auto& r : equalities)
            if (!r.equal) return r;
        return std::nullopt;
    }
};

struct TranslationOptions {
    std::size_t corpus_depth = 2;  // linear identity checks
    std::size_t axiom_depth = 1;   // pairwise audits
    std::size_t generator_cap = 27;
};

/// Full disjunctive normal form of a set of worlds of 2^n (bit w = world w);
/// the empty set gives 0.
inline Formula full_dnf(std::uint64_t worlds, std::size_t n) {
    const auto names = enumerate_worlds(n, LogicKind::classical);
    std::optional<Formula> out;
    for (std::size_t w = 0; w < names.size(); ++w) {
        if (!(worlds & (std::uint64_t{1} << w))) continue;
        std::optional<Formula> term;
        for (std::size_t i = 0; i < n; ++i) {
            Formula lit = names[w][i] == '1' ? Formula::var(i) : ~Formula::var(i);
            term = term ? (*term & lit) : lit;
        }
        Formula t = term ? *term : Formula::one();
        out = out ? (*out | t) : t;
    }
    return out ? *out : Formula::zero();
}

/// P(X) for a named finite set X, element index = bit mask.
inline FiniteLattice powerset_lattice(const std::vector<std::string>& points) {
    if (points.size() > 8) throw PreconditionError(Precondition::cap_exceeded, "power set of more than 8 points");
    const std::size_t total = std::size_t{1} << points.size();
    std::vector<std::string> names;
    for (std::size_t m = 0; m < total; ++m) names.push_back(mask_name(m, points));
    return FiniteLattice::from_operations(
        std::move(names), [](Elem a, Elem b) { return a & b; }, [](Elem a, Elem b) { return a | b; }, 0, total - 1);
}

// ---------------------------------------------------------------------------
// Classical: sentences -> space

struct ClassicalSentencesToSpace {
    TranslationCertificate certificate;
    std::vector<std::string> worlds;
    FiniteLattice events;          // P(2^n)
    Valuation p;                   // p(X) = π(DNF(X))
    std::vector<Formula> witness;  // DNF per event
};

inline ClassicalSentencesToSpace classical_sentences_to_space(const ClassicalPi& pi, std::size_t n,
                                                              const TranslationOptions& opt = {}) {
    if (n > 3) throw PreconditionError(Precondition::cap_exceeded, "event algebra of 2^n needs n <= 3");
    auto worlds = enumerate_worlds(n, LogicKind::classical);
    auto events = powerset_lattice(worlds);
    TranslationCertificate cert{"s2e", "classical", {}, {}, 0, {}};
    cert.facts.emplace_back("n", std::to_string(n));

    Valuation p;
    std::vector<Formula> dnf;
    for (Elem x = 0; x < events.size(); ++x) {
        dnf.push_back(full_dnf(x, n));
        p.push_back(pi(dnf.back()));
    }
    for (Elem x = 0; x < events.size(); ++x) {
        Rational by_points = 0;
        for (std::size_t w = 0; w < worlds.size(); ++w)
            if (x & (Elem{1} << w)) by_points += p[Elem{1} << w];
        const bool defines = meaning_classical(dnf[x], n) == x;
        cert.equalities.push_back(
            {events.name(x), print(dnf[x]), to_string(p[x]), to_string(by_points), defines && p[x] == by_points});
    }
    const bool boolean_valuation = is_valuation(events, p) && p[events.bottom()] == 0 && p[events.top()] == 1;
    cert.facts.emplace_back("boolean_valuation", boolean_valuation ? "pass" : "fail");
    if (!boolean_valuation) cert.failures.push_back("p is not a Boolean valuation on P(2^n)");

    for (const auto& a : formula_corpus(n, LogicKind::classical, opt.corpus_depth)) {
        ++cert.corpus_checked;
        const Rational lhs = pi(a), rhs = p[meaning_classical(a, n)];
        if (lhs != rhs) {
            cert.failures.push_back("pi(" + print(a) + ") = " + to_string(lhs) + " but p(M) = " + to_string(rhs));
            break;
        }
    }
    return {std::move(cert), std::move(worlds), std::move(events), std::move(p), std::move(dnf)};
}

// ---------------------------------------------------------------------------
// Classical: space -> sentences

struct ClassicalSpaceToSentences {
    TranslationCertificate certificate;
    std::size_t m = 0;
    std::size_t k = 0;  // least x with m <= 2^x
    std::vector<std::string> space;
    std::vector<Rational> weights;
    std::vector<Formula> witness;  // per event X ⊆ A, indexed by bit mask

    /// η(|α|) = χ(θ(ψ(|α|))): worlds of 2^k in M(α) with index below m.
    std::uint64_t eta(const Formula& a) const { return meaning_classical(a, k) & full_mask(m); }
    Rational pi(const Formula& a) const { return mask_weight(eta(a), weights); }
    /// Membership in τ̄(X).
    bool in_tau(const Formula& a, std::uint64_t X) const { return eta(a) == X; }
};

inline ClassicalSpaceToSentences classical_space_to_sentences(std::vector<std::string> space,
                                                              std::vector<Rational> weights,
                                                              const TranslationOptions& opt = {}) {
    const std::size_t m = space.size();
    if (m == 0) throw PreconditionError(Precondition::invalid_weights, "empty sample space");
    if (m > 8) throw PreconditionError(Precondition::cap_exceeded, "sample space larger than 8 points");
    if (weights.size() != m) throw PreconditionError(Precondition::invalid_weights, "one weight per sample point");
    validate_weights(weights);
    std::size_t k = 0;
    while ((std::size_t{1} << k) < m) ++k;

    ClassicalSpaceToSentences out;
    out.m = m;
    out.k = k;
    out.space = std::move(space);
    out.weights = std::move(weights);
    auto& cert = out.certificate;
    cert.direction = "e2s";
    cert.logic = "classical";
    cert.facts.emplace_back("m", std::to_string(m));
    cert.facts.emplace_back("k", std::to_string(k));

    // θ : P(2^k) -> P(m), restriction to the first m positions.
    const auto worlds = enumerate_worlds(k, LogicKind::classical);
    auto big = powerset_lattice(worlds);
    auto small = powerset_lattice(out.space);
    std::vector<Elem> theta(big.size());
    for (Elem x = 0; x < big.size(); ++x) theta[x] = x & full_mask(m);
    const auto theta_check = LatticeMorphism::check(big, small, theta);
    bool onto = true;
    {
        std::vector<bool> hit(small.size(), false);
        for (Elem y : theta) hit[y] = true;
        for (bool h : hit) onto = onto && h;
    }
    cert.facts.emplace_back("theta_morphism", theta_check ? "pass" : "fail");
    cert.facts.emplace_back("theta_surjective", onto ? "pass" : "fail");
    if (!theta_check || !onto) cert.failures.push_back("restriction map is not an epimorphism");

    // Second route: weights moved onto the worlds of 2^k.
    std::vector<Rational> lifted(worlds.size(), Rational(0));
    for (std::size_t i = 0; i < m; ++i) lifted[i] = out.weights[i];
    const auto w2 = WorldWeights::from_vector(k, LogicKind::classical, lifted);

    for (Elem X = 0; X < small.size(); ++X) {
        out.witness.push_back(full_dnf(X, k));
        const auto& a = out.witness.back();
        const Rational pX = mask_weight(X, out.weights);
        const Rational pa = classical_pi(w2, a);
        cert.equalities.push_back({small.name(X), print(a), to_string(pX), to_string(pa), out.in_tau(a, X) && pX == pa});
    }
    for (const auto& a : formula_corpus(k, LogicKind::classical, opt.corpus_depth)) {
        ++cert.corpus_checked;
        if (out.pi(a) != classical_pi(w2, a)) {
            cert.failures.push_back("pi(" + print(a) + ") differs between the two routes");
            break;
        }
    }
    const auto pi = [&out](const Formula& a) { return out.pi(a); };
    if (auto r = check_probability_axioms(pi, k, formula_corpus(k, LogicKind::classical, opt.axiom_depth)); !r)
        cert.failures.push_back("probability axioms: " + r.law);
    return out;
}

// ---------------------------------------------------------------------------
// Partial: sentences -> space

struct PartialSentencesToSpace {
    TranslationCertificate certificate;
    LindenbaumAlgebra lindenbaum;
    PartialValuation mu;  // indexed like lindenbaum.sub.members
};

/// μ(X,Y) = π(witness of (X,Y)) on the generated subalgebra of D(K^n).
/// Isotonicity and compatibility are audited first on the witnesses plus the
/// axiom corpus; failures are precondition violations.
inline PartialSentencesToSpace partial_sentences_to_space(const PartialPi& pi, std::size_t n,
                                                          const TranslationOptions& opt = {},
                                                          std::vector<Formula> extra_corpus = {}) {
    auto lind = kleene_lindenbaum_algebra(n);
    const auto& sub = lind.sub;
    std::vector<Formula> audit = sub.witnesses;
    for (const auto& f : formula_corpus(n, LogicKind::kleene, opt.axiom_depth)) audit.push_back(f);
    for (const auto& f : extra_corpus) audit.push_back(f);
    if (auto r = is_compatible_pi(pi, n, audit); !r)
        throw PreconditionError(Precondition::not_compatible,
                                print(r.witness[0]) + " and " + print(r.witness[1]) + " are equivalent but differ");
    if (auto r = is_isotone_pi(pi, n, audit); !r)
        throw PreconditionError(Precondition::not_isotone_function,
                                print(r.witness[0]) + " entails " + print(r.witness[1]) + " but the values are not ordered");

    TranslationCertificate cert{"s2e", "partial", {}, {}, 0, {}};
    cert.facts.emplace_back("n", std::to_string(n));
    cert.facts.emplace_back("elements", std::to_string(sub.members.size()));
    PartialValuation mu;
    for (Elem e = 0; e < sub.members.size(); ++e) mu.push_back(pi(sub.witnesses[e]));
    for (Elem e = 0; e < sub.members.size(); ++e) {
        const bool defines = meaning_kleene(sub.witnesses[e], n) == sub.members[e];
        const TValue again = pi(sub.witnesses[e] | Formula::zero());
        cert.equalities.push_back(
            {sub.algebra.name(e), print(sub.witnesses[e]), to_string(mu[e]), to_string(again), defines && mu[e] == again});
    }
    const auto axioms = is_partial_valuation(sub.algebra, mu);
    cert.facts.emplace_back("partial_valuation", axioms ? "pass" : "fail: " + axioms.law);
    if (!axioms) cert.failures.push_back("mu fails " + axioms.law);

    auto corpus = formula_corpus(n, LogicKind::kleene, opt.corpus_depth);
    corpus.insert(corpus.end(), extra_corpus.begin(), extra_corpus.end());
    for (const auto& a : corpus) {
        ++cert.corpus_checked;
        auto idx = sub.index_of(meaning_kleene(a, n));
        if (!idx || !(pi(a) == mu[*idx])) {
            cert.failures.push_back("pi(" + print(a) + ") differs from mu(M(" + print(a) + "))");
            break;
        }
    }
    return {std::move(cert), std::move(lind), std::move(mu)};
}

// ---------------------------------------------------------------------------
// Generators

namespace detail {

inline std::vector<bool> closure_of(const DmfAlgebra& A, const std::vector<Elem>& gens) {
    std::vector<bool> in(A.size(), false);
    std::vector<Elem> items;
    auto add = [&](Elem x) {
        if (!in[x]) {
            in[x] = true;
            items.push_back(x);
        }
    };
    add(A.bottom());
    add(A.top());
    add(A.fix());
    for (Elem g : gens) add(g);
    for (std::size_t i = 0; i < items.size(); ++i) {
        const Elem x = items[i];
        add(A.neg(x));
        for (std::size_t j = 0; j <= i; ++j) {
            add(A.meet(x, items[j]));
            add(A.join(x, items[j]));
        }
    }
    return in;
}

}  // namespace detail

struct GeneratingSet {
    std::size_t j = 0;
    std::vector<Elem> generators;
};

/// Least-cardinality generating subset, lexicographically least among those.
inline GeneratingSet minimal_generating_set(const DmfAlgebra& A, std::size_t cap = 27) {
    if (A.size() > cap)
        throw PreconditionError(Precondition::cap_exceeded,
                                "|A| = " + std::to_string(A.size()) + " exceeds the generator search cap " +
                                    std::to_string(cap));
    const std::size_t n = A.size();
    for (std::size_t size = 0; size <= n; ++size) {
        std::vector<Elem> pick(size);
        for (std::size_t i = 0; i < size; ++i) pick[i] = i;
        while (true) {
            auto in = detail::closure_of(A, pick);
            if (std::all_of(in.begin(), in.end(), [](bool b) { return b; })) return {size, pick};
            // next combination in lexicographic order
            std::size_t i = size;
            while (i > 0 && pick[i - 1] == n - size + i - 1) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t t = i; t < size; ++t) pick[t] = pick[t - 1] + 1;
        }
    }
    throw std::logic_error("the whole algebra generates itself");
}

// ---------------------------------------------------------------------------
// Partial: space -> sentences

struct PartialSpaceToSentences {
    TranslationCertificate certificate;
    std::size_t j = 0;
    std::vector<PartialSet> generators;  // f(|p_i|) = generators[i]
    GeneratedSubalgebra<PartialSet> sub; // same member order as the field
    PartialField field;
    PartialMeasure mu;
    std::optional<DmfMorphism> eta_morphism;  // Lindenbaum(L*_j) -> G_A, built when j <= 2

    /// η(|α|), as an index into the field.
    Elem eta(const Formula& a) const { return *field.index_of(free_extension(field.ops(), generators, a)); }
    TValue pi(const Formula& a) const { return mu[eta(a)]; }
    /// Membership in τ̄(X,Y).
    bool in_tau(const Formula& a, Elem event) const { return eta(a) == event; }
};

inline PartialSpaceToSentences partial_space_to_sentences(const PartialField& F, const PartialMeasure& mu,
                                                          const TranslationOptions& opt = {}) {
    if (auto d = is_partial_measure(F, mu); !d) throw ValidationError(std::move(d));
    const auto A = F.to_dmf();
    const auto gs = minimal_generating_set(A, opt.generator_cap);
    std::vector<PartialSet> gens;
    for (Elem g : gs.generators) gens.push_back(F.members()[g]);
    const auto& space = F.space();
    auto sub = generated_subalgebra(F.ops(), gens, [&space](const PartialSet& p) { return ps_name(p, space); });
    if (sub.members != F.members()) throw std::logic_error("generators do not reach the whole field");

    PartialSpaceToSentences out{{"e2s", "partial", {}, {}, 0, {}}, gs.j, gens, std::move(sub), F, mu, std::nullopt};
    auto& cert = out.certificate;
    cert.facts.emplace_back("elements", std::to_string(F.size()));
    cert.facts.emplace_back("j", std::to_string(gs.j));
    std::string gen_names;
    for (std::size_t i = 0; i < gens.size(); ++i)
        gen_names += (i ? " " : "") + std::string("p") + std::to_string(i) + "=" + ps_name(gens[i], space);
    cert.facts.emplace_back("generators", gen_names);

    for (Elem e = 0; e < F.size(); ++e) {
        const auto& w = out.sub.witnesses[e];
        const TValue via = out.pi(w);
        cert.equalities.push_back({F.name(e), print(w), to_string(mu[e]), to_string(via), out.in_tau(w, e) && mu[e] == via});
    }

    if (gs.j <= 2) {
        auto lind = kleene_lindenbaum_algebra(gs.j);
        std::vector<Elem> map;
        for (const auto& w : lind.sub.witnesses) map.push_back(out.eta(w));
        const auto check = DmfMorphism::check(lind.sub.algebra, A, map);
        cert.facts.emplace_back("eta_morphism", check ? "pass" : "fail: " + check.law);
        if (check) {
            out.eta_morphism = DmfMorphism::certify(lind.sub.algebra, A, std::move(map));
            const bool onto = out.eta_morphism->surjective();
            cert.facts.emplace_back("eta_surjective", onto ? "pass" : "fail");
            if (!onto) cert.failures.push_back("eta is not onto the field");
        } else {
            cert.failures.push_back("eta is not a morphism: " + check.law);
        }
        for (const auto& a : formula_corpus(gs.j, LogicKind::kleene, opt.corpus_depth)) {
            ++cert.corpus_checked;
            const auto cls = lind.sub.index_of(meaning_kleene(a, gs.j));
            if (!cls || out.eta(a) != out.eta(lind.sub.witnesses[*cls])) {
                cert.failures.push_back("eta is not constant on the class of " + print(a));
                break;
            }
        }
        const auto pi = [&out](const Formula& a) { return out.pi(a); };
        auto axioms = check_partial_probability_axioms(pi, gs.j, formula_corpus(gs.j, LogicKind::kleene, opt.axiom_depth));
        cert.facts.emplace_back("probability_axioms", axioms ? "pass" : "fail: " + axioms.law);
        if (!axioms) cert.failures.push_back("pi fails " + axioms.law);
    } else {
        cert.facts.emplace_back("eta_morphism", "not built for j > 2");
    }
    return out;
}

}  // namespace pprob
