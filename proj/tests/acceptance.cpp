// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include "golden_cases.hpp"
#include "support.hpp"

#include <pprob/cli.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

using namespace pprob;
using F = Formula;

namespace {

struct Outcome {
    bool ok = true;
    std::string note;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            note = what;
        }
    }
};

struct Criterion {
    int id;
    std::string title;
    double limit_s;  // 0 means no time bound
    std::function<Outcome()> body;
};

struct Valued {
    std::vector<Rational> w;
    PartialField F;
    DmfAlgebra A;
    PartialValuation v;
};

Valued valued(std::size_t k, std::vector<Rational> w) {
    auto F = enumerate_DS(letter_space(k));
    auto A = F.to_dmf();
    auto v = associated_partial_space(F, w);
    return {std::move(w), std::move(F), std::move(A), std::move(v)};
}

// Twenty seeded valuations per space size.
const std::vector<Valued>& valuations(std::size_t k) {
    static std::map<std::size_t, std::vector<Valued>> cache;
    auto& out = cache[k];
    if (out.empty()) {
        auto g = support::rng(1000 + k);
        for (int i = 0; i < 20; ++i) out.push_back(valued(k, support::random_weights(g, k, i % 4 == 3)));
    }
    return out;
}

// Bit-level oracles, independent of the library's partial-set operations.
using Bits = std::pair<std::uint64_t, std::uint64_t>;

Bits bits(const PartialSet& p) { return {p.pos, p.neg}; }
Bits o_meet(Bits a, Bits b) { return {a.first & b.first, a.second | b.second}; }
Bits o_join(Bits a, Bits b) { return {a.first | b.first, a.second & b.second}; }
Bits o_neg(Bits a) { return {a.second, a.first}; }

Rational o_mass(std::uint64_t m, const std::vector<Rational>& w) {
    Rational total = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (m >> i & 1U) total += w[i];
    return total;
}

TValue o_value(Bits a, const std::vector<Rational>& w) { return {o_mass(a.first, w), o_mass(a.second, w)}; }

// v̄(x|h) = v((x ∨ ¬h) ∧ h) / v(h)_0.
TValue o_conditional(Bits x, Bits h, const std::vector<Rational>& w) {
    const TValue t = o_value(o_meet(o_join(x, o_neg(h)), h), w);
    const Rational d = o_mass(h.first, w);
    return {t.first / d, t.second / d};
}

bool in_nabla_bits(Bits a) { return a.second == 0; }

Outcome c1() {
    Outcome o;
    for (const auto& s : valuations(3)) {
        o.require(s.A.size() == 27, "D(S) does not have 27 elements");
        o.require(static_cast<bool>(is_partial_valuation(s.A, s.v)), "axioms fail");
        const auto rep = structural_properties(s.A, s.v);
        o.require(rep.items.size() == 5 && rep.all_pass(), "a structural property fails");
        for (Elem e = 0; e < s.F.size(); ++e)
            o.require(s.v[e] == o_value(bits(s.F.members()[e]), s.w), "measure differs from the mass oracle");
    }
    return o;
}

Outcome c2() {
    Outcome o;
    std::size_t pairs = 0;
    for (std::size_t k = 1; k <= 3; ++k)
        for (const auto& s : valuations(k)) {
            o.require(static_cast<bool>(is_isotone(s.A, s.v)), "library isotonicity check fails");
            for (Elem a = 0; a < s.A.size(); ++a)
                for (Elem b = 0; b < s.A.size(); ++b) {
                    const auto [ap, an] = bits(s.F.members()[a]);
                    const auto [bp, bn] = bits(s.F.members()[b]);
                    if ((ap & ~bp) != 0 || (bn & ~an) != 0) continue;
                    ++pairs;
                    const TValue x = s.v[a], y = s.v[b];
                    o.require(x.first <= y.first && y.second <= x.second, "isotonicity violated");
                }
        }
    o.note = o.ok ? std::to_string(pairs) + " ordered pairs" : o.note;
    return o;
}

Outcome c3() {
    Outcome o;
    std::size_t checked = 0;
    for (const auto& s : valuations(3)) {
        for (Elem h = 0; h < s.A.size(); ++h)
            for (Elem e = 0; e < s.A.size(); ++e) {
                const Bits hb = bits(s.F.members()[h]), eb = bits(s.F.members()[e]);
                if (!in_nabla_bits(hb) || !in_nabla_bits(eb)) continue;
                if (o_mass(hb.first, s.w) == 0 || o_mass(eb.first, s.w) == 0) continue;
                ++checked;
                const auto r = weak_bayes(s.A, s.v, h, e);
                o.require(r.holds(), "weak Bayes sides differ");
                const TValue lhs = o_conditional(hb, eb, s.w);
                const TValue back = o_conditional(eb, hb, s.w);
                const Rational k = o_mass(hb.first, s.w) / o_mass(eb.first, s.w);
                o.require(r.lhs == lhs, "lhs differs from the oracle");
                o.require(lhs == TValue{back.first * k, back.second * k}, "oracle sides differ");
            }
    }
    o.note = o.ok ? std::to_string(checked) + " pairs" : o.note;
    return o;
}

Outcome c4() {
    Outcome o;
    std::size_t checked = 0;
    for (std::size_t k = 1; k <= 3; ++k)
        for (const auto& s : valuations(k))
            for (Elem e = 0; e < s.A.size(); ++e) {
                if (s.v[e].first == 0 || s.v[e].second == 0) continue;
                const auto c = posneg_conditionals(s.A, s.v, e);
                const Bits eb = bits(s.F.members()[e]);
                const Bits fix{0, 0};
                const Bits plus = o_join(eb, fix), minus = o_join(o_neg(eb), fix), both = o_join(eb, o_neg(eb));
                const Rational theta = o_mass(eb.second, s.w) / o_mass(eb.first, s.w);
                o.require(c.theta == theta, "theta differs from the oracle");
                for (Elem h = 0; h < s.A.size(); ++h) {
                    ++checked;
                    const auto r = c.at(h);
                    o.require(r.holds(), "e+/e-/∇e identity fails");
                    const Bits hb = bits(s.F.members()[h]);
                    const TValue gp = o_conditional(hb, plus, s.w), gb = o_conditional(hb, both, s.w),
                                 gm = o_conditional(hb, minus, s.w);
                    o.require(r.given_plus == gp && r.given_both == gb && r.given_minus == gm,
                              "conditionals differ from the oracle");
                    o.require(gp == gb * (1 + theta) - gm * theta, "oracle identity fails");
                }
            }
    // The one-variable worked example: worlds 0, n, 1 weighted 1/2, 1/4, 1/4 and e = h = M(p0).
    const auto F1 = enumerate_DS({"0", "n", "1"});
    const auto A1 = F1.to_dmf();
    const auto v1 = associated_partial_space(F1, {make_rational(1, 2), make_rational(1, 4), make_rational(1, 4)});
    const Elem e = *F1.index_of({4, 1});
    const auto r = posneg_conditional_identity(A1, v1, e, e);
    o.require(r.given_plus == tvalue(1, 1, 0, 1), "worked example v(h|e+)");
    o.require(r.given_both == tvalue(1, 3, 2, 3), "worked example v(h|∇e)");
    o.require(r.given_minus == tvalue(0, 1, 1, 1), "worked example v(h|e-)");
    o.require(r.theta == 2 && r.holds(), "worked example theta or identity");
    o.note = o.ok ? std::to_string(checked) + " (e, h) pairs" : o.note;
    return o;
}

Outcome c5() {
    Outcome o;
    auto g = support::rng(5);
    const auto worlds = support::oracle_worlds(2, "0n1");
    for (int i = 0; i < 500; ++i) {
        const auto f = support::random_formula(g, 2, 5);
        const auto m = meaning_kleene(f, 2);
        for (std::size_t w = 0; w < worlds.size(); ++w) {
            const int via_meaning = static_cast<int>(truth_from_meaning(m, w));
            const int via_eval = static_cast<int>(eval_kleene(f, worlds[w]));
            o.require(via_meaning == via_eval, "meaning and evaluation disagree on " + print(f));
            o.require(via_eval == support::oracle_truth(f, worlds[w]), "evaluation differs from the oracle");
        }
    }
    return o;
}

Outcome c6() {
    Outcome o;
    const F p0 = F::var(0);
    o.require(consequence({p0 & ~p0}, F::unknown(), 1, LogicKind::kleene).holds, "p0 & ~p0 |= n");
    o.require(consequence({F::unknown()}, p0 | ~p0, 1, LogicKind::kleene).holds, "n |= p0 | ~p0");
    o.require(!consequence({F::one()}, p0 | ~p0, 1, LogicKind::kleene).holds, "1 |/= p0 | ~p0 in Kleene");
    o.require(consequence({F::one()}, p0 | ~p0, 1, LogicKind::classical).holds, "1 |= p0 | ~p0 classically");
    return o;
}

Outcome c7() {
    Outcome o;
    auto g = support::rng(7);
    std::size_t positive = 0, defective = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t k = 1 + trial % 3;
        const auto L = boolean_lattice(k);
        auto v = boolean_valuation_from_weights(k, support::random_weights(g, k, true));
        const bool inject = trial % 2 == 1;
        if (inject) {
            std::uniform_int_distribution<std::size_t> pick(0, v.size() - 1);
            v[pick(g)] += make_rational(1, 7);
        }
        const auto [valuation, additive] = check_boolean_valuation_additivity(L, v);
        o.require(valuation == additive, "characterizations disagree");
        if (inject) {
            ++defective;
        } else {
            ++positive;
            o.require(valuation, "certified valuation rejected");
        }
    }
    o.note = o.ok ? std::to_string(positive) + " certified, " + std::to_string(defective) + " injected" : o.note;
    return o;
}

Outcome c8() {
    Outcome o;
    for (std::size_t k = 1; k <= 3; ++k)
        for (const auto& s : valuations(k))
            o.require(static_cast<bool>(decomposition_identity(s.A, s.v, decompose(s.A, s.v))),
                      "decomposition identity fails");
    return o;
}

Outcome c9() {
    Outcome o;
    const auto pk = pi_construction(chain_lattice(2)).algebra;
    const auto p2 = pi_construction(boolean_lattice(2)).algebra;
    const auto d2 = enumerate_DS(letter_space(2)).to_dmf();
    o.require(static_cast<bool>(diagnose_dmf(pk.tables())), "pi(2-chain) is not a DMF-algebra");
    o.require(static_cast<bool>(diagnose_dmf(p2.tables())), "pi(2^2) is not a DMF-algebra");
    o.require(find_dmf_isomorphism(pk, kleene_algebra()).has_value(), "pi(2-chain) is not isomorphic to K");
    o.require(find_dmf_isomorphism(p2, d2).has_value(), "pi(2^2) is not isomorphic to D(2)");
    return o;
}

Outcome c10() {
    Outcome o;
    const auto D = enumerate_DS(letter_space(2)).to_dmf();
    std::size_t pairs = 0, epis = 0;
    for (Elem a = 0; a < D.size(); ++a)
        for (Elem b = 0; b < D.size(); ++b) {
            if (D.leq(a, b)) continue;
            ++pairs;
            o.require(static_cast<bool>(check_separation(D, a, b, separation_pair(D, a, b))), "separation fails");
        }
    for (const auto& I : enumerate_prime_ideals(D)) {
        if (!I.excludes_fix) continue;
        ++epis;
        const auto phi = phi_I(D, I.carrier);
        o.require(phi.surjective(), "phi_I is not onto K");
        for (Elem x = 0; x < D.size(); ++x) o.require((phi(x) == 0) == I.contains(x), "phi_I^-1(0) != I");
    }
    o.require(epis > 0, "no prime ideal avoids n");
    o.note = o.ok ? std::to_string(pairs) + " pairs, " + std::to_string(epis) + " epimorphisms" : o.note;
    return o;
}

Outcome c11() {
    Outcome o;
    auto g = support::rng(11);
    for (std::size_t n = 1; n <= 2; ++n)
        for (int i = 0; i < 10; ++i) {
            const auto w = support::random_weights(g, std::size_t{1} << n, true);
            const auto ww = WorldWeights::from_vector(n, LogicKind::classical, w);
            const auto r = classical_sentences_to_space(classical_pi_of(ww), n);
            o.require(r.certificate.ok(), "sentences-to-space certificate fails");
            for (int j = 0; j < 200; ++j) {
                const auto a = support::random_formula(g, n, 5, false);
                o.require(classical_pi(ww, a) == r.p[meaning_classical(a, n)], "pi(a) != p(M(a))");
            }
            const auto back = classical_space_to_sentences(ww.worlds(), w);
            o.require(back.certificate.ok(), "space-to-sentences certificate fails");
            for (std::uint64_t X = 0; X < (std::uint64_t{1} << w.size()); ++X) {
                o.require(back.in_tau(back.witness[X], X), "witness outside its class");
                o.require(back.pi(back.witness[X]) == o_mass(X, w), "p(X) != pi(witness)");
            }
        }
    return o;
}

Outcome c12() {
    Outcome o;
    auto g = support::rng(12);
    for (int i = 0; i < 5; ++i) {
        const auto w = WorldWeights::from_vector(1, LogicKind::kleene, support::random_weights(g, 3, true));
        const auto r = partial_sentences_to_space(partial_pi_of(w), 1);
        const auto& sub = r.lindenbaum.sub;
        o.require(r.certificate.ok(), "sentences-to-space certificate fails");
        o.require(r.certificate.equalities.size() == sub.members.size(), "not every event is certified");
        for (std::size_t e = 0; e < sub.members.size(); ++e)
            o.require(r.mu[e] == o_value(bits(sub.members[e]), w.weights()), "mu differs from the mass oracle");
    }
    const auto F = enumerate_DS(letter_space(2));
    const auto mu = associated_partial_space(F, {make_rational(1, 2), make_rational(1, 2)});
    const auto r = partial_space_to_sentences(F, mu);
    o.require(r.j == 1, "j != 1");
    o.require(r.certificate.ok(), "space-to-sentences certificate fails");
    o.require(r.certificate.equalities.size() == 9, "not 9 equalities");
    for (Elem e = 0; e < F.size(); ++e) o.require(r.pi(r.sub.witnesses[e]) == mu[e], "mu(X,Y) != pi(witness)");
    return o;
}

Outcome c13() {
    Outcome o;
    auto g = support::rng(13);
    const auto D = enumerate_DS(letter_space(2)).to_dmf();
    std::uniform_int_distribution<Elem> pick(0, D.size() - 1);
    const auto worlds = support::oracle_worlds(2, "0n1");
    std::map<std::vector<int>, std::vector<F>> by_table;
    std::size_t pairs = 0;
    while (pairs < 500) {
        const auto f = support::random_formula(g, 2, 4);
        std::vector<int> table;
        for (const auto& w : worlds) table.push_back(support::oracle_truth(f, w));
        auto& bucket = by_table[table];
        for (const auto& h : bucket) {
            if (h == f || pairs >= 500) continue;
            ++pairs;
            const std::vector<Elem> assign{pick(g), pick(g)};
            o.require(free_extension(D, assign, h) == free_extension(D, assign, f),
                      print(h) + " and " + print(f) + " separate");
        }
        if (bucket.size() < 4) bucket.push_back(f);
    }
    return o;
}

Outcome c14() {
    Outcome o;
    const auto names = golden::names(PPROB_GOLDEN_DIR);
    o.require(!names.empty(), "no golden cases");
    golden::ScopedCwd cwd(PPROB_GOLDEN_DIR);
    for (const auto& name : names) {
        const auto c = golden::load(PPROB_GOLDEN_DIR, name);
        std::ostringstream out, err;
        const int code = run_cli(c.args, out, err);
        o.require(code == c.code && out.str() == c.out, "golden case " + name);
    }
    o.note = o.ok ? std::to_string(names.size()) + " cases" : o.note;
    return o;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "partial-valuation axioms and structure on D(S), |S|=3", 5, c1},
        {2, "isotonicity, exhaustive over D(S), |S|<=3", 0, c2},
        {3, "weak Bayes on nabla pairs, |S|=3", 2, c3},
        {4, "e+/e-/nabla-e identity and worked example", 0, c4},
        {5, "meaning-derived and evaluated truth agree, n=2", 2, c5},
        {6, "Kleene consequence sanity", 0, c6},
        {7, "valuation and additivity characterizations agree on 2^k", 0, c7},
        {8, "decomposition identity on D(S), |S|<=3", 0, c8},
        {9, "pi construction isomorphisms", 0, c9},
        {10, "separation pairs and phi_I on D(S), |S|=2", 1, c10},
        {11, "classical translation in both directions", 0, c11},
        {12, "partial translations", 0, c12},
        {13, "free extension respects equivalence", 0, c13},
        {14, "CLI golden cases byte-exact", 0, c14},
    };
    // Build the shared valuations outside the timed bodies.
    for (std::size_t k = 1; k <= 3; ++k) valuations(k);

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.body();
        } catch (const std::exception& e) {
            o.ok = false;
            o.note = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.ok && c.limit_s > 0 && secs >= c.limit_s) {
            o.ok = false;
            o.note = "over the time bound";
        }
        if (!o.ok) ++failures;
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(3);
        line << (o.ok ? "PASS" : "FAIL") << " " << c.id << " " << c.title << " [" << secs << " s]";
        if (!o.note.empty()) line << " (" << o.note << ")";
        std::cout << line.str() << "\n";
    }
    return failures == 0 ? 0 : 1;
}
