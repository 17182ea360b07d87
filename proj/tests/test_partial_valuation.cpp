#include "support.hpp"

#include <gtest/gtest.h>

using namespace pprob;

namespace {

// Points of the one-variable Kleene world space, as bits.
constexpr std::uint64_t Z = 1, N = 2, O = 4;

struct Space {
    PartialField F;
    DmfAlgebra A;
    PartialValuation v;

    Elem at(std::uint64_t pos, std::uint64_t neg) const { return *F.index_of({pos, neg}); }
};

Space make(std::vector<std::string> space, const std::vector<Rational>& w) {
    auto F = enumerate_DS(std::move(space));
    auto A = F.to_dmf();
    auto v = associated_partial_space(F, w);
    return {std::move(F), std::move(A), std::move(v)};
}

// Worlds 0, n, 1 with weights 1/2, 1/4, 1/4.
Space k1() { return make({"0", "n", "1"}, {make_rational(1, 2), make_rational(1, 4), make_rational(1, 4)}); }

Space uniform(std::size_t k) { return make(letter_space(k), std::vector<Rational>(k, make_rational(1, k))); }

}  // namespace

TEST(IsPartialValuation, Examples) {
    const auto s = uniform(2);
    EXPECT_TRUE(is_partial_valuation(s.A, s.v));
    auto bad = s.v;
    bad[s.A.bottom()] = tvalue(0, 1, 0, 1);
    EXPECT_EQ(is_partial_valuation(s.A, bad).law, "axiom 1");
    bad = s.v;
    bad[s.at(1, 2)] = tvalue(1, 3, 1, 2);
    EXPECT_FALSE(is_partial_valuation(s.A, bad));
    EXPECT_EQ(is_partial_valuation(s.A, PartialValuation(2)).law, "shape");
}

TEST(IsPartialValuation, AxiomThreeAndFourDefects) {
    // On K the only certified valuation is forced; break one law at a time.
    const auto K = kleene_algebra();
    const PartialValuation good{tvalue(0, 1, 1, 1), tvalue(0, 1, 0, 1), tvalue(1, 1, 0, 1)};
    EXPECT_TRUE(is_partial_valuation(K, good));
    auto bad = good;
    bad[2] = tvalue(1, 1, 1, 1);
    EXPECT_FALSE(is_partial_valuation(K, bad));
    EXPECT_FALSE(is_partial_valuation(K, {tvalue(0, 1, 1, 1), tvalue(0, 1, 1, 2), tvalue(1, 1, 0, 1)}));
}

TEST(StructuralProperties, HoldOnCertifiedInputs) {
    auto g = support::rng(31);
    std::vector<Space> inputs{k1(), uniform(1), uniform(2), uniform(3)};
    for (int i = 0; i < 5; ++i) inputs.push_back(make(letter_space(3), support::random_weights(g, 3, true)));
    for (const auto& s : inputs) {
        ASSERT_TRUE(is_partial_valuation(s.A, s.v));
        const auto rep = structural_properties(s.A, s.v);
        EXPECT_EQ(rep.items.size(), 5U);
        EXPECT_TRUE(rep.all_pass());
        EXPECT_EQ(s.v[s.A.top()], tvalue(1, 1, 0, 1));
        EXPECT_EQ(s.v[s.A.fix()], tvalue(0, 1, 0, 1));
    }
}

TEST(StructuralProperties, WorldsExample) {
    const auto s = k1();
    const Elem a = s.at(O, Z);
    EXPECT_EQ(s.v[a], tvalue(1, 4, 1, 2));
    const Elem n = s.A.fix();
    EXPECT_EQ(s.v[s.A.join(a, n)].first, make_rational(1, 4));
    EXPECT_EQ(s.v[s.A.join(s.A.neg(a), n)].first, make_rational(1, 2));
}

TEST(StructuralProperties, ReportsABrokenProperty) {
    const auto s = uniform(2);
    auto bad = s.v;
    bad[s.A.fix()] = tvalue(1, 4, 0, 1);
    const auto rep = structural_properties(s.A, bad);
    EXPECT_FALSE(rep.all_pass());
    EXPECT_FALSE(rep.items[1].second);
}

TEST(Pullback, IdentityAndEpimorphismsOntoK) {
    const auto s = uniform(2);
    EXPECT_EQ(pullback_partial_valuation(DmfMorphism::identity(s.A), s.v), s.v);

    const auto K = kleene_algebra();
    const PartialValuation onK{tvalue(0, 1, 1, 1), tvalue(0, 1, 0, 1), tvalue(1, 1, 0, 1)};
    for (const auto& I : enumerate_prime_ideals(s.A)) {
        if (!I.excludes_fix) continue;
        const auto w = pullback_partial_valuation(phi_I(s.A, I.carrier), onK);
        EXPECT_TRUE(is_partial_valuation(s.A, w));
    }
    EXPECT_THROW(pullback_partial_valuation(DmfMorphism::identity(K), s.v), std::invalid_argument);
}

TEST(Pullback, ThroughTheNablaEmbedding) {
    const auto s = k1();
    const auto d = decompose(s.A, s.v);
    EXPECT_EQ(pullback_partial_valuation(d.embedding.phi, d.induced), s.v);
}

TEST(Induced, Examples) {
    const auto two = induced_partial_valuation(chain_lattice(2), {0, 1});
    const auto& P = two.pi.algebra;
    EXPECT_EQ(two.values[P.bottom()], tvalue(0, 1, 1, 1));
    EXPECT_EQ(two.values[P.fix()], tvalue(0, 1, 0, 1));
    EXPECT_EQ(two.values[P.top()], tvalue(1, 1, 0, 1));
    EXPECT_TRUE(is_partial_valuation(P, two.values));

    const Valuation half{0, make_rational(1, 2), make_rational(1, 2), 1};
    const auto four = induced_partial_valuation(boolean_lattice(2), half);
    EXPECT_EQ(four.values[*four.pi.index_of(1, 2)], tvalue(1, 2, 1, 2));
    EXPECT_EQ(four.values[*four.pi.index_of(1, 0)], tvalue(1, 2, 0, 1));
    EXPECT_TRUE(is_partial_valuation(four.pi.algebra, four.values));
}

TEST(Induced, CertifiedForRandomValuations) {
    auto g = support::rng(32);
    for (int i = 0; i < 10; ++i) {
        const auto w = support::random_weights(g, 3, true);
        const auto L = boolean_lattice(3);
        Valuation v(L.size());
        for (Elem m = 0; m < L.size(); ++m)
            for (std::size_t j = 0; j < 3; ++j)
                if (m >> j & 1U) v[m] += w[j];
        const auto r = induced_partial_valuation(L, v);
        EXPECT_TRUE(is_partial_valuation(r.pi.algebra, r.values));
    }
}

TEST(ExtractNabla, Examples) {
    const auto s = uniform(2);
    const auto nv = extract_nabla_valuation(s.A, s.v);
    const auto& L = nv.nabla.lattice;
    EXPECT_EQ(nv.values[L.top()], 1);
    EXPECT_EQ(nv.values[L.bottom()], 0);
    EXPECT_EQ(nv.values[nv.nabla.local[s.at(1, 0)]], make_rational(1, 2));
    EXPECT_TRUE(is_valuation(L, nv.values));
}

TEST(Decompose, IdentityHolds) {
    auto g = support::rng(33);
    const auto K = kleene_algebra();
    const PartialValuation onK{tvalue(0, 1, 1, 1), tvalue(0, 1, 0, 1), tvalue(1, 1, 0, 1)};
    EXPECT_TRUE(decomposition_identity(K, onK, decompose(K, onK)));
    const auto s = uniform(2);
    EXPECT_TRUE(decomposition_identity(s.A, s.v, decompose(s.A, s.v)));
    for (int i = 0; i < 5; ++i) {
        const auto r = make(letter_space(3), support::random_weights(g, 3, true));
        const auto d = decompose(r.A, r.v);
        EXPECT_EQ(d.embedding.phi.map().size(), 27U);
        EXPECT_TRUE(decomposition_identity(r.A, r.v, d));
    }
}

TEST(RecoverClassical, RoundTrips) {
    auto g = support::rng(34);
    std::vector<std::vector<Rational>> weights{{make_rational(1, 3), make_rational(1, 3), make_rational(1, 3)},
                                               {0, 1, 0}};
    for (int i = 0; i < 5; ++i) weights.push_back(support::random_weights(g, 3, true));
    for (const auto& w : weights) {
        const auto s = make(letter_space(3), w);
        EXPECT_EQ(recover_classical(s.F, s.v), w);
    }
}

TEST(RecoverClassical, NeedsTheFullField) {
    const std::uint64_t blocks[] = {0, 1, 6, 7};
    std::vector<PartialSet> members;
    for (auto x : blocks)
        for (auto y : blocks)
            if ((x & y) == 0) members.push_back({x, y});
    const auto F = PartialField::certify(letter_space(3), members);
    const auto mu = associated_partial_space(F, {make_rational(1, 3), make_rational(1, 3), make_rational(1, 3)});
    try {
        recover_classical(F, mu);
        FAIL() << "accepted";
    } catch (const PreconditionError& e) {
        EXPECT_EQ(e.kind(), Precondition::not_full_field);
    }
}

TEST(Isotone, CertifiedValuationsOnDS) {
    auto g = support::rng(35);
    for (std::size_t k = 1; k <= 3; ++k)
        for (int i = 0; i < 5; ++i) {
            const auto s = make(letter_space(k), support::random_weights(g, k, true));
            EXPECT_TRUE(is_isotone(s.A, s.v));
        }
    const auto K = kleene_algebra();
    EXPECT_TRUE(is_isotone(K, {tvalue(0, 1, 1, 1), tvalue(0, 1, 0, 1), tvalue(1, 1, 0, 1)}));
}

TEST(Isotone, WitnessOnArtificialInput) {
    const auto K = kleene_algebra();
    const auto r = is_isotone(K, {tvalue(1, 1, 0, 1), tvalue(0, 1, 0, 1), tvalue(0, 1, 1, 1)});
    ASSERT_FALSE(r);
    ASSERT_EQ(r.witness.size(), 2U);
    EXPECT_TRUE(K.leq(r.witness[0], r.witness[1]));
}

TEST(Indetermination, Examples) {
    const auto s = k1();
    const Elem a = s.at(O, Z);
    EXPECT_EQ(indetermination(s.v, a), make_rational(1, 4));
    EXPECT_EQ(bias(s.v, a), 2);
    EXPECT_EQ(indetermination(s.v, s.A.top()), 0);
    EXPECT_THROW(bias(s.v, s.A.fix()), PreconditionError);
}

TEST(Indetermination, EqualIndeterminationMeansComparable) {
    auto g = support::rng(36);
    for (int i = 0; i < 5; ++i) {
        const auto s = make(letter_space(3), support::random_weights(g, 3, true));
        for (Elem a = 0; a < s.A.size(); ++a)
            for (Elem b = 0; b < s.A.size(); ++b)
                if (indetermination(s.v, a) == indetermination(s.v, b))
                    EXPECT_TRUE(precedes(s.v[a], s.v[b]) || precedes(s.v[b], s.v[a]));
        for (Elem a : boolean_elements(s.A)) EXPECT_EQ(indetermination(s.v, a), 0);
    }
}

TEST(Relativized, TopIsDivisionByOne) {
    const auto s = k1();
    const auto ctx = relativized_partial_valuation(s.A, s.v, s.A.top());
    EXPECT_EQ(ctx.values, s.v);
    EXPECT_EQ(conditional_partial_valuation(s.A, s.v, s.A.top()), s.v);
}

TEST(Relativized, WorldsExample) {
    const auto s = k1();
    const Elem h = s.at(Z | O, 0);
    const Elem x = s.at(O, Z);
    const auto ctx = relativized_partial_valuation(s.A, s.v, h);
    EXPECT_TRUE(is_partial_valuation(ctx.interval.algebra, ctx.values));
    const auto vh = ctx.values[ctx.interval.projection(x)];
    EXPECT_EQ(vh, tvalue(1, 3, 2, 3));
    EXPECT_TRUE(in_T(vh));
    const auto cond = conditional_partial_valuation(s.A, s.v, h);
    EXPECT_EQ(cond[x], tvalue(1, 3, 2, 3));
    EXPECT_EQ(cond[h], tvalue(1, 1, 0, 1));
}

TEST(Relativized, PreconditionsAreReportedDistinctly) {
    auto kind_of = [](auto&& f) {
        try {
            f();
        } catch (const PreconditionError& e) {
            return e.kind();
        }
        ADD_FAILURE() << "no error";
        return Precondition::cap_exceeded;
    };
    const auto s = k1();
    EXPECT_EQ(kind_of([&] { relativized_partial_valuation(s.A, s.v, s.at(O, Z)); }), Precondition::not_in_nabla);

    const auto p = make({"0", "n", "1"}, {1, 0, 0});
    EXPECT_EQ(kind_of([&] { relativized_partial_valuation(p.A, p.v, p.at(N | O, 0)); }), Precondition::zero_measure);

    const auto K = kleene_algebra();
    const PartialValuation wrong{tvalue(1, 1, 0, 1), tvalue(0, 1, 0, 1), tvalue(0, 1, 1, 1)};
    EXPECT_EQ(kind_of([&] { relativized_partial_valuation(K, wrong, 2); }), Precondition::not_isotone);
}

TEST(Conditional, GivenItselfIsOne) {
    auto g = support::rng(37);
    for (int i = 0; i < 3; ++i) {
        const auto s = make(letter_space(3), support::random_weights(g, 3, false));
        for (Elem h : nabla(s.A)) {
            if (s.v[h].first == 0) continue;
            const auto c = conditional_partial_valuation(s.A, s.v, h);
            EXPECT_EQ(c[h], tvalue(1, 1, 0, 1));
            EXPECT_TRUE(is_partial_valuation(s.A, c));
        }
    }
}

TEST(WeakBayes, Examples) {
    const auto s = k1();
    const Elem e = s.at(Z | O, 0);
    const auto same = weak_bayes(s.A, s.v, e, e);
    EXPECT_EQ(same.lhs, tvalue(1, 1, 0, 1));
    EXPECT_TRUE(same.holds());
    const auto w = weak_bayes(s.A, s.v, s.A.top(), e);
    EXPECT_EQ(w.lhs, tvalue(1, 1, 0, 1));
    EXPECT_EQ(w.rhs, tvalue(1, 1, 0, 1));
}

TEST(WeakBayes, AllPairsOnThreePoints) {
    auto g = support::rng(38);
    for (int i = 0; i < 3; ++i) {
        const auto s = make(letter_space(3), support::random_weights(g, 3, true));
        for (Elem h : nabla(s.A))
            for (Elem e : nabla(s.A)) {
                if (s.v[h].first == 0 || s.v[e].first == 0) continue;
                EXPECT_TRUE(weak_bayes(s.A, s.v, h, e).holds());
            }
    }
}

TEST(PosNeg, WorldsExample) {
    const auto s = k1();
    const Elem e = s.at(O, Z);
    const auto r = posneg_conditional_identity(s.A, s.v, e, e);
    EXPECT_EQ(r.given_plus, tvalue(1, 1, 0, 1));
    EXPECT_EQ(r.given_both, tvalue(1, 3, 2, 3));
    EXPECT_EQ(r.given_minus, tvalue(0, 1, 1, 1));
    EXPECT_EQ(r.theta, 2);
    EXPECT_EQ(r.lhs, tvalue(1, 1, 0, 1));
    EXPECT_EQ(r.rhs, tvalue(1, 1, 0, 1));
    const auto parts = posneg_parts(s.A, e);
    EXPECT_EQ(parts.plus, s.at(O, 0));
    EXPECT_EQ(parts.minus, s.at(Z, 0));
    EXPECT_EQ(parts.both, s.at(Z | O, 0));
}

TEST(PosNeg, NeedsBothComponents) {
    const auto s = k1();
    try {
        posneg_conditional_identity(s.A, s.v, s.A.top(), s.at(O, 0));
        FAIL() << "accepted";
    } catch (const PreconditionError& e) {
        EXPECT_EQ(e.kind(), Precondition::zero_measure);
    }
}

TEST(PosNeg, AllPairsOnSmallSpaces) {
    auto g = support::rng(39);
    for (std::size_t k = 1; k <= 3; ++k)
        for (int i = 0; i < 3; ++i) {
            const auto s = make(letter_space(k), support::random_weights(g, k, true));
            for (Elem e = 0; e < s.A.size(); ++e) {
                if (s.v[e].first == 0 || s.v[e].second == 0) continue;
                const auto c = posneg_conditionals(s.A, s.v, e);
                for (Elem h = 0; h < s.A.size(); ++h) EXPECT_TRUE(c.at(h).holds());
            }
        }
}
