// Prime ideals and filters of finite DMF-algebras, separation pairs and the
// epimorphisms φ_I onto K.
#pragma once

#include "dmf.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace pprob {

struct IdealOrFilter {
    enum class Kind { ideal, filter };
    std::vector<Elem> carrier;  // ascending
    Kind kind = Kind::ideal;
    bool prime = false;
    bool excludes_fix = false;  // n ∉ carrier

    bool contains(Elem x) const { return std::binary_search(carrier.begin(), carrier.end(), x); }
    friend bool operator==(const IdealOrFilter&, const IdealOrFilter&) = default;
};

inline std::vector<bool> membership(const std::vector<Elem>& carrier, std::size_t size) {
    std::vector<bool> in(size, false);
    for (Elem x : carrier) in.at(x) = true;
    return in;
}

/// Nonempty, proper, down-closed, join-closed; prime when x∧y ∈ I forces x ∈ I or y ∈ I.
template <class Alg>
CheckResult check_prime_ideal(const Alg& A, const std::vector<Elem>& carrier) {
    auto in = membership(carrier, A.size());
    if (carrier.empty()) return CheckResult::fail("nonempty", {});
    if (in[A.top()]) return CheckResult::fail("proper", {A.top()});
    for (Elem x : carrier)
        for (Elem y = 0; y < A.size(); ++y) {
            if (A.leq(y, x) && !in[y]) return CheckResult::fail("down-closed", {x, y});
            if (in[y] && !in[A.join(x, y)]) return CheckResult::fail("join-closed", {x, y});
        }
    for (Elem x = 0; x < A.size(); ++x)
        for (Elem y = 0; y < A.size(); ++y)
            if (in[A.meet(x, y)] && !in[x] && !in[y]) return CheckResult::fail("prime", {x, y});
    return CheckResult::pass();
}

template <class Alg>
CheckResult check_prime_filter(const Alg& A, const std::vector<Elem>& carrier) {
    auto in = membership(carrier, A.size());
    if (carrier.empty()) return CheckResult::fail("nonempty", {});
    if (in[A.bottom()]) return CheckResult::fail("proper", {A.bottom()});
    for (Elem x : carrier)
        for (Elem y = 0; y < A.size(); ++y) {
            if (A.leq(x, y) && !in[y]) return CheckResult::fail("up-closed", {x, y});
            if (in[y] && !in[A.meet(x, y)]) return CheckResult::fail("meet-closed", {x, y});
        }
    for (Elem x = 0; x < A.size(); ++x)
        for (Elem y = 0; y < A.size(); ++y)
            if (in[A.join(x, y)] && !in[x] && !in[y]) return CheckResult::fail("prime", {x, y});
    return CheckResult::pass();
}

/// ¬X = {¬x : x ∈ X}, ascending.
inline std::vector<Elem> negate_set(const DmfAlgebra& A, const std::vector<Elem>& carrier) {
    std::vector<Elem> out;
    for (Elem x : carrier) out.push_back(A.neg(x));
    std::sort(out.begin(), out.end());
    return out;
}

/// All proper prime ideals by exhaustive subset enumeration, in lexicographic
/// order of their ascending index vectors. Works on plain lattices too; there
/// `excludes_fix` is always false.
template <class Alg>
std::vector<IdealOrFilter> enumerate_prime_ideals(const Alg& A, std::size_t cap = 16) {
    const std::size_t n = A.size();
    if (n > cap)
        throw PreconditionError(Precondition::cap_exceeded,
                                "|A| = " + std::to_string(n) + " exceeds the subset enumeration cap " + std::to_string(cap));
    std::vector<IdealOrFilter> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<Elem> carrier;
        for (Elem x = 0; x < n; ++x)
            if (mask & (std::uint64_t{1} << x)) carrier.push_back(x);
        if (check_prime_ideal(A, carrier)) {
            bool no_fix = false;
            if constexpr (requires { A.fix(); })
                no_fix = !std::binary_search(carrier.begin(), carrier.end(), A.fix());
            out.push_back({std::move(carrier), IdealOrFilter::Kind::ideal, true, no_fix});
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.carrier < b.carrier; });
    return out;
}

struct SeparationPair {
    IdealOrFilter G;  // prime ideal
    IdealOrFilter H;  // prime filter, H = ¬G
};

/// G prime ideal, H prime filter, G ∩ H = ∅, H = ¬G, and
/// (a ∉ G and b ∈ G) or (a ∈ H and b ∉ H).
inline CheckResult check_separation(const DmfAlgebra& A, Elem a, Elem b, const SeparationPair& p) {
    if (auto d = check_prime_ideal(A, p.G.carrier); !d) return CheckResult::fail("G prime ideal: " + d.law, d.witness);
    if (auto d = check_prime_filter(A, p.H.carrier); !d) return CheckResult::fail("H prime filter: " + d.law, d.witness);
    for (Elem x : p.G.carrier)
        if (p.H.contains(x)) return CheckResult::fail("disjoint", {x});
    if (negate_set(A, p.G.carrier) != p.H.carrier) return CheckResult::fail("H = ~G", {});
    const bool first = !p.G.contains(a) && p.G.contains(b);
    const bool second = p.H.contains(a) && !p.H.contains(b);
    if (!first && !second) return CheckResult::fail("separation", {a, b});
    return CheckResult::pass();
}

inline SeparationPair make_pair_from_ideal(const DmfAlgebra& A, std::vector<Elem> g) {
    auto h = negate_set(A, g);
    const bool g_no_fix = !std::binary_search(g.begin(), g.end(), A.fix());
    return {{std::move(g), IdealOrFilter::Kind::ideal, true, g_no_fix},
            {std::move(h), IdealOrFilter::Kind::filter, true, g_no_fix}};
}

inline void require_not_below(const DmfAlgebra& A, Elem a, Elem b) {
    if (A.leq(a, b))
        throw PreconditionError(Precondition::order_violation, A.name(a) + " <= " + A.name(b));
}

/// The lexicographically least valid pair, scanning prime ideals without n.
inline SeparationPair separation_pair(const DmfAlgebra& A, Elem a, Elem b, std::size_t cap = 16) {
    require_not_below(A, a, b);
    for (const auto& I : enumerate_prime_ideals(A, cap)) {
        if (!I.excludes_fix) continue;
        auto p = make_pair_from_ideal(A, I.carrier);
        if (check_separation(A, a, b, p)) return p;
    }
    throw std::logic_error("no separation pair for " + A.name(a) + ", " + A.name(b));
}

/// Follows the existence argument: a prime ideal I with b ∈ I, a ∉ I; if
/// n ∉ I take (I, ¬I), otherwise F = A − I and take (¬F, F).
inline SeparationPair separation_pair_constructive(const DmfAlgebra& A, Elem a, Elem b, std::size_t cap = 16) {
    require_not_below(A, a, b);
    for (const auto& I : enumerate_prime_ideals(A, cap)) {
        if (!I.contains(b) || I.contains(a)) continue;
        if (I.excludes_fix) return make_pair_from_ideal(A, I.carrier);
        std::vector<Elem> F;
        for (Elem x = 0; x < A.size(); ++x)
            if (!I.contains(x)) F.push_back(x);
        return make_pair_from_ideal(A, negate_set(A, F));
    }
    throw std::logic_error("no prime ideal separates " + A.name(b) + " from " + A.name(a));
}

/// φ_I(a) = 0 on I, 1 on ¬I, n elsewhere; certified epimorphism onto K.
inline DmfMorphism phi_I(const DmfAlgebra& A, const std::vector<Elem>& ideal) {
    std::vector<Elem> I = ideal;
    std::sort(I.begin(), I.end());
    if (auto d = check_prime_ideal(A, I); !d)
        throw PreconditionError(Precondition::not_prime, "not a prime ideal (" + d.law + ")");
    if (std::binary_search(I.begin(), I.end(), A.fix()))
        throw PreconditionError(Precondition::contains_fixed_point, "the ideal contains n");
    auto in = membership(I, A.size());
    auto in_neg = membership(negate_set(A, I), A.size());
    std::vector<Elem> map(A.size());
    for (Elem x = 0; x < A.size(); ++x) map[x] = in[x] ? 0 : in_neg[x] ? 2 : 1;
    auto phi = DmfMorphism::certify(A, kleene_algebra(), std::move(map));
    if (!phi.surjective()) throw std::logic_error("phi_I is not onto K");
    return phi;
}

}  // namespace pprob
