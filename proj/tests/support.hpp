// Shared test helpers: seeded generators and brute-force oracles that do not
// go through the library's own evaluation paths.
#pragma once

#include <pprob/pprob.hpp>

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace support {

using pprob::Elem;
using pprob::Formula;
using pprob::Rational;

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

/// Positive integer weights normalised to sum 1. Zero weights appear when
/// `allow_zero` is set.
inline std::vector<Rational> random_weights(std::mt19937_64& g, std::size_t k, bool allow_zero = false) {
    std::uniform_int_distribution<int> d(allow_zero ? 0 : 1, 9);
    std::vector<long long> raw(k);
    long long total = 0;
    for (auto& r : raw) total += r = d(g);
    if (total == 0) {
        raw[0] = 1;
        total = 1;
    }
    std::vector<Rational> out;
    for (auto r : raw) out.push_back(pprob::make_rational(r, total));
    return out;
}

/// Random formula over p0..p(n-1); `with_unknown` allows the constant n.
inline Formula random_formula(std::mt19937_64& g, std::size_t n, std::size_t depth, bool with_unknown = true) {
    std::uniform_int_distribution<int> pick(0, 9);
    const int r = pick(g);
    if (depth == 0 || r < 3) {
        const int leaf = std::uniform_int_distribution<int>(0, static_cast<int>(n) + 2)(g);
        if (leaf < static_cast<int>(n)) return Formula::var(static_cast<std::size_t>(leaf));
        if (leaf == static_cast<int>(n)) return Formula::zero();
        if (leaf == static_cast<int>(n) + 1) return Formula::one();
        return with_unknown ? Formula::unknown() : Formula::var(0);
    }
    if (r < 5) return ~random_formula(g, n, depth - 1, with_unknown);
    if (r < 8) return random_formula(g, n, depth - 1, with_unknown) & random_formula(g, n, depth - 1, with_unknown);
    return random_formula(g, n, depth - 1, with_unknown) | random_formula(g, n, depth - 1, with_unknown);
}

// ---------------------------------------------------------------------------
// Oracles

/// Kleene truth on codes 0 < 1 < 2 (false, unknown, true); world symbols '0','n','1'.
inline int oracle_truth(const Formula& f, const std::string& world) {
    using K = Formula::Kind;
    switch (f.kind()) {
        case K::var: {
            const char c = world.at(f.index());
            return c == '0' ? 0 : c == 'n' ? 1 : 2;
        }
        case K::zero: return 0;
        case K::one: return 2;
        case K::unknown: return 1;
        case K::neg: return 2 - oracle_truth(f.operand(), world);
        case K::conj: {
            const int a = oracle_truth(f.left(), world), b = oracle_truth(f.right(), world);
            return a < b ? a : b;
        }
        case K::disj: {
            const int a = oracle_truth(f.left(), world), b = oracle_truth(f.right(), world);
            return a > b ? a : b;
        }
    }
    return -1;
}

/// All worlds over an alphabet, p0 first, by nested loops.
inline std::vector<std::string> oracle_worlds(std::size_t n, const std::string& alphabet) {
    std::vector<std::string> out{""};
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::string> next;
        for (const auto& w : out)
            for (char c : alphabet) next.push_back(w + c);
        out = std::move(next);
    }
    return out;
}

/// A partial set as explicit point sets.
struct SetPair {
    std::set<std::size_t> pos, neg;
    friend bool operator==(const SetPair&, const SetPair&) = default;
};

inline SetPair to_sets(pprob::PartialSet p) {
    SetPair s;
    for (std::size_t i = 0; i < 64; ++i) {
        if (p.pos >> i & 1U) s.pos.insert(i);
        if (p.neg >> i & 1U) s.neg.insert(i);
    }
    return s;
}

/// (A,B) ⊓ (C,D) = (A∩C, B∪D) etc. on explicit sets.
inline SetPair oracle_meet(const SetPair& a, const SetPair& b) {
    SetPair r;
    for (auto x : a.pos)
        if (b.pos.count(x)) r.pos.insert(x);
    r.neg = a.neg;
    r.neg.insert(b.neg.begin(), b.neg.end());
    return r;
}

inline SetPair oracle_join(const SetPair& a, const SetPair& b) {
    SetPair r;
    r.pos = a.pos;
    r.pos.insert(b.pos.begin(), b.pos.end());
    for (auto x : a.neg)
        if (b.neg.count(x)) r.neg.insert(x);
    return r;
}

inline Rational oracle_mass(const std::set<std::size_t>& s, const std::vector<Rational>& w) {
    Rational total = 0;
    for (auto x : s) total += w.at(x);
    return total;
}

/// Index of an element by name; the test fails loudly if it is missing.
template <class Alg>
Elem el(const Alg& A, const std::string& name) {
    auto e = A.find(name);
    if (!e) throw std::runtime_error("no element " + name);
    return *e;
}

}  // namespace support
