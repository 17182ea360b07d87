// Per-law certification tables for lattices, DMF-algebras, valuations and
// partial measures.
#pragma once

#include "dmf.hpp"
#include "lattice.hpp"
#include "partial_set.hpp"
#include "partial_valuation.hpp"

#include <string>
#include <vector>

namespace pprob {

enum class LawStatus { pass, fail, skipped, info };

struct LawRow {
    std::string law;
    LawStatus status = LawStatus::pass;
    std::string note;  // witness and detail on failure, the answer for info rows
};

struct LawReport {
    std::vector<LawRow> rows;

    bool ok() const {
        for (const auto& r : rows)
            if (r.status == LawStatus::fail) return false;
        return true;
    }
    std::size_t failures() const {
        std::size_t k = 0;
        for (const auto& r : rows) k += r.status == LawStatus::fail;
        return k;
    }
};

namespace detail {

inline std::string describe_failure(const CheckResult& r, const std::vector<std::string>& names) {
    std::string s;
    if (!r.witness.empty()) {
        s = "witness";
        for (Elem e : r.witness) s += " " + (e < names.size() ? names[e] : std::to_string(e));
    }
    if (!r.detail.empty()) s += (s.empty() ? "" : ": ") + r.detail;
    return s;
}

/// Rows for laws checked in sequence by one diagnostic: pass up to the first
/// failure, skipped after it.
inline void sequential_rows(LawReport& rep, const std::vector<std::string>& laws, const CheckResult& r,
                            const std::vector<std::string>& names, std::size_t failed_at) {
    for (std::size_t i = 0; i < laws.size(); ++i) {
        if (r || i < failed_at) rep.rows.push_back({laws[i], LawStatus::pass, {}});
        else if (i == failed_at) rep.rows.push_back({laws[i], LawStatus::fail, describe_failure(r, names)});
        else rep.rows.push_back({laws[i], LawStatus::skipped, {}});
    }
}

inline std::size_t position(const std::vector<std::string>& laws, const std::string& law) {
    for (std::size_t i = 0; i < laws.size(); ++i)
        if (laws[i] == law) return i;
    return 0;
}

}  // namespace detail

inline LawReport lattice_report(const LatticeTables& t) {
    static const std::vector<std::string> laws{"shape",      "idempotence", "commutativity", "associativity",
                                               "absorption", "bounds",      "degenerate"};
    LawReport rep;
    const auto r = diagnose_lattice(t);
    // An out-of-range bottom or top is caught right after the shape check.
    std::size_t at = r ? laws.size() : detail::position(laws, r.law);
    if (!r && r.law == "bounds" && r.witness.empty()) {
        rep.rows.push_back({"shape", LawStatus::pass, {}});
        rep.rows.push_back({"bounds", LawStatus::fail, r.detail});
        for (std::size_t i = 1; i + 2 < laws.size(); ++i) rep.rows.push_back({laws[i], LawStatus::skipped, {}});
        rep.rows.push_back({"degenerate", LawStatus::skipped, {}});
        return rep;
    }
    detail::sequential_rows(rep, laws, r, t.elements, at);
    if (r) rep.rows.push_back({"distributive", LawStatus::info, check_distributive(FiniteLattice::certify(t)) ? "yes" : "no"});
    return rep;
}

/// The lattice laws as one row, then distributivity, then every negation law
/// on its own.
inline LawReport dmf_report(const DmfTables& t) {
    LawReport rep;
    const auto& names = t.lattice.elements;
    auto skip_rest = [&rep](std::size_t from) {
        static const std::vector<std::string> later{"distributivity", "shape"};
        for (std::size_t i = from; i < later.size(); ++i) rep.rows.push_back({later[i], LawStatus::skipped, {}});
        for (const auto& law : dmf_negation_laws()) rep.rows.push_back({law, LawStatus::skipped, {}});
    };
    if (auto r = diagnose_lattice(t.lattice); !r) {
        rep.rows.push_back({"lattice laws", LawStatus::fail, r.law + (r.witness.empty() && r.detail.empty() ? "" : ", ") +
                                                                 detail::describe_failure(r, names)});
        skip_rest(0);
        return rep;
    }
    rep.rows.push_back({"lattice laws", LawStatus::pass, {}});
    const auto L = FiniteLattice::certify(t.lattice);
    if (auto r = check_distributive(L); !r) {
        rep.rows.push_back({"distributivity", LawStatus::fail, detail::describe_failure(r, names)});
        skip_rest(1);
        return rep;
    }
    rep.rows.push_back({"distributivity", LawStatus::pass, {}});
    if (auto r = check_dmf_shape(L.size(), t.neg, t.fix); !r) {
        rep.rows.push_back({"shape", LawStatus::fail, r.detail});
        skip_rest(2);
        return rep;
    }
    rep.rows.push_back({"shape", LawStatus::pass, {}});
    for (const auto& law : dmf_negation_laws()) {
        const auto r = check_dmf_law(L, t.neg, t.fix, law);
        rep.rows.push_back({law, r ? LawStatus::pass : LawStatus::fail, r ? "" : detail::describe_failure(r, names)});
    }
    return rep;
}

/// Valuation laws, then range and isotonicity, then additivity on Boolean lattices.
inline LawReport valuation_report(const FiniteLattice& L, const Valuation& v) {
    static const std::vector<std::string> laws{"bottom", "top", "modularity"};
    LawReport rep;
    const auto r = is_valuation(L, v);
    detail::sequential_rows(rep, laws, r, L.names(), r ? laws.size() : detail::position(laws, r.law));
    auto row = [&](const std::string& law, const CheckResult& c) {
        rep.rows.push_back({law, c ? LawStatus::pass : LawStatus::fail, c ? "" : detail::describe_failure(c, L.names())});
    };
    row("range", in_unit_range(L, v));
    row("isotonicity", is_isotone(L, v));
    if (is_boolean(L)) {
        const bool additive = check_boolean_valuation_additivity(L, v).second;
        rep.rows.push_back({"additivity", additive ? LawStatus::pass : LawStatus::fail, {}});
    }
    return rep;
}

/// Axioms in sequence, then the structural consequences and isotonicity.
inline LawReport partial_valuation_report(const DmfAlgebra& A, const PartialValuation& v) {
    static const std::vector<std::string> laws{"shape", "axiom 1", "axiom 2", "axiom 3", "axiom 4", "range"};
    LawReport rep;
    const auto r = is_partial_valuation(A, v);
    detail::sequential_rows(rep, laws, r, A.names(), r ? laws.size() : detail::position(laws, r.law));
    if (v.size() != A.size()) return rep;
    for (const auto& [name, c] : structural_properties(A, v).items)
        rep.rows.push_back({name, c ? LawStatus::pass : LawStatus::fail, c ? "" : detail::describe_failure(c, A.names())});
    const auto iso = is_isotone(A, v);
    rep.rows.push_back({"isotonicity", iso ? LawStatus::pass : LawStatus::fail,
                        iso ? "" : detail::describe_failure(iso, A.names())});
    return rep;
}

/// Every measure law on its own.
inline LawReport partial_measure_report(const PartialField& F, const PartialMeasure& mu) {
    LawReport rep;
    std::vector<std::string> names;
    for (Elem e = 0; e < F.size(); ++e) names.push_back(F.name(e));
    if (mu.size() != F.size()) {
        rep.rows.push_back({"shape", LawStatus::fail, "measure is not total on the field"});
        for (const auto& law : partial_measure_laws()) rep.rows.push_back({law, LawStatus::skipped, {}});
        return rep;
    }
    rep.rows.push_back({"shape", LawStatus::pass, {}});
    for (const auto& law : partial_measure_laws()) {
        const auto r = check_partial_measure_law(F, mu, law);
        rep.rows.push_back({law, r ? LawStatus::pass : LawStatus::fail, r ? "" : detail::describe_failure(r, names)});
    }
    return rep;
}

}  // namespace pprob
