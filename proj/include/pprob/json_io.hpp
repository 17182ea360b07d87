// JSON input and output for lattices, algebras, valuations, weights, fields
// of partial sets and translation certificates. Malformed input throws
// std::invalid_argument.
#pragma once

#include "dmf.hpp"
#include "lattice.hpp"
#include "partial_set.hpp"
#include "partial_valuation.hpp"
#include "prob_sentences.hpp"
#include "translate.hpp"

#include <json.hpp>

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace pprob {

/// Keys keep insertion order so output is byte-stable.
using Json = nlohmann::ordered_json;

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

namespace detail {

inline const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

inline std::string as_string(const Json& j, const char* what) {
    if (!j.is_string()) throw std::invalid_argument(std::string(what) + " must be a string");
    return j.get<std::string>();
}

inline std::vector<std::string> string_list(const Json& j, const char* what) {
    if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be an array of strings");
    std::vector<std::string> out;
    for (const auto& e : j) out.push_back(as_string(e, what));
    return out;
}

/// An element given by name or by index.
inline Elem element_ref(const Json& j, const std::vector<std::string>& names) {
    if (j.is_number_unsigned() || (j.is_number_integer() && j.get<long long>() >= 0)) {
        const auto i = j.get<std::size_t>();
        if (i >= names.size()) throw std::invalid_argument("element index " + std::to_string(i) + " out of range");
        return i;
    }
    const auto name = as_string(j, "element");
    for (Elem i = 0; i < names.size(); ++i)
        if (names[i] == name) return i;
    throw std::invalid_argument("unknown element '" + name + "'");
}

inline std::vector<std::vector<Elem>> table(const Json& j, const std::vector<std::string>& names, const char* what) {
    if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be an array of rows");
    std::vector<std::vector<Elem>> out;
    for (const auto& row : j) {
        if (!row.is_array()) throw std::invalid_argument(std::string(what) + " rows must be arrays");
        out.emplace_back();
        for (const auto& e : row) out.back().push_back(element_ref(e, names));
    }
    return out;
}

inline std::uint64_t point_mask(const Json& j, const std::vector<std::string>& space) {
    std::uint64_t m = 0;
    for (const auto& name : string_list(j, "partial set side")) {
        auto it = std::find(space.begin(), space.end(), name);
        if (it == space.end()) throw std::invalid_argument("unknown sample point '" + name + "'");
        m |= std::uint64_t{1} << (it - space.begin());
    }
    return m;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Scalars

/// "3/4", "2" or a JSON integer.
inline Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    return parse_rational(detail::as_string(j, "rational"));
}

inline Json to_json(const Rational& q) { return to_string(q); }

inline TValue tvalue_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw std::invalid_argument("a value in T is a pair [a, b]");
    return {rational_from_json(j[0]), rational_from_json(j[1])};
}

inline Json to_json(const TValue& t) { return Json::array({to_string(t.first), to_string(t.second)}); }

inline LogicKind logic_from_string(const std::string& s) {
    if (s == "kleene" || s == "partial") return LogicKind::kleene;
    if (s == "classical") return LogicKind::classical;
    throw std::invalid_argument("logic must be kleene or classical, not '" + s + "'");
}

// ---------------------------------------------------------------------------
// Lattices and DMF-algebras

/// {"elements", "meet", "join", "bottom", "top"}; entries are names or indices.
inline LatticeTables lattice_tables_from_json(const Json& j) {
    LatticeTables t;
    t.elements = detail::string_list(detail::field(j, "elements"), "elements");
    t.meet = detail::table(detail::field(j, "meet"), t.elements, "meet");
    t.join = detail::table(detail::field(j, "join"), t.elements, "join");
    t.bottom = detail::element_ref(detail::field(j, "bottom"), t.elements);
    t.top = detail::element_ref(detail::field(j, "top"), t.elements);
    return t;
}

/// Lattice fields plus "neg" (array or name map) and "fix".
inline DmfTables dmf_tables_from_json(const Json& j) {
    DmfTables t;
    t.lattice = lattice_tables_from_json(j);
    const auto& names = t.lattice.elements;
    const auto& neg = detail::field(j, "neg");
    if (neg.is_array()) {
        for (const auto& e : neg) t.neg.push_back(detail::element_ref(e, names));
    } else if (neg.is_object()) {
        t.neg.assign(names.size(), names.size());
        for (const auto& [k, v] : neg.items()) t.neg.at(detail::element_ref(Json(k), names)) = detail::element_ref(v, names);
        for (Elem e : t.neg)
            if (e == names.size()) throw std::invalid_argument("neg is not total");
    } else {
        throw std::invalid_argument("neg must be an array or an object");
    }
    t.fix = detail::element_ref(detail::field(j, "fix"), names);
    return t;
}

inline Json to_json(const LatticeTables& t) {
    Json j;
    j["elements"] = t.elements;
    auto named = [&](const std::vector<std::vector<Elem>>& m) {
        Json rows = Json::array();
        for (const auto& row : m) {
            Json r = Json::array();
            for (Elem e : row) r.push_back(t.elements[e]);
            rows.push_back(r);
        }
        return rows;
    };
    j["meet"] = named(t.meet);
    j["join"] = named(t.join);
    j["bottom"] = t.elements[t.bottom];
    j["top"] = t.elements[t.top];
    return j;
}

inline Json to_json(const FiniteLattice& L) { return to_json(L.tables()); }

inline Json to_json(const DmfAlgebra& A) {
    Json j = to_json(A.lattice());
    Json neg = Json::array();
    for (Elem e : A.neg_table()) neg.push_back(A.name(e));
    j["neg"] = neg;
    j["fix"] = A.name(A.fix());
    return j;
}

// ---------------------------------------------------------------------------
// Valuations

/// {"values": {element: q}}, total on the lattice.
inline Valuation valuation_from_json(const FiniteLattice& L, const Json& j) {
    const auto& values = detail::field(j, "values");
    if (!values.is_object()) throw std::invalid_argument("values must be an object");
    std::vector<bool> seen(L.size(), false);
    Valuation v(L.size(), Rational(0));
    for (const auto& [k, q] : values.items()) {
        const Elem e = detail::element_ref(Json(k), L.names());
        v[e] = rational_from_json(q);
        seen[e] = true;
    }
    for (Elem e = 0; e < L.size(); ++e)
        if (!seen[e]) throw std::invalid_argument("no value for element '" + L.name(e) + "'");
    return v;
}

/// {"values": {element: [a, b]}}, total on the algebra.
inline PartialValuation partial_valuation_from_json(const DmfAlgebra& A, const Json& j) {
    const auto& values = detail::field(j, "values");
    if (!values.is_object()) throw std::invalid_argument("values must be an object");
    std::vector<bool> seen(A.size(), false);
    PartialValuation v(A.size());
    for (const auto& [k, t] : values.items()) {
        const Elem e = detail::element_ref(Json(k), A.names());
        v[e] = tvalue_from_json(t);
        seen[e] = true;
    }
    for (Elem e = 0; e < A.size(); ++e)
        if (!seen[e]) throw std::invalid_argument("no value for element '" + A.name(e) + "'");
    return v;
}

// ---------------------------------------------------------------------------
// World weights

/// {"n", "logic", "weights": {world: q}}; missing worlds weigh 0. Without
/// "n" the arity is the world length.
inline WorldWeights weights_from_json(const Json& j) {
    const LogicKind kind = j.contains("logic") ? logic_from_string(detail::as_string(j.at("logic"), "logic"))
                                               : LogicKind::kleene;
    const auto& weights = detail::field(j, "weights");
    if (!weights.is_object()) throw std::invalid_argument("weights must be an object keyed by world");
    std::map<std::string, Rational> w;
    for (const auto& [world, q] : weights.items()) w[world] = rational_from_json(q);
    std::size_t n = 0;
    if (j.contains("n")) {
        if (!j.at("n").is_number_unsigned()) throw std::invalid_argument("n must be a nonnegative integer");
        n = j.at("n").get<std::size_t>();
    } else if (!w.empty()) {
        n = w.begin()->first.size();
    }
    return WorldWeights::make(n, kind, w);
}

inline Json to_json(const WorldWeights& w) {
    Json j;
    j["n"] = w.n();
    j["logic"] = to_string(w.kind());
    Json ws = Json::object();
    for (std::size_t i = 0; i < w.worlds().size(); ++i) ws[w.worlds()[i]] = to_string(w.weights()[i]);
    j["weights"] = ws;
    return j;
}

// ---------------------------------------------------------------------------
// Sample spaces, partial sets and fields

/// {"pos": [...], "neg": [...]} over named points.
inline PartialSet partial_set_from_json(const Json& j, const std::vector<std::string>& space) {
    return {detail::point_mask(detail::field(j, "pos"), space), detail::point_mask(detail::field(j, "neg"), space)};
}

inline Json to_json(PartialSet p, const std::vector<std::string>& space) {
    Json j;
    Json pos = Json::array(), neg = Json::array();
    for (std::size_t i = 0; i < space.size(); ++i) {
        if (p.pos >> i & 1U) pos.push_back(space[i]);
        if (p.neg >> i & 1U) neg.push_back(space[i]);
    }
    j["pos"] = pos;
    j["neg"] = neg;
    return j;
}

/// A finite space with point weights: {"space": [...], "weights": {point: q}}.
struct PointWeights {
    std::vector<std::string> space;
    std::vector<Rational> weights;
};

inline PointWeights point_weights_from_json(const Json& j) {
    PointWeights out;
    out.space = detail::string_list(detail::field(j, "space"), "space");
    out.weights.assign(out.space.size(), Rational(0));
    const auto& ws = detail::field(j, "weights");
    if (!ws.is_object()) throw std::invalid_argument("weights must be an object keyed by point");
    for (const auto& [k, q] : ws.items()) {
        auto it = std::find(out.space.begin(), out.space.end(), k);
        if (it == out.space.end()) throw std::invalid_argument("unknown sample point '" + k + "'");
        out.weights[it - out.space.begin()] = rational_from_json(q);
    }
    validate_weights(out.weights);
    return out;
}

struct FieldMeasure {
    PartialField field;
    PartialMeasure mu;
};

/// Either {"space", "weights"} for the associated measure on all of D(S),
/// {"space", "members", "weights"} for the associated measure on a subfield,
/// or {"space", "members"} where every member carries "value": [a, b].
/// The measure is not certified here.
inline FieldMeasure field_measure_from_json(const Json& j) {
    const auto space = detail::string_list(detail::field(j, "space"), "space");
    if (!j.contains("members")) {
        const auto pw = point_weights_from_json(j);
        auto F = enumerate_DS(space);
        auto mu = associated_partial_space(F, pw.weights);
        return {std::move(F), std::move(mu)};
    }
    const auto& members = j.at("members");
    if (!members.is_array()) throw std::invalid_argument("members must be an array of partial sets");
    std::vector<PartialSet> sets;
    for (const auto& m : members) sets.push_back(partial_set_from_json(m, space));
    auto F = PartialField::certify(space, sets);
    if (j.contains("weights")) {
        const auto pw = point_weights_from_json(j);
        auto mu = associated_partial_space(F, pw.weights);
        return {std::move(F), std::move(mu)};
    }
    PartialMeasure mu(F.size());
    std::vector<bool> seen(F.size(), false);
    for (std::size_t i = 0; i < members.size(); ++i) {
        const Elem e = *F.index_of(sets[i]);
        if (!members[i].contains("value")) throw std::invalid_argument("member " + F.name(e) + " has no value");
        const TValue t = tvalue_from_json(members[i].at("value"));
        if (seen[e] && !(mu[e] == t)) throw std::invalid_argument("member " + F.name(e) + " is listed twice with different values");
        mu[e] = t;
        seen[e] = true;
    }
    return {std::move(F), std::move(mu)};
}

inline Json to_json(const PartialField& F, const PartialMeasure& mu) {
    Json j;
    j["space"] = F.space();
    Json members = Json::array();
    for (Elem e = 0; e < F.size(); ++e) {
        Json m = to_json(F.members()[e], F.space());
        m["value"] = to_json(mu.at(e));
        members.push_back(m);
    }
    j["members"] = members;
    return j;
}

/// {"n", "values": {formula: [a, b]}}: a partial probability function given
/// on finitely many sentences.
struct AuditTable {
    std::size_t n = 0;
    std::vector<std::pair<Formula, TValue>> values;  // in file order
};

inline AuditTable audit_table_from_json(const Json& j) {
    AuditTable out;
    const auto& n = detail::field(j, "n");
    if (!n.is_number_unsigned()) throw std::invalid_argument("n must be a nonnegative integer");
    out.n = n.get<std::size_t>();
    const auto& values = detail::field(j, "values");
    if (!values.is_object()) throw std::invalid_argument("values must be an object keyed by formula");
    for (const auto& [text, t] : values.items()) out.values.emplace_back(parse(text, out.n), tvalue_from_json(t));
    return out;
}

// ---------------------------------------------------------------------------
// Certificates

inline Json to_json(const TranslationCertificate& c) {
    Json j;
    j["direction"] = c.direction;
    j["logic"] = c.logic;
    j["ok"] = c.ok();
    Json facts = Json::object();
    for (const auto& [k, v] : c.facts) facts[k] = v;
    j["facts"] = facts;
    Json rows = Json::array();
    for (const auto& r : c.equalities) {
        Json row;
        row["event"] = r.event;
        row["formula"] = r.formula;
        row["lhs"] = r.lhs;
        row["rhs"] = r.rhs;
        row["equal"] = r.equal;
        rows.push_back(row);
    }
    j["equalities"] = rows;
    j["corpus_checked"] = c.corpus_checked;
    j["failures"] = c.failures;
    return j;
}

}  // namespace pprob
