// The pprob command line: eval, consequence, prob, bayes, translate, check.
// run_cli is callable in-process so golden tests need no subprocess.
#pragma once

#include "json_io.hpp"
#include "kleene.hpp"
#include "partial_valuation.hpp"
#include "prob_sentences.hpp"
#include "report.hpp"
#include "translate.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace pprob {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int fails = 1;
inline constexpr int usage = 2;
inline constexpr int precondition = 3;
}  // namespace exit_code

namespace cli_detail {

inline std::vector<std::string> split_premises(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    std::vector<std::string> kept;
    for (auto& s : out)
        if (s.find_first_not_of(" \t") != std::string::npos) kept.push_back(s);
    return kept;
}

inline void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

/// v(x) = (p(pos), p(neg)) on the subalgebra of D(K^n) generated by the
/// meanings of `formulas`.
struct LocalAlgebra {
    GeneratedSubalgebra<PartialSet> sub;
    PartialValuation v;
    std::vector<Elem> index;  // per input formula
};

inline LocalAlgebra local_algebra(const WorldWeights& w, const std::vector<Formula>& formulas) {
    std::vector<PartialSet> gens;
    for (const auto& f : formulas) gens.push_back(meaning_kleene(f, w.n()));
    const auto& worlds = w.worlds();
    auto sub = generated_subalgebra(PartialSetOps{worlds.size()}, gens,
                                    [&worlds](const PartialSet& p) { return ps_name(p, worlds); });
    PartialValuation v;
    for (const auto& m : sub.members) v.push_back({w.mass(m.pos), w.mass(m.neg)});
    std::vector<Elem> index;
    for (const auto& g : gens) index.push_back(*sub.index_of(g));
    return {std::move(sub), std::move(v), std::move(index)};
}

inline Formula parse_for(const std::string& text, const WorldWeights& w) { return parse(text, w.n(), w.kind()); }

// ---------------------------------------------------------------------------

struct EvalArgs {
    std::string formula, world, logic = "kleene";
    bool json = false;
};

inline int cmd_eval(const EvalArgs& a, std::ostream& out) {
    const LogicKind kind = logic_from_string(a.logic);
    const Formula f = parse(a.formula, a.world.size(), kind);
    char value;
    if (kind == LogicKind::kleene) {
        value = to_char(eval_kleene(f, a.world));
    } else {
        value = eval_classical(f, a.world) ? '1' : '0';
    }
    if (a.json) {
        Json j;
        j["formula"] = print(f);
        j["world"] = a.world;
        j["logic"] = to_string(kind);
        j["value"] = std::string(1, value);
        print_json(out, j);
    } else {
        out << value << '\n';
    }
    return exit_code::ok;
}

struct ConsequenceArgs {
    std::string premises, conclusion, logic = "kleene";
    std::optional<std::size_t> n;
    bool json = false;
};

inline int cmd_consequence(const ConsequenceArgs& a, std::ostream& out) {
    const LogicKind kind = logic_from_string(a.logic);
    std::vector<Formula> premises;
    for (const auto& text : split_premises(a.premises)) premises.push_back(parse(text, a.n, kind));
    const Formula conclusion = parse(a.conclusion, a.n, kind);
    std::size_t n = conclusion.arity();
    for (const auto& p : premises) n = std::max(n, p.arity());
    if (a.n) n = *a.n;
    require_arity(n, kind);
    const auto r = consequence(premises, conclusion, n, kind);
    if (a.json) {
        Json j;
        Json ps = Json::array();
        for (const auto& p : premises) ps.push_back(print(p));
        j["premises"] = ps;
        j["conclusion"] = print(conclusion);
        j["logic"] = to_string(kind);
        j["n"] = n;
        j["holds"] = r.holds;
        if (!r.holds) j["counter_world"] = *r.counter_world;
        print_json(out, j);
    } else if (r.holds) {
        out << "holds\n";
    } else {
        out << "does not hold; counter-world " << *r.counter_world << '\n';
    }
    return r.holds ? exit_code::ok : exit_code::fails;
}

struct ProbArgs {
    std::string weights, formula;
    std::optional<std::string> given;
    bool json = false;
};

inline int cmd_prob(const ProbArgs& a, std::ostream& out) {
    const auto w = weights_from_json(read_json_file(a.weights));
    const Formula f = parse_for(a.formula, w);
    Json value;
    std::string text;
    if (w.kind() == LogicKind::classical) {
        Rational q;
        if (a.given) {
            q = conditional_pi(w, parse_for(*a.given, w))(f);
        } else {
            q = classical_pi(w, f);
        }
        text = to_string(q);
        value = text;
    } else {
        TValue t;
        if (a.given) {
            const Formula g = parse_for(*a.given, w);
            const auto local = local_algebra(w, {f, g});
            t = conditional_partial_valuation(local.sub.algebra, local.v, local.index[1])[local.index[0]];
        } else {
            t = partial_pi(w, f);
        }
        text = to_string(t);
        value = to_json(t);
    }
    if (a.json) {
        Json j;
        j["formula"] = print(f);
        if (a.given) j["given"] = print(parse_for(*a.given, w));
        j["logic"] = to_string(w.kind());
        j["value"] = value;
        print_json(out, j);
    } else {
        out << text << '\n';
    }
    return exit_code::ok;
}

struct BayesArgs {
    std::string weights, hypothesis, evidence;
    bool posneg = false;
    bool json = false;
};

inline int cmd_bayes(const BayesArgs& a, std::ostream& out) {
    const auto w = weights_from_json(read_json_file(a.weights));
    const Formula h = parse_for(a.hypothesis, w);
    const Formula e = parse_for(a.evidence, w);
    std::vector<std::pair<std::string, std::string>> lines;  // label, value
    Json j;
    j["hypothesis"] = print(h);
    j["evidence"] = print(e);
    j["logic"] = to_string(w.kind());
    bool equal = false;
    if (w.kind() == LogicKind::classical) {
        if (a.posneg) throw PreconditionError(Precondition::kind_mismatch, "--posneg needs Kleene weights");
        const Rational ph = classical_pi(w, h), pe = classical_pi(w, e);
        if (ph == 0 || pe == 0) throw PreconditionError(Precondition::zero_measure, "hypothesis and evidence need nonzero probability");
        const Rational lhs = conditional_pi(w, e)(h);
        const Rational rhs = conditional_pi(w, h)(e) * ph / pe;
        lines = {{"lhs", to_string(lhs)}, {"rhs", to_string(rhs)}};
        j["lhs"] = to_string(lhs);
        j["rhs"] = to_string(rhs);
        equal = lhs == rhs;
    } else {
        const auto local = local_algebra(w, {h, e});
        const auto& A = local.sub.algebra;
        if (a.posneg) {
            const auto id = posneg_conditional_identity(A, local.v, local.index[0], local.index[1]);
            lines = {{"v(h|e+)", to_string(id.given_plus)},
                     {"v(h|nabla e)", to_string(id.given_both)},
                     {"v(h|e-)", to_string(id.given_minus)},
                     {"theta(e)", to_string(id.theta)},
                     {"lhs", to_string(id.lhs)},
                     {"rhs", to_string(id.rhs)}};
            j["given_plus"] = to_json(id.given_plus);
            j["given_nabla"] = to_json(id.given_both);
            j["given_minus"] = to_json(id.given_minus);
            j["theta"] = to_string(id.theta);
            j["lhs"] = to_json(id.lhs);
            j["rhs"] = to_json(id.rhs);
            equal = id.holds();
        } else {
            const auto sides = weak_bayes(A, local.v, local.index[0], local.index[1]);
            lines = {{"lhs", to_string(sides.lhs)}, {"rhs", to_string(sides.rhs)}};
            j["lhs"] = to_json(sides.lhs);
            j["rhs"] = to_json(sides.rhs);
            equal = sides.holds();
        }
    }
    j["identity"] = a.posneg ? "posneg" : "weak";
    j["equal"] = equal;
    if (a.json) {
        print_json(out, j);
    } else {
        for (const auto& [label, value] : lines) out << label << " = " << value << '\n';
        out << (equal ? "equal" : "not equal") << '\n';
    }
    return equal ? exit_code::ok : exit_code::fails;
}

struct TranslateArgs {
    std::string direction, logic, input;
    std::size_t depth = 2;
};

/// π given on listed sentences and extended to their equivalence classes.
inline PartialPi audit_pi(const AuditTable& t) {
    std::vector<std::pair<PartialSet, TValue>> known;
    for (const auto& [f, v] : t.values) known.emplace_back(meaning_kleene(f, t.n), v);
    for (std::size_t i = 0; i < known.size(); ++i)
        for (std::size_t k = 0; k < known.size(); ++k) {
            const auto& [fi, vi] = t.values[i];
            const auto& [fk, vk] = t.values[k];
            if (known[i].first == known[k].first && !(vi == vk))
                throw PreconditionError(Precondition::not_compatible,
                                        print(fi) + " and " + print(fk) + " are equivalent but have different values");
            if (ps_leq(known[i].first, known[k].first) && !precedes(vi, vk))
                throw PreconditionError(Precondition::not_isotone_function,
                                        print(fi) + " entails " + print(fk) + " but " + to_string(vi) +
                                            " does not precede " + to_string(vk));
        }
    const std::size_t n = t.n;
    return [known, n](const Formula& f) {
        const PartialSet m = meaning_kleene(f, n);
        for (const auto& [k, v] : known)
            if (k == m) return v;
        throw std::invalid_argument("the audit table has no value for the class of " + print(f));
    };
}

inline int cmd_translate(const TranslateArgs& a, std::ostream& out, std::ostream& err) {
    if (a.direction != "s2e" && a.direction != "e2s") throw std::invalid_argument("--direction must be s2e or e2s");
    if (a.logic != "classical" && a.logic != "partial") throw std::invalid_argument("--logic must be classical or partial");
    const Json input = read_json_file(a.input);
    TranslationOptions opt;
    opt.corpus_depth = a.depth;
    TranslationCertificate cert;
    if (a.direction == "s2e" && a.logic == "classical") {
        const auto w = weights_from_json(input);
        if (w.kind() != LogicKind::classical) throw PreconditionError(Precondition::kind_mismatch, "classical s2e needs classical weights");
        cert = classical_sentences_to_space(classical_pi_of(w), w.n(), opt).certificate;
    } else if (a.direction == "s2e") {
        if (input.contains("values")) {
            const auto table = audit_table_from_json(input);
            std::vector<Formula> listed;
            for (const auto& [f, v] : table.values) listed.push_back(f);
            cert = partial_sentences_to_space(audit_pi(table), table.n, opt, listed).certificate;
        } else {
            const auto w = weights_from_json(input);
            if (w.kind() != LogicKind::kleene) throw PreconditionError(Precondition::kind_mismatch, "partial s2e needs Kleene weights");
            cert = partial_sentences_to_space(partial_pi_of(w), w.n(), opt).certificate;
        }
    } else if (a.logic == "classical") {
        auto pw = point_weights_from_json(input);
        cert = classical_space_to_sentences(std::move(pw.space), std::move(pw.weights), opt).certificate;
    } else {
        const auto fm = field_measure_from_json(input);
        cert = partial_space_to_sentences(fm.field, fm.mu, opt).certificate;
    }
    print_json(out, to_json(cert));
    if (cert.ok()) return exit_code::ok;
    if (auto row = cert.first_failing_row())
        err << "first failing equality: " << row->event << " via " << row->formula << ": " << row->lhs
            << " != " << row->rhs << '\n';
    else
        err << "certificate failure: " << cert.failures.front() << '\n';
    return exit_code::fails;
}

struct CheckArgs {
    std::string suite;
    std::vector<std::string> inputs;
};

inline const char* status_text(LawStatus s) {
    switch (s) {
        case LawStatus::pass: return "pass";
        case LawStatus::fail: return "FAIL";
        case LawStatus::skipped: return "skipped";
        case LawStatus::info: return "";
    }
    return "";
}

inline void print_report(std::ostream& out, const std::string& suite, const std::string& path, const LawReport& rep) {
    out << "[" << suite << "] " << path << '\n';
    for (const auto& r : rep.rows) {
        std::ostringstream line;
        line << "  " << std::left << std::setw(36) << r.law;
        if (r.status == LawStatus::info) {
            line << r.note;
        } else {
            line << status_text(r.status);
            if (!r.note.empty()) line << "  " << r.note;
        }
        out << line.str() << '\n';
    }
}

/// Suite for a file under --suite all.
inline std::string detect_suite(const Json& j) {
    if (j.contains("space")) return "measure";
    if (j.contains("lattice") || j.contains("algebra")) return "valuation";
    if (j.contains("neg")) return "dmf";
    if (j.contains("meet")) return "lattice";
    throw std::invalid_argument("cannot tell which suite applies to this file");
}

/// {"lattice": {...}, "values": {el: q}} or {"algebra": {...}, "values": {el: [a, b]}}.
inline LawReport valuation_suite(const Json& j) {
    if (j.contains("algebra")) {
        const auto tables = dmf_tables_from_json(j.at("algebra"));
        const auto A = DmfAlgebra::certify(tables);
        return partial_valuation_report(A, partial_valuation_from_json(A, j));
    }
    const auto L = FiniteLattice::certify(lattice_tables_from_json(detail::field(j, "lattice")));
    return valuation_report(L, valuation_from_json(L, j));
}

inline int cmd_check(const CheckArgs& a, std::ostream& out) {
    static const std::vector<std::string> suites{"lattice", "dmf", "valuation", "measure", "all"};
    if (std::find(suites.begin(), suites.end(), a.suite) == suites.end())
        throw std::invalid_argument("unknown suite '" + a.suite + "'");
    std::size_t failed = 0;
    for (const auto& path : a.inputs) {
        const Json j = read_json_file(path);
        const std::string suite = a.suite == "all" ? detect_suite(j) : a.suite;
        LawReport rep;
        if (suite == "lattice") {
            rep = lattice_report(lattice_tables_from_json(j));
        } else if (suite == "dmf") {
            rep = dmf_report(dmf_tables_from_json(j));
        } else if (suite == "valuation") {
            rep = valuation_suite(j);
        } else {
            const auto fm = field_measure_from_json(j);
            rep = partial_measure_report(fm.field, fm.mu);
        }
        print_report(out, suite, path, rep);
        failed += rep.failures();
    }
    if (failed == 0) {
        out << "all laws pass\n";
        return exit_code::ok;
    }
    out << failed << (failed == 1 ? " law fails\n" : " laws fail\n");
    return exit_code::fails;
}

}  // namespace cli_detail

/// Runs one command. `args` excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    using namespace cli_detail;
    CLI::App app{"Partial probability over Kleene logic and DMF-algebras", "pprob"};
    app.require_subcommand(1);

    EvalArgs eval;
    auto* e = app.add_subcommand("eval", "Truth value of a formula in a world");
    e->add_option("--formula", eval.formula, "Formula text")->required();
    e->add_option("--world", eval.world, "One symbol per variable: 0, n or 1")->required();
    e->add_option("--logic", eval.logic, "kleene or classical")->capture_default_str();
    e->add_flag("--json", eval.json, "JSON output");

    ConsequenceArgs cons;
    std::size_t cons_n = 0;
    auto* c = app.add_subcommand("consequence", "Does a comma-separated premise list entail the conclusion?");
    c->add_option("--premises", cons.premises, "Comma-separated formulas; empty for none");
    c->add_option("--conclusion", cons.conclusion, "Formula text")->required();
    auto* n_opt = c->add_option("--n", cons_n, "Arity; inferred from the formulas when omitted");
    c->add_option("--logic", cons.logic, "kleene or classical")->capture_default_str();
    c->add_flag("--json", cons.json, "JSON output");

    ProbArgs prob;
    std::string prob_given;
    auto* p = app.add_subcommand("prob", "Probability of a formula under world weights");
    p->add_option("--weights", prob.weights, "Weights file")->required();
    p->add_option("--formula", prob.formula, "Formula text")->required();
    auto* given_opt = p->add_option("--given", prob_given, "Condition formula");
    p->add_flag("--json", prob.json, "JSON output");

    BayesArgs bayes;
    auto* b = app.add_subcommand("bayes", "Compare both sides of a Bayes identity");
    b->add_option("--weights", bayes.weights, "Weights file")->required();
    b->add_option("--hypothesis", bayes.hypothesis, "Formula text")->required();
    b->add_option("--evidence", bayes.evidence, "Formula text")->required();
    b->add_flag("--posneg", bayes.posneg, "Use the positive/negative part identity");
    b->add_flag("--json", bayes.json, "JSON output");

    TranslateArgs tr;
    auto* t = app.add_subcommand("translate", "Translate between sentence and event probabilities");
    t->add_option("--direction", tr.direction, "s2e or e2s")->required();
    t->add_option("--logic", tr.logic, "classical or partial")->required();
    t->add_option("--input", tr.input, "Input file")->required();
    t->add_option("--depth", tr.depth, "Formula depth of the cross-check corpus")->capture_default_str();

    CheckArgs check;
    auto* k = app.add_subcommand("check", "Certify tables against their laws");
    k->add_option("--suite", check.suite, "lattice, dmf, valuation, measure or all")->required();
    k->add_option("--input", check.inputs, "Input files")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_code::ok;
    } catch (const CLI::ParseError& ex) {
        err << "error: " << ex.what() << '\n';
        return exit_code::usage;
    }

    try {
        if (e->parsed()) return cmd_eval(eval, out);
        if (c->parsed()) {
            if (*n_opt) cons.n = cons_n;
            return cmd_consequence(cons, out);
        }
        if (p->parsed()) {
            if (*given_opt) prob.given = prob_given;
            return cmd_prob(prob, out);
        }
        if (b->parsed()) return cmd_bayes(bayes, out);
        if (t->parsed()) return cmd_translate(tr, out, err);
        if (k->parsed()) return cmd_check(check, out);
    } catch (const PreconditionError& ex) {
        err << "error: " << ex.what() << '\n';
        return ex.kind() == Precondition::invalid_weights ? exit_code::usage : exit_code::precondition;
    } catch (const ValidationError& ex) {
        err << "error: " << ex.what() << '\n';
        return exit_code::fails;
    } catch (const ParseError& ex) {
        err << "error: " << ex.what() << '\n';
        return exit_code::usage;
    } catch (const std::invalid_argument& ex) {
        err << "error: " << ex.what() << '\n';
        return exit_code::usage;
    } catch (const Json::exception& ex) {
        err << "error: " << ex.what() << '\n';
        return exit_code::usage;
    }
    return exit_code::usage;
}

}  // namespace pprob
