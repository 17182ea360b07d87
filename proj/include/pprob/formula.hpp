// Sentential formulas over p0, p1, ... with constants 0, 1, n and the
// connectives ~, &, |. Concrete syntax:
//
//   formula := disj
//   disj    := conj ('|' conj)*
//   conj    := neg ('&' neg)*
//   neg     := '~' neg | atom
//   atom    := '0' | '1' | 'n' | 'p' DIGITS | '(' formula ')'
//
// Binary connectives associate to the left; '~' binds tighter than '&',
// which binds tighter than '|'.
#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace pprob {

enum class LogicKind { classical, kleene };

inline const char* to_string(LogicKind k) { return k == LogicKind::classical ? "classical" : "kleene"; }

/// Immutable formula tree. Copies share structure.
class Formula {
public:
    enum class Kind { var, zero, one, unknown, neg, conj, disj };

private:
    struct Node {
        Kind kind;
        std::size_t index;
        std::shared_ptr<const Node> lhs;
        std::shared_ptr<const Node> rhs;
    };

public:
    static Formula var(std::size_t index) { return Formula(std::make_shared<const Node>(Node{Kind::var, index, {}, {}})); }
    static Formula zero() { return leaf(Kind::zero); }
    static Formula one() { return leaf(Kind::one); }
    /// The constant n.
    static Formula unknown() { return leaf(Kind::unknown); }

    Kind kind() const noexcept { return node_->kind; }
    std::size_t index() const noexcept { return node_->index; }
    Formula operand() const { return Formula(node_->lhs); }
    Formula left() const { return Formula(node_->lhs); }
    Formula right() const { return Formula(node_->rhs); }

    bool is_constant() const noexcept {
        return kind() == Kind::zero || kind() == Kind::one || kind() == Kind::unknown;
    }
    bool is_binary() const noexcept { return kind() == Kind::conj || kind() == Kind::disj; }

    friend Formula operator~(const Formula& f) {
        return Formula(std::make_shared<const Node>(Node{Kind::neg, 0, f.node_, {}}));
    }
    friend Formula operator&(const Formula& f, const Formula& g) {
        return Formula(std::make_shared<const Node>(Node{Kind::conj, 0, f.node_, g.node_}));
    }
    friend Formula operator|(const Formula& f, const Formula& g) {
        return Formula(std::make_shared<const Node>(Node{Kind::disj, 0, f.node_, g.node_}));
    }

    friend bool operator==(const Formula& f, const Formula& g) { return same(f.node_.get(), g.node_.get()); }

    /// Number of connectives on the longest root-to-leaf path.
    std::size_t depth() const {
        switch (kind()) {
            case Kind::neg: return 1 + operand().depth();
            case Kind::conj:
            case Kind::disj: return 1 + std::max(left().depth(), right().depth());
            default: return 0;
        }
    }

    /// One more than the highest variable index (0 for closed formulas).
    std::size_t arity() const {
        switch (kind()) {
            case Kind::var: return index() + 1;
            case Kind::neg: return operand().arity();
            case Kind::conj:
            case Kind::disj: return std::max(left().arity(), right().arity());
            default: return 0;
        }
    }

    bool mentions_unknown() const {
        switch (kind()) {
            case Kind::unknown: return true;
            case Kind::neg: return operand().mentions_unknown();
            case Kind::conj:
            case Kind::disj: return left().mentions_unknown() || right().mentions_unknown();
            default: return false;
        }
    }

private:
    explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    static Formula leaf(Kind k) { return Formula(std::make_shared<const Node>(Node{k, 0, {}, {}})); }

    static bool same(const Node* a, const Node* b) {
        if (a == b) return true;
        if (a->kind != b->kind) return false;
        switch (a->kind) {
            case Kind::var: return a->index == b->index;
            case Kind::neg: return same(a->lhs.get(), b->lhs.get());
            case Kind::conj:
            case Kind::disj: return same(a->lhs.get(), b->lhs.get()) && same(a->rhs.get(), b->rhs.get());
            default: return true;
        }
    }

    std::shared_ptr<const Node> node_;
};

// ---------------------------------------------------------------------------
// Printing

namespace detail {

inline int precedence(Formula::Kind k) {
    switch (k) {
        case Formula::Kind::disj: return 1;
        case Formula::Kind::conj: return 2;
        case Formula::Kind::neg: return 3;
        default: return 4;
    }
}

inline void print_to(const Formula& f, std::string& out) {
    using K = Formula::Kind;
    auto child = [&](const Formula& c, bool needs_parens) {
        if (needs_parens) out += '(';
        print_to(c, out);
        if (needs_parens) out += ')';
    };
    switch (f.kind()) {
        case K::var: out += 'p' + std::to_string(f.index()); return;
        case K::zero: out += '0'; return;
        case K::one: out += '1'; return;
        case K::unknown: out += 'n'; return;
        case K::neg:
            out += '~';
            child(f.operand(), precedence(f.operand().kind()) < precedence(K::neg));
            return;
        case K::conj:
        case K::disj: {
            const int p = precedence(f.kind());
            child(f.left(), precedence(f.left().kind()) < p);
            out += f.kind() == K::conj ? " & " : " | ";
            // left associative: an equal-precedence right operand keeps its parentheses
            child(f.right(), precedence(f.right().kind()) <= p);
            return;
        }
    }
}

}  // namespace detail

/// Minimal-parenthesis rendering; parse(print(f)) == f.
inline std::string print(const Formula& f) {
    std::string out;
    detail::print_to(f, out);
    return out;
}

// ---------------------------------------------------------------------------
// Parsing

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

namespace detail {

class Parser {
public:
    Parser(std::string_view text, std::optional<std::size_t> arity, LogicKind kind)
        : text_(text), arity_(arity), kind_(kind) {}

    Formula parse() {
        Formula f = disjunction();
        skip_space();
        if (pos_ != text_.size()) throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
        return f;
    }

private:
    void skip_space() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n')) ++pos_;
    }
    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Formula disjunction() {
        Formula f = conjunction();
        while (accept('|')) f = f | conjunction();
        return f;
    }
    Formula conjunction() {
        Formula f = negation();
        while (accept('&')) f = f & negation();
        return f;
    }
    Formula negation() {
        if (accept('~')) return ~negation();
        return atom();
    }
    Formula atom() {
        skip_space();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
        const std::size_t start = pos_;
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Formula f = disjunction();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return f;
        }
        if (c == '0') {
            ++pos_;
            return Formula::zero();
        }
        if (c == '1') {
            ++pos_;
            return Formula::one();
        }
        if (c == 'n') {
            ++pos_;
            if (kind_ == LogicKind::classical)
                throw ParseError("constant n is not part of the classical language", start);
            return Formula::unknown();
        }
        if (c == 'p') {
            ++pos_;
            std::size_t digits = pos_;
            while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
            if (digits == pos_) throw ParseError("expected variable index after 'p'", pos_);
            if (pos_ - digits > 9) throw ParseError("variable index too large", digits);
            std::size_t index = std::stoul(std::string(text_.substr(digits, pos_ - digits)));
            if (arity_ && index >= *arity_)
                throw ParseError("variable p" + std::to_string(index) + " outside arity " + std::to_string(*arity_),
                                 start);
            return Formula::var(index);
        }
        throw ParseError("unexpected '" + std::string(1, c) + "'", pos_);
    }

    std::string_view text_;
    std::optional<std::size_t> arity_;
    LogicKind kind_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses `text`. With `arity` set, variable indices must be below it.
inline Formula parse(std::string_view text, std::optional<std::size_t> arity = std::nullopt,
                     LogicKind kind = LogicKind::kleene) {
    return detail::Parser(text, arity, kind).parse();
}

}  // namespace pprob
