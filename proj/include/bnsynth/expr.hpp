#pragma once

#include <memory>
#include <set>
#include <vector>

#include "bnsynth/errors.hpp"

namespace bnsynth {

// Immutable propositional expression over integer-identified variables.
// Factories fold constants and flatten nested conjunctions/disjunctions,
// so True/False can only ever appear as the root.
class Expr {
public:
    enum class Kind { False, True, Var, Not, And, Or };

    Expr() : Expr(constant(false)) {}

    static Expr constant(bool value);
    static Expr var(int id);
    static Expr negate(Expr e);
    static Expr conj(std::vector<Expr> parts); // empty -> True
    static Expr disj(std::vector<Expr> parts); // empty -> False

    Kind kind() const { return node_->kind; }
    int var_id() const { return node_->var; }
    const std::vector<Expr>& children() const { return node_->children; }

    template <typename ValueFn> // bool(int var_id)
    bool evaluate(const ValueFn& value) const {
        switch (node_->kind) {
        case Kind::False: return false;
        case Kind::True: return true;
        case Kind::Var: return value(node_->var);
        case Kind::Not: return !node_->children[0].evaluate(value);
        case Kind::And:
            for (const Expr& c : node_->children)
                if (!c.evaluate(value)) return false;
            return true;
        case Kind::Or:
            for (const Expr& c : node_->children)
                if (c.evaluate(value)) return true;
            return false;
        }
        return false;
    }

    void collect_vars(std::set<int>& out) const;
    std::set<int> vars() const;

    // Identity of the underlying node, used for structural sharing.
    const void* node_id() const { return node_.get(); }

private:
    struct Node {
        Kind kind;
        int var = -1;
        std::vector<Expr> children;
    };

    explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

inline Expr operator!(Expr e) { return Expr::negate(std::move(e)); }
inline Expr operator&(Expr a, Expr b) { return Expr::conj({std::move(a), std::move(b)}); }
inline Expr operator|(Expr a, Expr b) { return Expr::disj({std::move(a), std::move(b)}); }

} // namespace bnsynth
