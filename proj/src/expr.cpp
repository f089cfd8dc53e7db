#include "bnsynth/expr.hpp"

namespace bnsynth {

Expr Expr::constant(bool value) {
    auto node = std::make_shared<Node>();
    node->kind = value ? Kind::True : Kind::False;
    return Expr(std::move(node));
}

Expr Expr::var(int id) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Var;
    node->var = id;
    return Expr(std::move(node));
}

Expr Expr::negate(Expr e) {
    switch (e.kind()) {
    case Kind::True: return constant(false);
    case Kind::False: return constant(true);
    case Kind::Not: return e.node_->children[0];
    default: break;
    }
    auto node = std::make_shared<Node>();
    node->kind = Kind::Not;
    node->children.push_back(std::move(e));
    return Expr(std::move(node));
}

Expr Expr::conj(std::vector<Expr> parts) {
    std::vector<Expr> kids;
    kids.reserve(parts.size());
    for (Expr& p : parts) {
        switch (p.kind()) {
        case Kind::True: break;
        case Kind::False: return constant(false);
        case Kind::And:
            for (const Expr& c : p.children()) kids.push_back(c);
            break;
        default: kids.push_back(std::move(p));
        }
    }
    if (kids.empty()) return constant(true);
    if (kids.size() == 1) return kids[0];
    auto node = std::make_shared<Node>();
    node->kind = Kind::And;
    node->children = std::move(kids);
    return Expr(std::move(node));
}

Expr Expr::disj(std::vector<Expr> parts) {
    std::vector<Expr> kids;
    kids.reserve(parts.size());
    for (Expr& p : parts) {
        switch (p.kind()) {
        case Kind::False: break;
        case Kind::True: return constant(true);
        case Kind::Or:
            for (const Expr& c : p.children()) kids.push_back(c);
            break;
        default: kids.push_back(std::move(p));
        }
    }
    if (kids.empty()) return constant(false);
    if (kids.size() == 1) return kids[0];
    auto node = std::make_shared<Node>();
    node->kind = Kind::Or;
    node->children = std::move(kids);
    return Expr(std::move(node));
}

void Expr::collect_vars(std::set<int>& out) const {
    switch (node_->kind) {
    case Kind::Var: out.insert(node_->var); break;
    case Kind::Not:
    case Kind::And:
    case Kind::Or:
        for (const Expr& c : node_->children) c.collect_vars(out);
        break;
    default: break;
    }
}

std::set<int> Expr::vars() const {
    std::set<int> out;
    collect_vars(out);
    return out;
}

} // namespace bnsynth
