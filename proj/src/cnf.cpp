#include "bnsynth/cnf.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace bnsynth {

void CnfProblem::add_clause(std::vector<int> lits) {
    for (int lit : lits)
        if (lit == 0 || std::abs(lit) > num_vars_)
            throw ContractViolation("clause literal references undeclared variable");
    if (lits.empty()) has_empty_ = true;
    clauses_.push_back(std::move(lits));
}

bool CnfProblem::satisfied_by(const Model& m) const {
    for (const auto& clause : clauses_) {
        bool sat = false;
        for (int lit : clause) {
            bool v = m.value(std::abs(lit));
            if ((lit > 0) == v) {
                sat = true;
                break;
            }
        }
        if (!sat) return false;
    }
    return true;
}

void CnfProblem::write_dimacs(std::ostream& out) const {
    for (const auto& [var, name] : var_names_) out << "c var " << var << " " << name << "\n";
    out << "p cnf " << num_vars_ << " " << clauses_.size() << "\n";
    for (const auto& clause : clauses_) {
        for (int lit : clause) out << lit << " ";
        out << "0\n";
    }
}

CnfProblem CnfProblem::read_dimacs(std::istream& in) {
    CnfProblem p;
    std::string line;
    bool have_header = false;
    std::vector<int> clause;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == 'c') {
            std::istringstream cs(line);
            std::string c, tag;
            int var;
            std::string name;
            if (cs >> c >> tag >> var >> name && tag == "var") p.var_names_[var] = name;
            continue;
        }
        if (line[0] == 'p') {
            std::istringstream hs(line);
            std::string pp, fmt;
            int nv = 0;
            std::size_t nc = 0;
            if (!(hs >> pp >> fmt >> nv >> nc) || fmt != "cnf")
                throw Error("malformed DIMACS header: " + line);
            p.num_vars_ = nv;
            have_header = true;
            continue;
        }
        if (!have_header) throw Error("DIMACS clause before header");
        std::istringstream ls(line);
        int lit;
        while (ls >> lit) {
            if (lit == 0) {
                p.add_clause(clause);
                clause.clear();
            } else {
                clause.push_back(lit);
            }
        }
    }
    if (!clause.empty()) p.add_clause(clause);
    return p;
}

namespace {

class TseitinEncoder {
public:
    TseitinEncoder(CnfProblem& cnf, const std::map<int, int>& var_of_id, int next_var)
        : cnf_(cnf), var_of_id_(var_of_id), next_var_(next_var) {}

    int finished_num_vars() const { return next_var_ - 1; }

    // Asserts the expression at the top level, flattening conjunctions and
    // emitting literal-only disjunctions as plain clauses.
    void assert_true(const Expr& e) {
        switch (e.kind()) {
        case Expr::Kind::True: return;
        case Expr::Kind::False:
            cnf_.add_clause({});
            return;
        case Expr::Kind::And:
            for (const Expr& c : e.children()) assert_true(c);
            return;
        case Expr::Kind::Or: {
            std::vector<int> lits;
            if (all_literals(e.children(), lits)) {
                cnf_.add_clause(std::move(lits));
                return;
            }
            cnf_.add_clause({encode(e)});
            return;
        }
        default: cnf_.add_clause({encode(e)});
        }
    }

private:
    bool literal_of(const Expr& e, int& lit) const {
        if (e.kind() == Expr::Kind::Var) {
            lit = var_of_id_.at(e.var_id());
            return true;
        }
        if (e.kind() == Expr::Kind::Not && e.children()[0].kind() == Expr::Kind::Var) {
            lit = -var_of_id_.at(e.children()[0].var_id());
            return true;
        }
        return false;
    }

    bool all_literals(const std::vector<Expr>& parts, std::vector<int>& lits) const {
        lits.clear();
        for (const Expr& p : parts) {
            int lit;
            if (!literal_of(p, lit)) return false;
            lits.push_back(lit);
        }
        return true;
    }

    // Returns a literal equivalent to the subexpression.
    int encode(const Expr& e) {
        switch (e.kind()) {
        case Expr::Kind::Var: return var_of_id_.at(e.var_id());
        case Expr::Kind::Not: return -encode(e.children()[0]);
        case Expr::Kind::True:
        case Expr::Kind::False: {
            // Factories fold constants away below the root; only a root
            // constant reaches assert_true, never encode.
            throw ContractViolation("constant below expression root");
        }
        case Expr::Kind::And:
        case Expr::Kind::Or: break;
        }
        auto cached = cache_.find(e.node_id());
        if (cached != cache_.end()) return cached->second;

        std::vector<int> kid_lits;
        kid_lits.reserve(e.children().size());
        for (const Expr& c : e.children()) kid_lits.push_back(encode(c));

        int aux = next_var_++;
        cnf_.set_num_vars(next_var_ - 1);
        if (e.kind() == Expr::Kind::And) {
            std::vector<int> big{aux};
            for (int k : kid_lits) {
                cnf_.add_clause({-aux, k});
                big.push_back(-k);
            }
            cnf_.add_clause(std::move(big));
        } else {
            std::vector<int> big{-aux};
            for (int k : kid_lits) {
                cnf_.add_clause({aux, -k});
                big.push_back(k);
            }
            cnf_.add_clause(std::move(big));
        }
        cache_.emplace(e.node_id(), aux);
        return aux;
    }

    CnfProblem& cnf_;
    const std::map<int, int>& var_of_id_;
    int next_var_;
    std::unordered_map<const void*, int> cache_;
};

} // namespace

TseitinResult from_propositional(const Expr& expr, const std::vector<int>& universe) {
    TseitinResult result;
    std::set<int> occurring = expr.vars();
    std::vector<int> ids;
    if (universe.empty()) {
        ids.assign(occurring.begin(), occurring.end());
    } else {
        ids = universe;
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        for (int id : occurring)
            if (!std::binary_search(ids.begin(), ids.end(), id))
                throw ContractViolation("expression variable outside declared universe");
    }
    int next = 1;
    for (int id : ids) result.var_of_id.emplace(id, next++);
    result.num_original = next - 1;
    result.problem.set_num_vars(result.num_original);

    TseitinEncoder encoder(result.problem, result.var_of_id, next);
    encoder.assert_true(expr);
    result.problem.set_num_vars(std::max(result.problem.num_vars(), encoder.finished_num_vars()));
    return result;
}

} // namespace bnsynth
