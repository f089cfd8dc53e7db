#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "bnsynth/expr.hpp"

namespace bnsynth {

// Total assignment of the decision variables of a CnfProblem.
// values[v-1] is the value of DIMACS variable v.
struct Model {
    std::vector<bool> values;

    bool value(int var) const { return values[static_cast<std::size_t>(var - 1)]; }
};

// Clause set over variables 1..num_vars; literals are signed DIMACS ints.
class CnfProblem {
public:
    CnfProblem() = default;
    explicit CnfProblem(int num_vars) : num_vars_(num_vars) {}

    int num_vars() const { return num_vars_; }
    void set_num_vars(int n) { num_vars_ = n; }

    const std::vector<std::vector<int>>& clauses() const { return clauses_; }
    void add_clause(std::vector<int> lits);

    bool has_empty_clause() const { return has_empty_; }

    std::map<int, std::string>& var_names() { return var_names_; }
    const std::map<int, std::string>& var_names() const { return var_names_; }

    bool satisfied_by(const Model& m) const;

    void write_dimacs(std::ostream& out) const;
    static CnfProblem read_dimacs(std::istream& in);

private:
    int num_vars_ = 0;
    std::vector<std::vector<int>> clauses_;
    std::map<int, std::string> var_names_;
    bool has_empty_ = false;
};

// Equisatisfiable CNF of an arbitrary expression, built with auxiliary
// definition variables so that models projected on the original variables
// are exactly the models of the expression.
struct TseitinResult {
    CnfProblem problem;
    std::map<int, int> var_of_id; // expression var id -> CNF variable
    int num_original = 0;         // CNF variables 1..num_original are original
};

// `universe` optionally fixes the original-variable set (it must contain
// every id occurring in the expression). Ids not occurring in the
// expression become unconstrained CNF variables.
TseitinResult from_propositional(const Expr& expr, const std::vector<int>& universe = {});

} // namespace bnsynth
