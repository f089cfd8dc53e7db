#pragma once

#include <string>
#include <vector>

#include "bnsynth/expr.hpp"
#include "bnsynth/formula.hpp"

namespace bnsynth {

// Observation rows over named variables; cells may be unknown.
struct BooleanProfileSet {
    std::vector<std::string> variables;
    std::vector<std::vector<Trit>> rows;
};

enum class RegulationSign : int { Activator = 1, Inhibitor = -1, Unknown = 0 };

struct Regulation {
    std::string source;
    RegulationSign sign = RegulationSign::Unknown;
};

// Declared regulators of one target, in declaration order. The order fixes
// the label positions of the output variables of the target's truth table
// (first regulator = leftmost label bit).
struct RegulatorSpec {
    std::string target;
    std::vector<Regulation> regulators;

    int arity() const { return static_cast<int>(regulators.size()); }
};

// A profile row projected onto a target: the regulator input pattern
// (possibly with unknown cells) and the observed output.
struct ProjectedRow {
    std::vector<Trit> pattern;
    bool output = false;

    std::string pattern_string() const;
};

// Truth table of a target over its regulators with not-yet-decided outputs.
struct PartialTruthTable {
    std::vector<std::string> regulators;
    std::vector<Trit> outputs; // length 2^r, indexed by the label value

    static PartialTruthTable from_rows(const RegulatorSpec& spec,
                                       const std::vector<ProjectedRow>& rows);
};

struct FormulaPool {
    std::string target;
    std::vector<Formula> formulas; // pairwise semantically distinct
    bool truncated = false;
    std::string diagnostic; // set when the pool is empty because of a conflict
};

struct InferenceOptions {
    std::size_t max_formulas = 500; // enumeration cap
    bool influence_constraint = true; // require unknown-sign regulators to matter
};

// Projects every profile row onto (regulator pattern, target output).
// Rows with an unknown target value are dropped, duplicates collapse, and
// two fully defined rows disagreeing on the output raise ProfileConflict.
std::vector<ProjectedRow> profiles_to_rows(const BooleanProfileSet& profiles,
                                           const RegulatorSpec& spec);

// Constraint families over the 2^r output variables of the target's truth
// table; expression variable id k stands for the output at label value k.
Expr profile_constraint(const std::vector<ProjectedRow>& rows, int arity);
Expr consensus_constraint(const RegulatorSpec& spec);
Expr monotonicity_constraint(const RegulatorSpec& spec, int regulator_position);
Expr influence_constraint(const RegulatorSpec& spec, int regulator_position);

// Conjunction of all applicable constraints.
Expr assemble_constraints(const std::vector<ProjectedRow>& rows, const RegulatorSpec& spec,
                          bool influence);

// Enumerates all truth-table completions consistent with the profiles and
// the regulation, minimizing each into a formula over `regulator_ids`
// (variable index of each declared regulator, in declaration order).
FormulaPool infer_formulas(const BooleanProfileSet& profiles, const RegulatorSpec& spec,
                           const std::vector<int>& regulator_ids, const InferenceOptions& options);

} // namespace bnsynth
