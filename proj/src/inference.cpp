#include "bnsynth/inference.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "bnsynth/minimize.hpp"
#include "bnsynth/solver.hpp"

namespace bnsynth {

namespace {

std::size_t find_column(const BooleanProfileSet& profiles, const std::string& name) {
    auto it = std::find(profiles.variables.begin(), profiles.variables.end(), name);
    if (it == profiles.variables.end())
        throw ContractViolation("profile set has no column for variable " + name);
    return static_cast<std::size_t>(it - profiles.variables.begin());
}

// Positions of unknown cells in a pattern.
std::vector<int> unknown_positions(const std::vector<Trit>& pattern) {
    std::vector<int> positions;
    for (std::size_t i = 0; i < pattern.size(); ++i)
        if (pattern[i] == Trit::Unknown) positions.push_back(static_cast<int>(i));
    return positions;
}

// Label value of a fully defined pattern (first cell = most significant bit).
std::size_t pattern_index(const std::vector<Trit>& pattern) {
    std::size_t index = 0;
    for (Trit t : pattern) index = (index << 1) | (t == Trit::True ? 1 : 0);
    return index;
}

// All label values obtained by completing the unknown cells of `pattern`.
std::vector<std::size_t> completions(const std::vector<Trit>& pattern) {
    std::vector<int> unknowns = unknown_positions(pattern);
    const int r = static_cast<int>(pattern.size());
    std::size_t base = 0;
    for (int i = 0; i < r; ++i)
        if (pattern[static_cast<std::size_t>(i)] == Trit::True)
            base |= std::size_t{1} << TruthTable::bit_of_position(r, i);
    std::vector<std::size_t> out;
    out.reserve(std::size_t{1} << unknowns.size());
    for (std::size_t assignment = 0; assignment < (std::size_t{1} << unknowns.size());
         ++assignment) {
        std::size_t index = base;
        for (std::size_t u = 0; u < unknowns.size(); ++u)
            if (assignment >> u & 1)
                index |= std::size_t{1} << TruthTable::bit_of_position(r, unknowns[u]);
        out.push_back(index);
    }
    return out;
}

Expr output_literal(std::size_t index, bool value) {
    Expr b = Expr::var(static_cast<int>(index));
    return value ? b : !b;
}

} // namespace

std::string ProjectedRow::pattern_string() const {
    std::string s;
    s.reserve(pattern.size());
    for (Trit t : pattern) s.push_back(trit_char(t));
    return s;
}

PartialTruthTable PartialTruthTable::from_rows(const RegulatorSpec& spec,
                                               const std::vector<ProjectedRow>& rows) {
    PartialTruthTable table;
    for (const Regulation& reg : spec.regulators) table.regulators.push_back(reg.source);
    table.outputs.assign(std::size_t{1} << spec.arity(), Trit::Unknown);
    for (const ProjectedRow& row : rows) {
        if (!unknown_positions(row.pattern).empty()) continue;
        table.outputs[pattern_index(row.pattern)] = row.output ? Trit::True : Trit::False;
    }
    return table;
}

std::vector<ProjectedRow> profiles_to_rows(const BooleanProfileSet& profiles,
                                           const RegulatorSpec& spec) {
    if (spec.regulators.empty())
        throw ContractViolation("regulator list for " + spec.target + " is empty");
    const std::size_t target_col = find_column(profiles, spec.target);
    std::vector<std::size_t> regulator_cols;
    regulator_cols.reserve(spec.regulators.size());
    for (const Regulation& reg : spec.regulators)
        regulator_cols.push_back(find_column(profiles, reg.source));

    std::vector<ProjectedRow> rows;
    std::map<std::size_t, bool> defined_outputs; // fully defined pattern -> output
    for (const auto& raw : profiles.rows) {
        if (raw[target_col] == Trit::Unknown) continue; // nothing to constrain
        ProjectedRow row;
        row.pattern.reserve(regulator_cols.size());
        for (std::size_t col : regulator_cols) row.pattern.push_back(raw[col]);
        row.output = raw[target_col] == Trit::True;

        if (unknown_positions(row.pattern).empty()) {
            std::size_t index = pattern_index(row.pattern);
            auto [it, inserted] = defined_outputs.emplace(index, row.output);
            if (!inserted && it->second != row.output)
                throw ProfileConflict("conflicting outputs for " + spec.target +
                                          " on input pattern " + row.pattern_string(),
                                      row.pattern_string());
        }
        bool duplicate = false;
        for (const ProjectedRow& seen : rows)
            if (seen.pattern == row.pattern && seen.output == row.output) {
                duplicate = true;
                break;
            }
        if (!duplicate) rows.push_back(std::move(row));
    }
    return rows;
}

Expr profile_constraint(const std::vector<ProjectedRow>& rows, int arity) {
    std::vector<Expr> conjuncts;
    conjuncts.reserve(rows.size());
    for (const ProjectedRow& row : rows) {
        if (static_cast<int>(row.pattern.size()) != arity)
            throw ContractViolation("row arity mismatch in profile constraint");
        std::vector<Expr> options;
        for (std::size_t index : completions(row.pattern))
            options.push_back(output_literal(index, row.output));
        conjuncts.push_back(Expr::disj(std::move(options)));
    }
    return Expr::conj(std::move(conjuncts));
}

Expr consensus_constraint(const RegulatorSpec& spec) {
    const int r = spec.arity();
    bool any_signed = false;
    std::size_t on_base = 0, off_base = 0;
    std::vector<int> unknowns;
    for (int pos = 0; pos < r; ++pos) {
        const std::size_t bit = std::size_t{1} << TruthTable::bit_of_position(r, pos);
        switch (spec.regulators[static_cast<std::size_t>(pos)].sign) {
        case RegulationSign::Activator:
            any_signed = true;
            on_base |= bit;
            break;
        case RegulationSign::Inhibitor:
            any_signed = true;
            off_base |= bit;
            break;
        case RegulationSign::Unknown: unknowns.push_back(pos); break;
        }
    }
    // With no signed regulator the forced-on and forced-off patterns
    // coincide, so the constraint is vacuous rather than contradictory.
    if (!any_signed) return Expr::constant(true);

    std::vector<Expr> options;
    options.reserve(std::size_t{1} << unknowns.size());
    for (std::size_t assignment = 0; assignment < (std::size_t{1} << unknowns.size());
         ++assignment) {
        std::size_t extra = 0;
        for (std::size_t u = 0; u < unknowns.size(); ++u)
            if (assignment >> u & 1)
                extra |= std::size_t{1} << TruthTable::bit_of_position(r, unknowns[u]);
        options.push_back(output_literal(on_base | extra, true) &
                          output_literal(off_base | extra, false));
    }
    return Expr::disj(std::move(options));
}

Expr monotonicity_constraint(const RegulatorSpec& spec, int regulator_position) {
    const int r = spec.arity();
    RegulationSign sign = spec.regulators[static_cast<std::size_t>(regulator_position)].sign;
    if (sign == RegulationSign::Unknown)
        throw ContractViolation("monotonicity constraint needs a signed regulator");
    const std::size_t bit = std::size_t{1} << TruthTable::bit_of_position(r, regulator_position);

    std::vector<Expr> witness;   // some sibling pair changes in the right direction
    std::vector<Expr> conformity; // no sibling pair changes in the wrong direction
    for (std::size_t k = 0; k < (std::size_t{1} << r); ++k) {
        if (k & bit) continue;
        Expr lo = Expr::var(static_cast<int>(k));
        Expr hi = Expr::var(static_cast<int>(k | bit));
        if (sign == RegulationSign::Activator) {
            witness.push_back((!lo) & hi);
            conformity.push_back((!lo) | hi);
        } else {
            witness.push_back(lo & (!hi));
            conformity.push_back(lo | (!hi));
        }
    }
    return Expr::disj(std::move(witness)) & Expr::conj(std::move(conformity));
}

Expr influence_constraint(const RegulatorSpec& spec, int regulator_position) {
    const int r = spec.arity();
    const std::size_t bit = std::size_t{1} << TruthTable::bit_of_position(r, regulator_position);
    std::vector<Expr> witnesses;
    for (std::size_t k = 0; k < (std::size_t{1} << r); ++k) {
        if (k & bit) continue;
        Expr lo = Expr::var(static_cast<int>(k));
        Expr hi = Expr::var(static_cast<int>(k | bit));
        witnesses.push_back((lo & (!hi)) | ((!lo) & hi));
    }
    return Expr::disj(std::move(witnesses));
}

Expr assemble_constraints(const std::vector<ProjectedRow>& rows, const RegulatorSpec& spec,
                          bool influence) {
    std::vector<Expr> parts;
    parts.push_back(profile_constraint(rows, spec.arity()));
    parts.push_back(consensus_constraint(spec));
    for (int pos = 0; pos < spec.arity(); ++pos) {
        switch (spec.regulators[static_cast<std::size_t>(pos)].sign) {
        case RegulationSign::Unknown:
            if (influence) parts.push_back(influence_constraint(spec, pos));
            break;
        default: parts.push_back(monotonicity_constraint(spec, pos));
        }
    }
    return Expr::conj(std::move(parts));
}

FormulaPool infer_formulas(const BooleanProfileSet& profiles, const RegulatorSpec& spec,
                           const std::vector<int>& regulator_ids,
                           const InferenceOptions& options) {
    const int r = spec.arity();
    if (static_cast<int>(regulator_ids.size()) != r)
        throw ContractViolation("regulator id list does not match spec arity");
    if (r > 16)
        throw ContractViolation("too many regulators for " + spec.target + ": " +
                                std::to_string(r));

    FormulaPool pool;
    pool.target = spec.target;

    std::vector<ProjectedRow> rows = profiles_to_rows(profiles, spec);
    Expr constraints = assemble_constraints(rows, spec, options.influence_constraint);

    std::vector<int> universe;
    universe.reserve(std::size_t{1} << r);
    for (std::size_t k = 0; k < (std::size_t{1} << r); ++k) universe.push_back(static_cast<int>(k));

    TseitinResult enc = from_propositional(constraints, universe);
    for (std::size_t k = 0; k < universe.size(); ++k) {
        std::string label;
        for (int pos = 0; pos < r; ++pos)
            label.push_back((k >> TruthTable::bit_of_position(r, pos)) & 1 ? '1' : '0');
        enc.problem.var_names()[enc.var_of_id.at(static_cast<int>(k))] = "b_" + label;
    }

    std::vector<int> projection;
    projection.reserve(universe.size());
    for (int id : universe) projection.push_back(enc.var_of_id.at(id));

    DpllSolver solver(enc.problem);
    EnumerationResult models = solver.enumerate(projection, options.max_formulas);
    pool.truncated = models.truncated;

    if (models.models.empty()) {
        // Distinguish a conflict inside the data from one with the regulation.
        TseitinResult bp = from_propositional(profile_constraint(rows, r), universe);
        DpllSolver bp_solver(bp.problem);
        pool.diagnostic = bp_solver.solve().has_value()
                              ? "profiles conflict with the declared regulation of " + spec.target
                              : "profile rows for " + spec.target + " are mutually inconsistent";
        return pool;
    }

    std::set<std::vector<std::uint64_t>> seen;
    for (const Model& m : models.models) {
        TruthTable table(r);
        for (std::size_t k = 0; k < universe.size(); ++k)
            table.set(k, m.value(enc.var_of_id.at(static_cast<int>(k))));
        Formula f = minimize_dnf(table, regulator_ids);
        // Models are distinct on the outputs, so semantic duplicates cannot
        // occur; the key check keeps the pool safe against regressions.
        std::vector<std::uint64_t> key{f.table().hash(1), f.table().hash(2)};
        if (seen.insert(std::move(key)).second) pool.formulas.push_back(std::move(f));
    }
    return pool;
}

} // namespace bnsynth
