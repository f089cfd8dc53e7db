#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "bnsynth/inference.hpp"
#include "bnsynth/network.hpp"
#include "bnsynth/objective.hpp"

namespace bnsynth {

// Maps a variable name token to its index; throws for unknown names.
using NameResolver = std::function<int(const std::string&, int line, int column)>;

// Expression grammar: disjunction of conjunctions of possibly negated
// atoms; atoms are identifiers, constants 0/1, or parenthesized groups.
// Operators: '&', '|', '!'.
Expr parse_expression(const std::string& text, const NameResolver& resolve, int line = 1);

// One `name = expression` line per variable; '#' starts a comment.
// Expressions are normalized to minimal DNF at load; the support keeps
// every syntactically mentioned variable.
BooleanNetwork parse_network(const std::string& text);
std::string serialize_formula(const Formula& f, const std::vector<std::string>& names);
std::string serialize_network(const BooleanNetwork& network);

// CSV with a header of variable names and cells in {0, 1, -}.
BooleanProfileSet parse_profiles(const std::string& text);
std::string serialize_profiles(const BooleanProfileSet& profiles);

// Lines `source -> target sign` with sign in {+, -, ?}, grouped by target
// in order of first appearance; regulator order follows the line order.
std::vector<RegulatorSpec> parse_graph(const std::string& text);
std::string serialize_graph(const std::vector<RegulatorSpec>& specs);

// CSV with a header of biomarker names and rows of bits.
SignatureSet parse_signatures(const std::string& text, const BooleanNetwork& network);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace bnsynth
