#include "bnsynth/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "bnsynth/minimize.hpp"

namespace bnsynth {

namespace {

struct ExprParser {
    const std::string& text;
    const NameResolver& resolve;
    int line;
    std::size_t pos = 0;

    int column() const { return static_cast<int>(pos) + 1; }

    void skip_space() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }

    bool eof() {
        skip_space();
        return pos >= text.size();
    }

    char peek() {
        skip_space();
        return pos < text.size() ? text[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& what) {
        throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(column()) +
                             ": " + what,
                         line, column());
    }

    Expr parse() {
        Expr e = parse_or();
        if (!eof()) fail("unexpected trailing input");
        return e;
    }

    Expr parse_or() {
        std::vector<Expr> parts{parse_and()};
        while (peek() == '|') {
            ++pos;
            parts.push_back(parse_and());
        }
        return Expr::disj(std::move(parts));
    }

    Expr parse_and() {
        std::vector<Expr> parts{parse_unary()};
        while (peek() == '&') {
            ++pos;
            parts.push_back(parse_unary());
        }
        return Expr::conj(std::move(parts));
    }

    Expr parse_unary() {
        if (peek() == '!') {
            ++pos;
            return !parse_unary();
        }
        return parse_atom();
    }

    Expr parse_atom() {
        char c = peek();
        if (c == '(') {
            ++pos;
            Expr e = parse_or();
            if (peek() != ')') fail("expected ')'");
            ++pos;
            return e;
        }
        if (c == '0' || c == '1') {
            // A digit starting an identifier-like token is not a constant.
            if (pos + 1 < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos + 1])) ||
                                          text[pos + 1] == '_'))
                fail("identifiers must not start with a digit");
            ++pos;
            return Expr::constant(c == '1');
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            int start_col = column();
            std::size_t start = pos;
            while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                         text[pos] == '_'))
                ++pos;
            std::string name = text.substr(start, pos - start);
            return Expr::var(resolve(name, line, start_col));
        }
        fail("expected a variable, constant, '!' or '('");
    }
};

std::string strip_comment(const std::string& raw) {
    auto hash = raw.find('#');
    std::string s = hash == std::string::npos ? raw : raw.substr(0, hash);
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.pop_back();
    return s;
}

bool blank(const std::string& s) {
    return std::all_of(s.begin(), s.end(),
                       [](char c) { return c == ' ' || c == '\t' || c == '\r'; });
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) {
        while (!cell.empty() && (cell.front() == ' ' || cell.front() == '\t')) cell.erase(0, 1);
        while (!cell.empty() &&
               (cell.back() == ' ' || cell.back() == '\t' || cell.back() == '\r'))
            cell.pop_back();
        cells.push_back(cell);
    }
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

} // namespace

Expr parse_expression(const std::string& text, const NameResolver& resolve, int line) {
    ExprParser parser{text, resolve, line};
    return parser.parse();
}

BooleanNetwork parse_network(const std::string& text) {
    struct Definition {
        std::string name;
        std::string full_line; // columns in errors refer to this line
        std::size_t rhs_start;
        int line;
    };
    std::vector<Definition> defs;
    std::map<std::string, int> index;

    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string lineText = strip_comment(raw);
        if (blank(lineText)) continue;
        auto eq = lineText.find('=');
        if (eq == std::string::npos)
            throw ParseError("line " + std::to_string(line_no) + ": expected 'name = expression'",
                             line_no, 1);
        std::string name = lineText.substr(0, eq);
        while (!name.empty() && (name.back() == ' ' || name.back() == '\t')) name.pop_back();
        while (!name.empty() && (name.front() == ' ' || name.front() == '\t')) name.erase(0, 1);
        if (name.empty())
            throw ParseError("line " + std::to_string(line_no) + ": missing variable name",
                             line_no, 1);
        if (index.count(name))
            throw ParseError("line " + std::to_string(line_no) + ": duplicate definition of " +
                                 name,
                             line_no, 1);
        index.emplace(name, static_cast<int>(defs.size()));
        defs.push_back(Definition{name, lineText, eq + 1, line_no});
    }
    if (defs.empty()) throw ParseError("network file defines no variable", 1, 1);

    auto resolve = [&](const std::string& name, int line, int column) -> int {
        auto it = index.find(name);
        if (it == index.end())
            throw ParseError("line " + std::to_string(line) + ", column " +
                                 std::to_string(column) + ": undeclared variable " + name,
                             line, column);
        return it->second;
    };

    std::vector<std::string> names;
    std::vector<Formula> functions;
    names.reserve(defs.size());
    for (const Definition& def : defs) names.push_back(def.name);
    for (const Definition& def : defs) {
        ExprParser parser{def.full_line, resolve, def.line};
        parser.pos = def.rhs_start;
        Expr expr = parser.parse();
        std::set<int> ids = expr.vars();
        std::vector<int> support(ids.begin(), ids.end());
        if (support.size() > TruthTable::kMaxArity)
            throw ParseError("line " + std::to_string(def.line) + ": formula for " + def.name +
                                 " mentions too many variables",
                             def.line, 1);
        const int r = static_cast<int>(support.size());
        TruthTable table(r);
        for (std::size_t k = 0; k < table.size(); ++k) {
            auto value = [&](int id) {
                int pos = static_cast<int>(std::lower_bound(support.begin(), support.end(), id) -
                                           support.begin());
                return ((k >> TruthTable::bit_of_position(r, pos)) & 1) != 0;
            };
            table.set(k, expr.evaluate(value));
        }
        functions.push_back(minimize_dnf(table, support));
    }
    return BooleanNetwork(std::move(names), std::move(functions));
}

std::string serialize_formula(const Formula& f, const std::vector<std::string>& names) {
    if (f.is_constant()) return f.constant_value() ? "1" : "0";
    std::string out;
    const bool many_terms = f.terms().size() > 1;
    bool first_term = true;
    for (const Term& t : f.terms()) {
        if (!first_term) out += " | ";
        first_term = false;
        const bool parens = many_terms && t.size() > 1;
        if (parens) out += "(";
        bool first_lit = true;
        for (const Literal& lit : t.literals()) {
            if (!first_lit) out += " & ";
            first_lit = false;
            if (!lit.positive) out += "!";
            out += names[static_cast<std::size_t>(lit.var)];
        }
        if (parens) out += ")";
    }
    return out;
}

std::string serialize_network(const BooleanNetwork& network) {
    std::vector<std::string> names;
    names.reserve(network.size());
    for (const Variable& v : network.variables()) names.push_back(v.name);
    std::string out;
    for (std::size_t i = 0; i < network.size(); ++i) {
        out += names[i];
        out += " = ";
        out += serialize_formula(network.function(static_cast<int>(i)), names);
        out += "\n";
    }
    return out;
}

BooleanProfileSet parse_profiles(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    BooleanProfileSet set;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string lineText = strip_comment(raw);
        if (blank(lineText)) continue;
        std::vector<std::string> cells = split_csv_line(lineText);
        if (set.variables.empty()) {
            for (const std::string& name : cells) {
                if (name.empty())
                    throw ParseError("line " + std::to_string(line_no) + ": empty column name",
                                     line_no, 1);
                set.variables.push_back(name);
            }
            continue;
        }
        if (cells.size() != set.variables.size())
            throw ParseError("line " + std::to_string(line_no) + ": expected " +
                                 std::to_string(set.variables.size()) + " cells, found " +
                                 std::to_string(cells.size()),
                             line_no, 1);
        std::vector<Trit> row;
        row.reserve(cells.size());
        for (std::size_t c = 0; c < cells.size(); ++c) {
            const std::string& cell = cells[c];
            if (cell == "0")
                row.push_back(Trit::False);
            else if (cell == "1")
                row.push_back(Trit::True);
            else if (cell == "-" || cell == "_")
                row.push_back(Trit::Unknown);
            else
                throw ParseError("line " + std::to_string(line_no) + ", column " +
                                     std::to_string(c + 1) + ": cell must be 0, 1 or -, found '" +
                                     cell + "'",
                                 line_no, static_cast<int>(c + 1));
        }
        set.rows.push_back(std::move(row));
    }
    if (set.variables.empty()) throw ParseError("profile file has no header row", 1, 1);
    if (set.rows.empty()) throw ParseError("profile file has no data row", 1, 1);
    return set;
}

std::string serialize_profiles(const BooleanProfileSet& profiles) {
    std::string out;
    bool first = true;
    for (const std::string& name : profiles.variables) {
        if (!first) out += ",";
        out += name;
        first = false;
    }
    out += "\n";
    for (const auto& row : profiles.rows) {
        first = true;
        for (Trit t : row) {
            if (!first) out += ",";
            out.push_back(t == Trit::Unknown ? '-' : trit_char(t));
            first = false;
        }
        out += "\n";
    }
    return out;
}

std::vector<RegulatorSpec> parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    std::vector<RegulatorSpec> specs;
    std::map<std::string, std::size_t> spec_index;
    std::set<std::pair<std::string, std::string>> seen_pairs;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string lineText = strip_comment(raw);
        if (blank(lineText)) continue;
        std::istringstream ls(lineText);
        std::string src, arrow, tgt, sign_token, extra;
        if (!(ls >> src >> arrow >> tgt >> sign_token) || arrow != "->" || (ls >> extra))
            throw ParseError("line " + std::to_string(line_no) +
                                 ": expected 'source -> target sign'",
                             line_no, 1);
        RegulationSign sign;
        if (sign_token == "+")
            sign = RegulationSign::Activator;
        else if (sign_token == "-")
            sign = RegulationSign::Inhibitor;
        else if (sign_token == "?")
            sign = RegulationSign::Unknown;
        else
            throw ParseError("line " + std::to_string(line_no) + ": unknown sign '" + sign_token +
                                 "', expected +, - or ?",
                             line_no, 1);
        if (!seen_pairs.emplace(src, tgt).second)
            throw ParseError("line " + std::to_string(line_no) + ": duplicate regulation " + src +
                                 " -> " + tgt,
                             line_no, 1);
        auto it = spec_index.find(tgt);
        if (it == spec_index.end()) {
            spec_index.emplace(tgt, specs.size());
            specs.push_back(RegulatorSpec{tgt, {}});
            it = spec_index.find(tgt);
        }
        specs[it->second].regulators.push_back(Regulation{src, sign});
    }
    if (specs.empty()) throw ParseError("graph file declares no regulation", 1, 1);
    return specs;
}

std::string serialize_graph(const std::vector<RegulatorSpec>& specs) {
    std::string out;
    for (const RegulatorSpec& spec : specs)
        for (const Regulation& reg : spec.regulators) {
            out += reg.source;
            out += " -> ";
            out += spec.target;
            out += reg.sign == RegulationSign::Activator   ? " +"
                   : reg.sign == RegulationSign::Inhibitor ? " -"
                                                           : " ?";
            out += "\n";
        }
    return out;
}

SignatureSet parse_signatures(const std::string& text, const BooleanNetwork& network) {
    BooleanProfileSet raw = parse_profiles(text);
    std::vector<int> biomarkers;
    biomarkers.reserve(raw.variables.size());
    for (const std::string& name : raw.variables) {
        auto idx = network.index_of(name);
        if (!idx) throw Error("signature biomarker " + name + " is not a network variable");
        biomarkers.push_back(*idx);
    }
    std::vector<std::vector<bool>> signatures;
    signatures.reserve(raw.rows.size());
    for (std::size_t r = 0; r < raw.rows.size(); ++r) {
        std::vector<bool> sig;
        sig.reserve(raw.rows[r].size());
        for (Trit t : raw.rows[r]) {
            if (t == Trit::Unknown)
                throw Error("signature rows must be fully defined (row " + std::to_string(r + 1) +
                            ")");
            sig.push_back(t == Trit::True);
        }
        signatures.push_back(std::move(sig));
    }
    return SignatureSet::build(std::move(biomarkers), std::move(signatures));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << content;
}

} // namespace bnsynth
