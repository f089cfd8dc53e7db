#include "bnsynth/formula.hpp"

#include <algorithm>
#include <bit>

#include "bnsynth/rng.hpp"

namespace bnsynth {

State State::from_bits(const std::vector<bool>& bits) {
    State s(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) s.bits_[i] = bits[i] ? 1 : 0;
    return s;
}

bool State::get(int var) const {
    if (var < 0 || static_cast<std::size_t>(var) >= bits_.size())
        throw ContractViolation("state has no assignment for variable index " + std::to_string(var));
    return bits_[static_cast<std::size_t>(var)] != 0;
}

void State::set(int var, bool value) {
    if (var < 0 || static_cast<std::size_t>(var) >= bits_.size())
        throw ContractViolation("state has no slot for variable index " + std::to_string(var));
    bits_[static_cast<std::size_t>(var)] = value ? 1 : 0;
}

std::string State::to_string() const {
    std::string out;
    out.reserve(bits_.size());
    for (auto b : bits_) out.push_back(b ? '1' : '0');
    return out;
}

TruthTable::TruthTable(int arity) : arity_(arity) {
    if (arity < 0 || arity > kMaxArity)
        throw ContractViolation("truth table arity out of range: " + std::to_string(arity));
    std::size_t bits = std::size_t{1} << arity;
    words_.assign((bits + 63) / 64, 0);
}

std::size_t TruthTable::count_ones() const {
    std::size_t n = 0;
    for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

std::size_t TruthTable::count_differences(const TruthTable& other) const {
    if (arity_ != other.arity_)
        throw ContractViolation("truth tables have different arities");
    std::size_t n = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
        n += static_cast<std::size_t>(std::popcount(words_[i] ^ other.words_[i]));
    return n;
}

std::uint64_t TruthTable::hash(std::uint64_t salt) const {
    std::uint64_t state = salt ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(arity_ + 1));
    std::uint64_t acc = 0;
    for (std::uint64_t w : words_) {
        state ^= w;
        acc ^= splitmix64(state);
    }
    return acc;
}

Term::Term(std::vector<Literal> literals) : literals_(std::move(literals)) {
    std::sort(literals_.begin(), literals_.end());
    for (std::size_t i = 1; i < literals_.size(); ++i)
        if (literals_[i].var == literals_[i - 1].var)
            throw ContractViolation("term mentions variable " + std::to_string(literals_[i].var) +
                                    " twice");
}

bool Term::evaluate(const State& s) const {
    for (const Literal& lit : literals_)
        if (s.get(lit.var) != lit.positive) return false;
    return true;
}

Formula Formula::dnf(std::vector<int> support, std::vector<Term> terms) {
    Formula f;
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    for (const Term& t : terms)
        for (const Literal& lit : t.literals())
            if (!std::binary_search(support.begin(), support.end(), lit.var))
                throw ContractViolation("term literal outside declared support: variable " +
                                        std::to_string(lit.var));
    std::sort(terms.begin(), terms.end());
    terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
    // A term with no literals makes the whole disjunction true.
    for (const Term& t : terms)
        if (t.size() == 0) return constant(true, std::move(support));
    if (terms.empty()) return constant(false, std::move(support));
    f.support_ = std::move(support);
    f.terms_ = std::move(terms);
    f.constant_true_ = false;
    return f;
}

Formula Formula::constant(bool value, std::vector<int> support) {
    Formula f;
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    f.support_ = std::move(support);
    f.constant_true_ = value;
    return f;
}

bool Formula::evaluate(const State& s) const {
    if (terms_.empty()) return constant_true_;
    for (const Term& t : terms_)
        if (t.evaluate(s)) return true;
    return false;
}

bool Formula::evaluate_pattern(std::size_t index) const {
    if (terms_.empty()) return constant_true_;
    const int r = static_cast<int>(support_.size());
    for (const Term& t : terms_) {
        bool ok = true;
        for (const Literal& lit : t.literals()) {
            int pos = static_cast<int>(std::lower_bound(support_.begin(), support_.end(), lit.var) -
                                       support_.begin());
            bool bit = (index >> TruthTable::bit_of_position(r, pos)) & 1;
            if (bit != lit.positive) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

TruthTable Formula::table() const {
    const int r = static_cast<int>(support_.size());
    if (r > TruthTable::kMaxArity)
        throw ContractViolation("formula support too large to materialize: " + std::to_string(r));
    TruthTable tt(r);
    for (std::size_t k = 0; k < tt.size(); ++k) tt.set(k, evaluate_pattern(k));
    return tt;
}

} // namespace bnsynth
