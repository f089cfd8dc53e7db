#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bnsynth/errors.hpp"

namespace bnsynth {

enum class Trit : std::uint8_t { False = 0, True = 1, Unknown = 2 };

inline char trit_char(Trit t) {
    switch (t) {
    case Trit::False: return '0';
    case Trit::True: return '1';
    default: return '_';
    }
}

// Total assignment of bits to the variables 0..n-1 of a network.
class State {
public:
    State() = default;
    explicit State(std::size_t n, bool fill = false) : bits_(n, fill ? 1 : 0) {}
    static State from_bits(const std::vector<bool>& bits);

    std::size_t size() const { return bits_.size(); }
    bool get(int var) const;
    void set(int var, bool value);

    bool operator==(const State& other) const { return bits_ == other.bits_; }
    bool operator<(const State& other) const { return bits_ < other.bits_; }

    std::string to_string() const;

private:
    std::vector<std::uint8_t> bits_;
};

// Packed truth table over r inputs, 2^r output bits. Index k encodes the
// input pattern whose bits spell k with the first input as the most
// significant bit (pattern "101" over (a,b,c) means a=1, b=0, c=1 and k=5).
class TruthTable {
public:
    static constexpr int kMaxArity = 20;

    TruthTable() : arity_(0), words_(1, 0) {}
    explicit TruthTable(int arity);

    int arity() const { return arity_; }
    std::size_t size() const { return std::size_t{1} << arity_; }

    bool get(std::size_t index) const {
        return (words_[index >> 6] >> (index & 63)) & 1;
    }
    void set(std::size_t index, bool value) {
        if (value)
            words_[index >> 6] |= std::uint64_t{1} << (index & 63);
        else
            words_[index >> 6] &= ~(std::uint64_t{1} << (index & 63));
    }

    std::size_t count_ones() const;
    std::size_t count_differences(const TruthTable& other) const;

    bool operator==(const TruthTable& other) const {
        return arity_ == other.arity_ && words_ == other.words_;
    }

    std::uint64_t hash(std::uint64_t salt) const;

    // Numeric bit index of a label position: position 0 is the leftmost
    // (most significant) label character.
    static int bit_of_position(int arity, int position) { return arity - 1 - position; }

private:
    int arity_;
    std::vector<std::uint64_t> words_;
};

struct Literal {
    int var = 0;       // variable index
    bool positive = true;

    bool operator==(const Literal& o) const { return var == o.var && positive == o.positive; }
    bool operator<(const Literal& o) const {
        if (var != o.var) return var < o.var;
        return positive < o.positive;
    }
};

// Conjunction of literals over distinct variables.
class Term {
public:
    Term() = default;
    explicit Term(std::vector<Literal> literals);

    const std::vector<Literal>& literals() const { return literals_; }
    std::size_t size() const { return literals_.size(); }

    bool evaluate(const State& s) const;

    bool operator==(const Term& o) const { return literals_ == o.literals_; }
    bool operator<(const Term& o) const { return literals_ < o.literals_; }

private:
    std::vector<Literal> literals_;
};

// Propositional function in disjunctive normal form. The support is the
// declared input set and may list variables that no term mentions; the
// truth table is always laid out over the full support, sorted ascending.
class Formula {
public:
    Formula() : constant_true_(false) {}

    // support: variable indices (deduplicated and sorted internally).
    // Terms may only mention support variables.
    static Formula dnf(std::vector<int> support, std::vector<Term> terms);
    static Formula constant(bool value, std::vector<int> support = {});

    bool is_constant() const { return terms_.empty(); }
    bool constant_value() const { return constant_true_; }

    const std::vector<int>& support() const { return support_; }
    const std::vector<Term>& terms() const { return terms_; }

    bool evaluate(const State& s) const;

    // Evaluates on the support pattern encoded by `index` (first support
    // variable = most significant bit).
    bool evaluate_pattern(std::size_t index) const;

    TruthTable table() const;

    bool operator==(const Formula& o) const {
        return support_ == o.support_ && terms_ == o.terms_ && constant_true_ == o.constant_true_;
    }

private:
    std::vector<int> support_;
    std::vector<Term> terms_;
    bool constant_true_; // meaningful only when terms_ is empty
};

} // namespace bnsynth
