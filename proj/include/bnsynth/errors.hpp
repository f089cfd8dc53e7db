#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace bnsynth {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Violated precondition of an operation (caller bug, not data).
class ContractViolation : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::string msg, int line, int column)
        : Error(std::move(msg)), line(line), column(column) {}
    int line;
    int column;
};

// Two fully defined profile rows with the same input pattern disagree on the output.
class ProfileConflict : public Error {
public:
    ProfileConflict(std::string msg, std::string pattern)
        : Error(std::move(msg)), pattern(std::move(pattern)) {}
    std::string pattern;
};

// Stable-state enumeration hit the cap; the score of the network is undefined.
class ScoringError : public Error {
public:
    using Error::Error;
};

// Power iteration did not converge; carries the last iterate.
class ConvergenceError : public Error {
public:
    ConvergenceError(std::string msg, std::vector<double> last_iterate)
        : Error(std::move(msg)), last_iterate(std::move(last_iterate)) {}
    std::vector<double> last_iterate;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

} // namespace bnsynth
