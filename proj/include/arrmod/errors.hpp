#pragma once

#include <stdexcept>
#include <string>

namespace arrmod {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// malformed textual/JSON input: CLI maps these to exit code 2
struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

struct InputError : Error {
    using Error::Error;
};

// well-formed input outside an operation's domain: CLI maps these to exit code 1
struct DomainError : Error {
    using Error::Error;
};

struct NonSquareError : DomainError {
    NonSquareError() : DomainError("matrix is not square") {}
};

struct NonCentralError : DomainError {
    NonCentralError() : DomainError("arrangement is not central (cone it first)") {}
};

struct NonEssentialError : DomainError {
    NonEssentialError() : DomainError("arrangement is not essential") {}
};

// indices are 0-based in the struct, 1-based in the message
struct DuplicateHyperplaneError : DomainError {
    int i, j;
    DuplicateHyperplaneError(int i_, int j_)
        : DomainError("duplicate hyperplane: factors " + std::to_string(i_ + 1) + " and " +
                      std::to_string(j_ + 1) + " define the same hyperplane"),
          i(i_), j(j_) {}
};

struct NotGoodError : DomainError {
    long p;
    int i, j;
    NotGoodError(long p_, int i_, int j_)
        : DomainError("prime " + std::to_string(p_) + " is not good: hyperplanes " +
                      std::to_string(i_ + 1) + " and " + std::to_string(j_ + 1) +
                      " become proportional mod " + std::to_string(p_)),
          p(p_), i(i_), j(j_) {}
};

struct BudgetError : DomainError {
    using DomainError::DomainError;
};

struct InterpolationError : DomainError {
    using DomainError::DomainError;
};

} // namespace arrmod
