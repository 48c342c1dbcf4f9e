#pragma once

#include <stdexcept>
#include <string>

namespace phecke {

// Exact division was asked for a non-divisor.
struct NonDivisibleError : std::runtime_error {
    explicit NonDivisibleError(const std::string& msg) : std::runtime_error(msg) {}
};

// A coset triple (a,b,c) outside D_Delta.
struct InvalidTripleError : std::runtime_error {
    explicit InvalidTripleError(const std::string& msg) : std::runtime_error(msg) {}
};

// A series/sequence operation applied to a character kind that does not
// satisfy its hypotheses (kind 3 has no rationality statement).
struct KindUnsupportedError : std::runtime_error {
    explicit KindUnsupportedError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

}  // namespace phecke
