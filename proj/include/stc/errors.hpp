#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace stc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidInput : Error {
    using Error::Error;
};

struct Disconnected : InvalidInput {
    Disconnected() : InvalidInput("input graph is disconnected") {}
};

struct ParseError : Error {
    int line;
    ParseError(int line_no, const std::string& what)
        : Error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
};

// Thrown by the enumeration oracle; trees_emitted counts what was produced before the cap hit.
struct BudgetExceeded : Error {
    std::uint64_t trees_emitted;
    BudgetExceeded(std::uint64_t emitted, const std::string& what)
        : Error(what), trees_emitted(emitted) {}
};

struct VerificationError : Error {
    using Error::Error;
};

} // namespace stc
