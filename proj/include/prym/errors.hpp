#pragma once

#include <stdexcept>
#include <string>

namespace prym {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct InvalidPermutation : Error {
    using Error::Error;
};

struct OrderCapExceeded : Error {
    using Error::Error;
};

struct AutSearchCapExceeded : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(const std::string& msg, int line)
        : Error(msg + " (line " + std::to_string(line) + ")"), line(line) {}
    int line;
};

struct OrderMismatch : Error {
    using Error::Error;
};

struct NonIntegralReduction : Error {
    using Error::Error;
};

struct InternalInconsistency : Error {
    using Error::Error;
};

struct ConditionAPrerequisite : Error {
    using Error::Error;
};

struct NotAbelian : Error {
    using Error::Error;
};

struct CoverageGap : Error {
    using Error::Error;
};

struct OrbitCapExceeded : Error {
    using Error::Error;
};

}  // namespace prym
