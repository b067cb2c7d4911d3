#pragma once

#include <stdexcept>
#include <string>

namespace abelian {

struct InvalidType : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NonReducedWord : std::domain_error {
    NonReducedWord(const std::string& msg, std::string root)
        : std::domain_error(msg), repeated_root(std::move(root)) {}
    std::string repeated_root;
};

struct InvariantViolation : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace abelian
