#pragma once

#include <stdexcept>
#include <string>

namespace hob {

// Input document does not match a schema. CLI maps this to exit code 1.
struct SchemaError : std::runtime_error {
    explicit SchemaError(const std::string& field, const std::string& what)
        : std::runtime_error(field + ": " + what), field(field) {}
    std::string field;
};

// Well-formed input outside an operation's domain. CLI maps this to exit code 2.
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace hob
