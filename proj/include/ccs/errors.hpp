#pragma once

#include <stdexcept>
#include <string>

namespace ccs {

/// Malformed input text (Cayley tables, surface files, CLI specs).
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

/// Structurally well-formed input that violates a model invariant.
struct validation_error : std::runtime_error {
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

/// Exhaustive enumeration would exceed the configured work budget.
struct budget_error : std::runtime_error {
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ccs
