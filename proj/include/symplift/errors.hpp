#pragma once

#include <stdexcept>
#include <string>

namespace symplift {

struct DimensionError : std::runtime_error {
    explicit DimensionError(const std::string& what) : std::runtime_error(what) {}
};

struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

struct NotInvertibleError : std::runtime_error {
    explicit NotInvertibleError(const std::string& what) : std::runtime_error(what) {}
};

struct LayerMembershipError : std::runtime_error {
    explicit LayerMembershipError(const std::string& what) : std::runtime_error(what) {}
};

struct CapExceededError : std::runtime_error {
    explicit CapExceededError(const std::string& what) : std::runtime_error(what) {}
};

struct LabelRecoveryError : std::runtime_error {
    explicit LabelRecoveryError(const std::string& what) : std::runtime_error(what) {}
};

struct OverflowError : std::runtime_error {
    explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace symplift
