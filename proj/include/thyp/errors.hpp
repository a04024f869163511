#pragma once

#include <stdexcept>
#include <string>

namespace thyp {

// A parameter choice violates a hypothesis of an identity (non-positive
// integer lower parameter, vanishing denominator, excluded integrality).
struct ConstraintError : std::domain_error {
    explicit ConstraintError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace thyp
