#pragma once

#include <stdexcept>
#include <string>

namespace modquot {

struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Enumeration of a generator-presented group exceeded the configured cap.
struct GroupTooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A subset-basis expansion was requested beyond the configured size cap.
struct SizeCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The certificate criterion does not apply to the requested input
/// (e.g. a block larger than the genus).
struct CriterionInapplicable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace modquot
