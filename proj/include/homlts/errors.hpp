#pragma once

#include <stdexcept>
#include <string>

namespace homlts {

/// A mathematical precondition failed: singular twisting map, axiom
/// violation at construction, inconsistent structure data, and so on.
struct MathError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input text (scalar strings, algebra files, matrix files).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace homlts
