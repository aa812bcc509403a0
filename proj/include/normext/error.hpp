#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace normext {

/// Semantic failure of a checked mathematical precondition or postcondition
/// (e.g. pG not contained in H, pseudonorm axiom violation). Distinct from
/// std::invalid_argument, which signals malformed input.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A lattice window too small to certify exact values; carries the bound
/// that would have sufficed.
struct WindowError : ValidationError {
    WindowError(const std::string& msg, std::int64_t required)
        : ValidationError(msg), required_window(required) {}
    std::int64_t required_window;
};

} // namespace normext
