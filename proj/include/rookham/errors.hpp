#pragma once

#include <stdexcept>
#include <string>

namespace rookham {

// Bad argument: wrong family, out-of-range parameter, malformed pairing, ...
struct invalid_parameter : std::invalid_argument {
    explicit invalid_parameter(const std::string& what) : std::invalid_argument(what) {}
};

// The requested object cannot exist (e.g. pairing of an odd-order graph).
struct no_pairing_exists : std::invalid_argument {
    explicit no_pairing_exists(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed input file.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// An internal invariant the construction relies on was violated; always a bug.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace rookham
