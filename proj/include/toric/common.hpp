#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace toric {

// Exact arithmetic everywhere: exponents and lattice entries are cpp_int,
// verification-layer coefficients are cpp_rational.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Malformed user input: documents, flags, rejected extension guards.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A theorem hypothesis guard refused the requested operation.
struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Internal consistency check failed; a bug, not bad input.
struct InvariantError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void check_invariant(bool cond, const std::string& what) {
    if (!cond)
        throw InvariantError(what);
}

/// FNV-1a over bytes; used for content-addressed caching and report hashes.
std::uint64_t fnv1a64(std::string_view bytes);
std::string hex64(std::uint64_t value);

}  // namespace toric
