#ifndef DEDEKIND_BIGINT_HPP
#define DEDEKIND_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "dedekind/errors.hpp"

namespace dedekind {

/// Arbitrary-precision nonnegative counts. Grand totals, interval sizes
/// and solution counts all go through this type so no code path can wrap.
using BigInt = boost::multiprecision::cpp_int;

/// Parses a decimal digit string. Rejects signs, whitespace and empty
/// input; counts in this project are nonnegative by construction.
inline BigInt parse_bigint(std::string_view text) {
    if (text.empty()) {
        throw parse_error(0, "empty integer field");
    }
    for (char c : text) {
        if (c < '0' || c > '9') {
            throw parse_error(0, "invalid integer '" + std::string(text) + "'");
        }
    }
    return BigInt(std::string(text));
}

} // namespace dedekind

#endif // DEDEKIND_BIGINT_HPP
