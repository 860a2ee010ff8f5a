#ifndef DEDEKIND_ERRORS_HPP
#define DEDEKIND_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dedekind {

/// Input has the wrong shape for the operation (mismatched base sizes,
/// out-of-range masks, truth bits beyond 2^m).
class input_shape_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A domain invariant does not hold (non-monotone truth table,
/// comparable antichain elements, non-bijective permutation map).
class invariant_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The request is valid but outside what this build can compute;
/// the message names the limit.
class capability_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Inconsistent run configuration (overlapping job ranges, conflicting
/// mode flags).
class config_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A dataset or manifest failed an integrity check (missing or duplicate
/// record, trailer mismatch).
class integrity_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Text input could not be parsed; carries the 1-based line number when
/// the source is line oriented (0 when not applicable).
class parse_error : public std::runtime_error {
public:
    parse_error(std::size_t line, const std::string& what)
        : std::runtime_error(line == 0 ? what
                                       : "line " + std::to_string(line) + ": " + what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A checked accumulator exceeded its declared capacity. Always fatal,
/// never silent.
class accumulator_overflow_error : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

} // namespace dedekind

#endif // DEDEKIND_ERRORS_HPP
