#ifndef MZV_ERRORS_HPP
#define MZV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mzv {

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(std::string msg, std::size_t pos)
        : std::runtime_error(std::move(msg)), position(pos) {}
};

// A term lacked the letter that exact_divide was asked to strip.
struct DivisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A truncated completion automorphism was asked for weights beyond its bound.
struct TruncationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An operand lies outside the subalgebra an operation is defined on.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct WeightMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace mzv

#endif
