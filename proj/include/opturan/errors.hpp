#ifndef OPTURAN_ERRORS_HPP
#define OPTURAN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace opturan {

/// Base class for every error this library throws on bad input.
/// Internal invariant violations use std::logic_error instead.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LoopEdgeError : Error {
    using Error::Error;
};
struct DuplicateEdgeError : Error {
    using Error::Error;
};
struct VertexOutOfRangeError : Error {
    using Error::Error;
};
struct NotOuterplanarError : Error {
    using Error::Error;
};
struct NotBiconnectedError : Error {
    using Error::Error;
};
struct DisconnectedError : Error {
    using Error::Error;
};
struct DomainError : Error {
    using Error::Error;
};
struct InfeasibleError : Error {
    using Error::Error;
};
struct TooLargeError : Error {
    using Error::Error;
};
struct BudgetError : Error {
    using Error::Error;
};

} // namespace opturan

#endif
