#pragma once

#include <stdexcept>
#include <string>

namespace dmatch {

// Base class for all library errors. The CLI maps any Error to exit code 2;
// "NO" answers of deciders are ordinary return values, never exceptions.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidVertexError : Error { using Error::Error; };
struct SelfLoopError : Error { using Error::Error; };
struct EmptyGraphError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct InvalidMatchingError : Error { using Error::Error; };
struct BudgetExhaustedError : Error { using Error::Error; };
struct TooLargeError : Error { using Error::Error; };
struct PreconditionError : Error { using Error::Error; };
struct NoEdgesError : Error { using Error::Error; };
struct InternalInvariantError : Error { using Error::Error; };
struct InvalidCoverError : Error { using Error::Error; };
struct WrongSetSizeError : Error { using Error::Error; };
struct KTooSmallError : Error { using Error::Error; };
struct NotBipartiteError : Error { using Error::Error; };
struct InvalidSequenceError : Error { using Error::Error; };

}  // namespace dmatch
