#pragma once

#include <stdexcept>
#include <string>

namespace tlcp {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input shapes are incompatible with the requested operation.
class ShapeMismatchError : public Error {
public:
    using Error::Error;
};

// A multi-index component lies outside [1, dim].
class IndexOutOfRangeError : public Error {
public:
    using Error::Error;
};

// The same multi-index appears twice in an entry list.
class DuplicateIndexError : public Error {
public:
    using Error::Error;
};

// A mode set is not a strictly increasing subset of the leading index positions.
class InvalidModeSetError : public Error {
public:
    using Error::Error;
};

// An operation requiring an even-order cubical tensor received something else.
class NotEvenOrderError : public Error {
public:
    using Error::Error;
};

// Subtensor bound k outside [1, n].
class KOutOfRangeError : public Error {
public:
    using Error::Error;
};

// Principal minor requested for an empty index set.
class EmptyIndexSetError : public Error {
public:
    using Error::Error;
};

// The flattened dimension exceeds the configured enumeration cap.
class DimensionCapExceededError : public Error {
public:
    using Error::Error;
};

// Uniqueness analysis requires every entry of Q to be strictly positive.
class QNotStrictlyPositiveError : public Error {
public:
    using Error::Error;
};

// KKT verification requires the flattened matrix to be symmetric.
class NotBlockSymmetricError : public Error {
public:
    using Error::Error;
};

// A KKT certificate failed one of its five conditions.
class KKTInvalidError : public Error {
public:
    using Error::Error;
};

// The KKT solution chain requires a column sufficient tensor.
class NotColumnSufficientError : public Error {
public:
    using Error::Error;
};

// An implication that holds for the given inputs failed to hold numerically.
// Always indicates a bug, never bad input.
class InternalInconsistencyError : public Error {
public:
    using Error::Error;
};

// A derivation step of the KKT solution chain failed; internal error.
class ChainViolatedError : public InternalInconsistencyError {
public:
    using InternalInconsistencyError::InternalInconsistencyError;
};

// The requested construction does not apply to the given input.
class NotApplicableError : public Error {
public:
    using Error::Error;
};

// Malformed text where a rational number or JSON document was expected.
class ParseError : public Error {
public:
    using Error::Error;
};

// Structurally valid JSON that violates the tensor file schema.
class SchemaViolationError : public Error {
public:
    using Error::Error;
};

} // namespace tlcp
