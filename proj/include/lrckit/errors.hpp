#pragma once

#include <stdexcept>
#include <string>

namespace lrckit {

struct FieldMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DivisionByZeroError : std::domain_error {
    using std::domain_error::domain_error;
};

// decode given fewer symbols/nodes than the reconstruction threshold
struct InsufficientSymbolsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// provided symbols are mutually inconsistent (corruption, not erasure)
struct DecodeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// bad donor set for a local repair (wrong group, missing member, ...)
struct RepairError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// a group peer needed for local repair is itself gone
struct RepairImpossibleError : RepairError {
    using RepairError::RepairError;
};

struct CorruptBlockError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// exhaustive search refused because the instance is too large
struct SizeGuardError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace lrckit
