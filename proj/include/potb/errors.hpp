#pragma once

#include <stdexcept>
#include <string>

namespace potb {

// Base for all library errors.  The CLI maps Error (and subtypes) to exit
// code 2 and ParseError to exit code 3; claim failures are reported, not
// thrown.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotPrimePower : Error { using Error::Error; };
struct EvenCharacteristic : Error { using Error::Error; };
struct UnsupportedOrder : Error { using Error::Error; };
struct SizeCapExceeded : Error { using Error::Error; };
struct AlreadyAugmented : Error { using Error::Error; };
struct LevelOutOfRange : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct ShapeMismatch : Error { using Error::Error; };
struct ShiftOutOfRange : Error { using Error::Error; };
struct UnmappedLevel : Error { using Error::Error; };
struct ConstraintViolation : Error { using Error::Error; };
struct ColumnSumMismatch : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct DegenerateModel : Error { using Error::Error; };

// Malformed input documents (JSON syntax, schema, unknown tokens).
struct ParseError : Error { using Error::Error; };

}  // namespace potb
