#pragma once

#include <stdexcept>
#include <string>

namespace toribord {

/// Base class of every domain error raised by the library. The CLI maps
/// these to exit code 1.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define TORIBORD_DEFINE_ERROR(Name)                                        \
    class Name : public Error {                                            \
    public:                                                                \
        explicit Name(const std::string& what) : Error(#Name, what) {}     \
    };

TORIBORD_DEFINE_ERROR(DimensionMismatch)
TORIBORD_DEFINE_ERROR(SingularMatrix)
TORIBORD_DEFINE_ERROR(NotUnimodular)
TORIBORD_DEFINE_ERROR(NotInvertible)
TORIBORD_DEFINE_ERROR(ResourceLimit)
TORIBORD_DEFINE_ERROR(InvalidComplex)
TORIBORD_DEFINE_ERROR(NotACycle)
TORIBORD_DEFINE_ERROR(NotInSpan)
TORIBORD_DEFINE_ERROR(NotEssential)
TORIBORD_DEFINE_ERROR(NotFaithful)
TORIBORD_DEFINE_ERROR(NotInComplex)
TORIBORD_DEFINE_ERROR(VertexOutOfBound)
TORIBORD_DEFINE_ERROR(IntegralityViolation)
TORIBORD_DEFINE_ERROR(InvalidPair)
TORIBORD_DEFINE_ERROR(NoMatching)
TORIBORD_DEFINE_ERROR(InvalidResult)
TORIBORD_DEFINE_ERROR(ParseError)

#undef TORIBORD_DEFINE_ERROR

} // namespace toribord
