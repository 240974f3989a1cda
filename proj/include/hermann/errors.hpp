#pragma once

#include <stdexcept>
#include <string>

namespace hermann {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define HERMANN_DEFINE_ERROR(Name)          \
    class Name : public Error {             \
    public:                                 \
        using Error::Error;                 \
    };

HERMANN_DEFINE_ERROR(PoleError)
HERMANN_DEFINE_ERROR(DimensionMismatch)
HERMANN_DEFINE_ERROR(SingularGram)
HERMANN_DEFINE_ERROR(UnsupportedLabel)
HERMANN_DEFINE_ERROR(ClosureBudgetExceeded)
HERMANN_DEFINE_ERROR(UnrecognizedType)
HERMANN_DEFINE_ERROR(UnknownKey)
HERMANN_DEFINE_ERROR(BadParameters)
HERMANN_DEFINE_ERROR(EmptyAlcove)
HERMANN_DEFINE_ERROR(NonTermination)
HERMANN_DEFINE_ERROR(NoConvergence)
HERMANN_DEFINE_ERROR(InternalInconsistency)
HERMANN_DEFINE_ERROR(RankTooHigh)

#undef HERMANN_DEFINE_ERROR

/// Malformed datum file; the message carries the offending field or line.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace hermann
