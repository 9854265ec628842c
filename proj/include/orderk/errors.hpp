#pragma once

#include <stdexcept>
#include <string>

namespace orderk {

// Base class for every error raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct IdenticalPoints : Error {
    using Error::Error;
};
struct Collinear : Error {
    using Error::Error;
};
struct OverlappingSegments : Error {
    using Error::Error;
};
struct InvalidSubset : Error {
    using Error::Error;
};
struct DegenerateInput : Error {
    using Error::Error;
};
struct BBoxTooSmall : Error {
    using Error::Error;
};
struct UnboundedCell : Error {
    using Error::Error;
};
struct UnboundedRegion : Error {
    using Error::Error;
};
struct OrderOutOfRange : Error {
    using Error::Error;
};
struct OutsideTriangle : Error {
    using Error::Error;
};
struct NonConvexQuad : Error {
    using Error::Error;
};
struct DegenerateAngles : Error {
    using Error::Error;
};
struct EvenLength : Error {
    using Error::Error;
};
struct CoincidentEndpoints : Error {
    using Error::Error;
};
struct OutOfRange : Error {
    using Error::Error;
};
struct SampleCollision : Error {
    using Error::Error;
};
struct InsufficientSamples : Error {
    using Error::Error;
};
struct DegenerateInsertion : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};

// Raised when a numeric postcondition (convexity, partition-of-area, ...)
// fails beyond its documented tolerance.
struct NumericalFailure : Error {
    using Error::Error;
};

}  // namespace orderk
