#pragma once

#include <stdexcept>
#include <string>

namespace lame {

/// Base class for every error raised by the library.
class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// Bad superellipse parameters, polygon size or projector configuration.
class InvalidArgument : public Error
{
  public:
    using Error::Error;
};

/// Projector configuration out of range (k0 < 3, non-positive tolerance, ...).
class InvalidConfig : public InvalidArgument
{
  public:
    using InvalidArgument::InvalidArgument;
};

/// A point violated a geometric precondition (not on the unit circle, not on the curve, ...).
class GeometryError : public Error
{
  public:
    using Error::Error;
};

class DegenerateSegment : public GeometryError
{
  public:
    using GeometryError::GeometryError;
};

/// No region system accepted an exterior point. Only reachable through a tolerance or geometry bug.
class NoRegionMatched : public Error
{
  public:
    using Error::Error;
};

} // namespace lame
