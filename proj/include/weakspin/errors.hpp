#pragma once

#include <stdexcept>
#include <string>

namespace weakspin {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Pre- and post-selected spin states are (numerically) orthogonal, so the
// weak value diverges.
class OrthogonalSelection : public Error {
public:
    using Error::Error;
};

class NonPositiveWidth : public Error {
public:
    using Error::Error;
};

// Grid is empty or too degenerate for quadrature.
class EmptyGrid : public Error {
public:
    using Error::Error;
};

// More than the allowed fraction of the density weight falls outside the grid.
class GridTooNarrow : public Error {
public:
    using Error::Error;
};

// tan(theta/2) pole at theta = pi.
class TanPole : public Error {
public:
    using Error::Error;
};

class NonPositiveInputs : public Error {
public:
    using Error::Error;
};

// No scanned limit satisfies the requested deviation tolerance.
class NoValidLimit : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace weakspin
