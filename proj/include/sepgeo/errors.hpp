// errors.hpp — exception hierarchy shared by all sepgeo modules

#pragma once

#include <stdexcept>
#include <string>

namespace sepgeo {

// Base class for every error this library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Matrix orders / subsystem dimension lists disagree.
class DimensionError : public Error {
public:
    using Error::Error;
};

// A subsystem split is empty, overlapping, or out of range.
class InvalidPartition : public Error {
public:
    using Error::Error;
};

// max |a(i,j) - conj(a(j,i))| exceeds the Hermiticity tolerance.
class HermiticityError : public Error {
public:
    using Error::Error;
};

// Trace differs from 1 beyond tolerance.
class TraceError : public Error {
public:
    using Error::Error;
};

// An eigenvalue falls below the positivity tolerance.
class PositivityError : public Error {
public:
    using Error::Error;
};

// A scalar argument is outside its admissible range (or not finite).
class RangeError : public Error {
public:
    using Error::Error;
};

// Requested object exceeds the supported matrix order.
class SizeError : public Error {
public:
    using Error::Error;
};

// Basis states fail purity or pairwise orthogonality.
class BasisError : public Error {
public:
    using Error::Error;
};

// A radial fraction exceeded 1; invalid input slipped past validation.
class GeometryError : public Error {
public:
    using Error::Error;
};

// Operation defined for pure states received a mixed state.
class PurityError : public Error {
public:
    using Error::Error;
};

// Reduced state requested for an outcome of (numerically) zero probability.
class ZeroProbabilityError : public Error {
public:
    using Error::Error;
};

// Input file is missing, unparseable, or violates the matrix schema.
class FileFormatError : public Error {
public:
    using Error::Error;
};

// Output-side I/O failure (unwritable path, failed write).
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace sepgeo
