#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mtensor {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// The transform matrix M is numerically singular.
class SingularTransform : public Error {
public:
    using Error::Error;
};

/// A transform-domain frontal slice could not be inverted.
class SingularSlice : public Error {
public:
    explicit SingularSlice(std::size_t slice)
        : Error("transform-domain slice " + std::to_string(slice) + " is numerically singular"),
          slice_(slice) {}

    std::size_t slice() const noexcept { return slice_; }

private:
    std::size_t slice_;
};

/// A transform-domain diagonal entry vanished while building a triangular splitting.
class ZeroDiagonal : public Error {
public:
    ZeroDiagonal(std::size_t slice, std::size_t row)
        : Error("transform-domain diagonal entry (" + std::to_string(row) + "," + std::to_string(row) +
                ") of slice " + std::to_string(slice) + " vanishes"),
          slice_(slice), row_(row) {}

    std::size_t slice() const noexcept { return slice_; }
    std::size_t row() const noexcept { return row_; }

private:
    std::size_t slice_;
    std::size_t row_;
};

class InconsistentSplitting : public Error {
public:
    using Error::Error;
};

class InconsistentSystem : public Error {
public:
    using Error::Error;
};

/// Malformed tensor, matrix, or image file.
class FormatError : public Error {
public:
    using Error::Error;
};

}  // namespace mtensor
