#pragma once

#include <stdexcept>
#include <string>

namespace coreborder {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid data or parameters: bad shapes, out-of-range hyperparameters,
/// classes too small for the requested neighbor count, unparsable cells.
class DataError : public Error {
public:
    using Error::Error;
};

/// File could not be opened, read, or written.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace coreborder
