#pragma once

#include "probgeo/errors.hpp"

namespace probgeo::cli {

/// Bad flags or flag combinations; exits with status 2.
class UsageError : public Error {
public:
    using Error::Error;
};

/// The input file cannot be opened or read.
class IoError : public Error {
public:
    using Error::Error;
};

/// A cell fails to parse as a finite float; the message names the line.
class ParseError : public Error {
public:
    using Error::Error;
};

/// The file holds no data rows.
class EmptyInput : public Error {
public:
    using Error::Error;
};

}  // namespace probgeo::cli
