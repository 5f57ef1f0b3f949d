// Copyright (c) 2026 The svqe developers
// SPDX-License-Identifier: Apache-2.0

#ifndef SVQE_ERRORS_HPP
#define SVQE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace svqe {

/// Base class for all svqe errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonHermitianInput : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct NonUnitaryInput : Error {
  using Error::Error;
};

struct InvalidNoiseModel : Error {
  using Error::Error;
};

struct SingularCalibration : Error {
  using Error::Error;
};

struct RankDeficient : Error {
  using Error::Error;
};

/// The state has (numerically) no weight in the requested symmetry sector.
struct VanishingSupport : Error {
  using Error::Error;
};

struct SchemaError : Error {
  using Error::Error;
};

/// File-format error carrying the 1-based row and column of the offence.
struct ParseError : Error {
  ParseError(const std::string& msg, std::size_t row, std::size_t column)
      : Error(msg + " (row " + std::to_string(row) + ", column " +
              std::to_string(column) + ")"),
        row(row),
        column(column) {}
  std::size_t row;
  std::size_t column;
};

}  // namespace svqe

#endif  // SVQE_ERRORS_HPP
