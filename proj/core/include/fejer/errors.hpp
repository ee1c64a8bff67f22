#pragma once

#include <stdexcept>
#include <string>

namespace fejer {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Operands live in spaces of different dimension.
class DimensionError : public Error {
 public:
  DimensionError(std::size_t expected, std::size_t got)
      : Error("dimension mismatch: expected " + std::to_string(expected) +
              ", got " + std::to_string(got)),
        expected(expected), got(got) {}
  std::size_t expected, got;
};

/// Invalid construction arguments (degenerate normal, bad box, b = 0, ...).
class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what) : Error(what) {}
};

/// A table-backed modulus was queried beyond its validity range.
class ModulusRangeError : public Error {
 public:
  ModulusRangeError(const std::string& name, const std::string& arg,
                    const std::string& domain_max)
      : Error("modulus '" + name + "' queried at " + arg +
              " beyond its validity range [0, " + domain_max + "]") {}
};

/// The iteration horizon was too short to witness a required index.
class HorizonError : public Error {
 public:
  HorizonError(std::uint64_t failing_k, std::size_t horizon)
      : Error("horizon " + std::to_string(horizon) +
              " exhausted before reaching precision k = " +
              std::to_string(failing_k)),
        failing_k(failing_k), horizon(horizon) {}
  std::uint64_t failing_k;
  std::size_t horizon;
};

/// Regularity discovery could not certify the requested precision.
class GridTooCoarseError : public Error {
 public:
  GridTooCoarseError(std::uint64_t offending_k, const std::string& why)
      : Error("grid too coarse to certify regularity at k = " +
              std::to_string(offending_k) + ": " + why),
        offending_k(offending_k) {}
  std::uint64_t offending_k;
};

/// Non-finite values appeared inside an iteration engine.
class NumericError : public Error {
 public:
  explicit NumericError(const std::string& what) : Error(what) {}
};

/// Configuration file / CLI errors; message names the offending field.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(what) {}
};

}  // namespace fejer
