#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lrd {

enum class Errc {
  TooShort,
  NonFinite,
  LabelMismatch,
  HorizonTooLarge,
  HorizonTooSmall,
  DegenerateBox,
  InsufficientBoxes,
  ZeroVolatility,
  ZeroMeanRisk,
  ZeroKernelMass,
  DegenerateNormalization,
  TooFewUnits,
  EstimatorFailure,
  SpecInvalid,
  ParseError,
  ConfigError,
  InvalidArgument,
  IoError,
};

std::string_view errc_name(Errc code) noexcept;

// Process exit code for a failure: 1 usage/parse, 2 numerical degeneracy, 3 I/O.
int exit_code(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, std::optional<std::size_t> index = std::nullopt)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code), index_(index) {}

  Errc code() const noexcept { return code_; }

  // Offending sample index, line number, or replicate index, depending on the code.
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  Errc code_;
  std::optional<std::size_t> index_;
};

}  // namespace lrd
