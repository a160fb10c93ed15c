#include "lrd/error.hpp"

namespace lrd {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::TooShort: return "TooShort";
    case Errc::NonFinite: return "NonFinite";
    case Errc::LabelMismatch: return "LabelMismatch";
    case Errc::HorizonTooLarge: return "HorizonTooLarge";
    case Errc::HorizonTooSmall: return "HorizonTooSmall";
    case Errc::DegenerateBox: return "DegenerateBox";
    case Errc::InsufficientBoxes: return "InsufficientBoxes";
    case Errc::ZeroVolatility: return "ZeroVolatility";
    case Errc::ZeroMeanRisk: return "ZeroMeanRisk";
    case Errc::ZeroKernelMass: return "ZeroKernelMass";
    case Errc::DegenerateNormalization: return "DegenerateNormalization";
    case Errc::TooFewUnits: return "TooFewUnits";
    case Errc::EstimatorFailure: return "EstimatorFailure";
    case Errc::SpecInvalid: return "SpecInvalid";
    case Errc::ParseError: return "ParseError";
    case Errc::ConfigError: return "ConfigError";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::IoError: return "IoError";
  }
  return "Unknown";
}

int exit_code(Errc code) noexcept {
  switch (code) {
    case Errc::DegenerateBox:
    case Errc::ZeroVolatility:
    case Errc::ZeroMeanRisk:
    case Errc::ZeroKernelMass:
    case Errc::DegenerateNormalization:
    case Errc::TooFewUnits:
    case Errc::EstimatorFailure:
      return 2;
    case Errc::IoError:
      return 3;
    default:
      return 1;
  }
}

}  // namespace lrd
