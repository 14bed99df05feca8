#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dicke {

enum class ErrorCode {
  invalid_parameters,
  imaginary_spectrum,
  singular_mean_field,
  negative_temperature,
  non_normalizable,
  non_symplectic_matrix,
  unphysical_covariance,
  complex_nu_minus,
  basis_mismatch,
  negative_dwell,
  open_protocol,
  non_normal_phase,
  cutoff_too_small,
  method_mismatch,
  config,
  io,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so the
/// front end can map it onto an exit status or a CSV status column.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_parameters: return "InvalidParameters";
    case ErrorCode::imaginary_spectrum: return "ImaginarySpectrum";
    case ErrorCode::singular_mean_field: return "SingularMeanField";
    case ErrorCode::negative_temperature: return "NegativeTemperature";
    case ErrorCode::non_normalizable: return "NonNormalizable";
    case ErrorCode::non_symplectic_matrix: return "NonSymplecticMatrix";
    case ErrorCode::unphysical_covariance: return "UnphysicalCovariance";
    case ErrorCode::complex_nu_minus: return "ComplexNuMinus";
    case ErrorCode::basis_mismatch: return "BasisMismatch";
    case ErrorCode::negative_dwell: return "NegativeDwell";
    case ErrorCode::open_protocol: return "OpenProtocol";
    case ErrorCode::non_normal_phase: return "NonNormalPhase";
    case ErrorCode::cutoff_too_small: return "CutoffTooSmall";
    case ErrorCode::method_mismatch: return "MethodMismatch";
    case ErrorCode::config: return "ConfigError";
    case ErrorCode::io: return "IOError";
  }
  return "Unknown";
}

}  // namespace dicke
