#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace resourceforge {

enum class ErrorCode {
  NotHermitian,
  NotUnitTrace,
  NotPSD,
  NotUnitary,
  NonFinite,
  DimensionMismatch,
  DimensionTooLarge,
  EmptyKeepSet,
  IndexOutOfRange,
  RankOutOfRange,
  NotBipartite,
  ParamCountMismatch,
  NotAQubit,
  NotAQubitOnA,
  UnequalSums,
  BothZero,
  NonCommuting,
  IllegalStepForMode,
  InvalidArgument,
};

constexpr std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotUnitTrace: return "NotUnitTrace";
    case ErrorCode::NotPSD: return "NotPSD";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::EmptyKeepSet: return "EmptyKeepSet";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::RankOutOfRange: return "RankOutOfRange";
    case ErrorCode::NotBipartite: return "NotBipartite";
    case ErrorCode::ParamCountMismatch: return "ParamCountMismatch";
    case ErrorCode::NotAQubit: return "NotAQubit";
    case ErrorCode::NotAQubitOnA: return "NotAQubitOnA";
    case ErrorCode::UnequalSums: return "UnequalSums";
    case ErrorCode::BothZero: return "BothZero";
    case ErrorCode::NonCommuting: return "NonCommuting";
    case ErrorCode::IllegalStepForMode: return "IllegalStepForMode";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Domain error raised by every module. what() is "<Name>: <detail>".
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_name(code)) + ": " + detail),
        code_(code),
        detail_(detail) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace resourceforge
