#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace otg {

enum class ErrorKind {
  ParallelOrCoincident,
  Degenerate,
  BadLabel,
  SizeMismatch,
  NotPrime,
  NoPrimeInRange,
  NTooSmall,
  BoundViolation,
  FrameDegenerate,
  RegionDead,
  ExhaustedResampling,
  Identical,
  InvalidParams,
  Parse,
  Usage,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::ParallelOrCoincident: return "ParallelOrCoincident";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::BadLabel: return "BadLabel";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::NoPrimeInRange: return "NoPrimeInRange";
    case ErrorKind::NTooSmall: return "NTooSmall";
    case ErrorKind::BoundViolation: return "BoundViolation";
    case ErrorKind::FrameDegenerate: return "FrameDegenerate";
    case ErrorKind::RegionDead: return "RegionDead";
    case ErrorKind::ExhaustedResampling: return "ExhaustedResampling";
    case ErrorKind::Identical: return "Identical";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Usage: return "Usage";
  }
  return "Unknown";
}

/// Base exception for every failure the library reports. The kind drives the
/// CLI exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// 1-based labels (i, j, k), i < j < k.
using Triple = std::array<std::size_t, 3>;

/// Collinear triple found in a set that must be non-degenerate.
/// `set_index` is meaningful only when the set was part of a batch.
class DegenerateError : public Error {
 public:
  DegenerateError(ErrorKind kind, Triple witness, std::size_t set_index = 0)
      : Error(kind, "collinear triple (" + std::to_string(witness[0]) + "," +
                        std::to_string(witness[1]) + "," + std::to_string(witness[2]) + ")"),
        witness_(witness),
        set_index_(set_index) {}

  const Triple& witness() const noexcept { return witness_; }
  std::size_t set_index() const noexcept { return set_index_; }

 private:
  Triple witness_;
  std::size_t set_index_;
};

class RegionDeadError : public Error {
 public:
  explicit RegionDeadError(std::size_t step)
      : Error(ErrorKind::RegionDead, "chosen region is dead at step " + std::to_string(step)),
        step_(step) {}

  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

}  // namespace otg
