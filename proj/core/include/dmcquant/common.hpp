#pragma once

#include <stdexcept>
#include <string>

namespace dmcquant {

/// Precondition or input-data violation (bad channel, bad indices, bad config).
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// A computation could not be carried out (size cap exceeded, invalid bracket, ...).
class ComputeError : public std::runtime_error {
 public:
  explicit ComputeError(const std::string& what) : std::runtime_error(what) {}
};

// Tolerances shared across modules.
inline constexpr double kColumnSumTol = 1e-9;   // |sum_i P(i|j) - 1| allowed before rejecting
inline constexpr double kPriorSumTol = 1e-12;   // |p0 + p1 - 1| allowed
inline constexpr double kDefaultMergeTol = 1e-9;  // relative likelihood-ratio gap that merges

}  // namespace dmcquant
