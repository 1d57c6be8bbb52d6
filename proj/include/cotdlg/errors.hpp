// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace cotdlg {

/// Invalid sizes or option combinations supplied at construction time.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A token id or frame used outside the partition it belongs to.
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Missing or inconsistent arguments to an operation.
struct ArgumentError : std::runtime_error {
  explicit ArgumentError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed serialized data (checkpoints, interleave patterns, manifests).
struct FormatError : std::runtime_error {
  explicit FormatError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Sequence does not fit the model context.
struct LengthError : std::runtime_error {
  explicit LengthError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Generation could not satisfy a required invariant within bounded retries.
struct GenerationError : std::runtime_error {
  explicit GenerationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Training diverged or a numeric quantity left its valid range.
struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Not enough data points for a statistical test.
struct InsufficientDataError : std::runtime_error {
  explicit InsufficientDataError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace cotdlg
