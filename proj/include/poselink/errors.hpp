// Copyright (c) 2026 poselink contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>

namespace poselink {

/// Input file that cannot be parsed: wrong arity, non-numeric values,
/// missing keys. The message carries the path and the offending location.
class MalformedFile : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class DuplicateImageId : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Index file written by an incompatible format version.
class VersionMismatch : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Index was built under a different eligibility configuration.
class FingerprintMismatch : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A ground-truth query has no ranking (or no index record).
class MissingQuery : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Root keypoint required for normalization is not detected.
class RootUndetected : public std::domain_error {
  using std::domain_error::domain_error;
};

}  // namespace poselink
