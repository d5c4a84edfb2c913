// Copyright (c) 2026 poselink contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "poselink/pose.hpp"

namespace poselink {

struct Bone {
  int a = 0;
  int b = 0;
  double length = 0.0;  // canonical length, neck-to-mid-hip units
};

/// Reference bone lengths of the 25-part body model, normalized so the
/// torso bone (neck to mid-hip) has length 1. Only ratios against these
/// lengths matter; the table is user-replaceable via a data file.
struct CanonicalSkeleton {
  std::vector<Bone> bones;

  /// Throws std::invalid_argument on out-of-range part indices, duplicate
  /// or self-connecting bones, or non-positive lengths.
  void validate() const;
};

/// Built-in table derived from body25::canonical_points().
const CanonicalSkeleton& default_skeleton();

/// Plain text table, one `bone A B LENGTH` line per bone. See
/// data/body25_skeleton.txt for the shipped copy of the default table.
CanonicalSkeleton load_skeleton(const std::string& path);
void save_skeleton(const CanonicalSkeleton& skeleton, const std::string& path);

/// Median ratio of observed bone length to canonical bone length over bones
/// with both endpoints detected; even counts take the lower median. nullopt
/// when no bone is fully detected.
std::optional<double> relative_pose_size(const Pose& pose,
                                         const CanonicalSkeleton& skeleton,
                                         const MatchConfig& cfg);

}  // namespace poselink
