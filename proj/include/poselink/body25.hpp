// Copyright (c) 2026 poselink contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <utility>

#include <Eigen/Core>

namespace poselink::body25 {

inline constexpr int kKeypointCount = 25;
inline constexpr int kBoneCount = 24;

// Root keypoint used for translation normalization.
inline constexpr int kNeck = 1;
inline constexpr int kMidHip = 8;

/// Part names in detector output order.
const std::array<const char*, kKeypointCount>& part_names();

/// Index of the horizontally mirrored counterpart of each part. Left and
/// right sided parts swap; center-line parts (nose, neck, mid-hip) map to
/// themselves. The map is an involution.
const std::array<int, kKeypointCount>& mirror_index();

/// Bone endpoint pairs, in the detector's render order.
const std::array<std::pair<int, int>, kBoneCount>& bones();

/// Upright reference figure: neck at the origin, neck-to-mid-hip distance 1,
/// +y pointing down (image convention), subject's right side at negative x.
const std::array<Eigen::Vector2d, kKeypointCount>& canonical_points();

}  // namespace poselink::body25
