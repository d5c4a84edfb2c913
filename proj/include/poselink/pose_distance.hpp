// Copyright (c) 2026 poselink contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include <Eigen/Core>

#include "poselink/pose.hpp"

namespace poselink {

/// Flattened (x0,y0,x1,y1,...) pose coordinates.
using PoseVector = Eigen::Matrix<double, 2 * body25::kKeypointCount, 1>;

/// Indices detected in both poses, ascending.
std::vector<int> common_indices(const Pose& r, const Pose& s,
                                const MatchConfig& cfg);

/// Root-subtracted coordinates at the given indices; every other slot is
/// exactly zero. Translation invariant in the detected keypoints.
/// Throws RootUndetected when the neck is below the detection threshold.
PoseVector root_normalize(const Pose& r, const std::vector<int>& indices,
                          const MatchConfig& cfg);

/// Cosine pose distance between two poses over their common detected
/// keypoints, in [0,2]. Returns kMaxPoseDistance for degenerate pairs:
/// either root undetected, fewer than two common keypoints, or a zero-norm
/// normalized vector.
double pose_distance_p(const Pose& r, const Pose& s, const MatchConfig& cfg);

/// Horizontal mirror: x negated for detected keypoints and side-labeled part
/// indices swapped (a mirrored left wrist is a right wrist). Involution.
Pose mirror_pose(const Pose& s);

/// Mirror-invariant distance: min of p against the original and the mirrored
/// counterpart. Ties prefer the unflipped branch. With flipping disabled the
/// plain distance is returned.
PoseDistance pose_distance_q(const Pose& r, const Pose& s,
                             const MatchConfig& cfg);

}  // namespace poselink
