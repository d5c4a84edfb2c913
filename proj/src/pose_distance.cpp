// Copyright (c) 2026 poselink contributors
// SPDX-License-Identifier: Apache-2.0

#include "poselink/pose_distance.hpp"

#include <cmath>

#include "poselink/errors.hpp"

namespace poselink {

std::vector<int> common_indices(const Pose& r, const Pose& s,
                                const MatchConfig& cfg) {
  std::vector<int> indices;
  indices.reserve(body25::kKeypointCount);
  for (int i = 0; i < body25::kKeypointCount; ++i) {
    if (is_detected(r.keypoints[i], cfg) && is_detected(s.keypoints[i], cfg))
      indices.push_back(i);
  }
  return indices;
}

PoseVector root_normalize(const Pose& r, const std::vector<int>& indices,
                          const MatchConfig& cfg) {
  const Keypoint& root = r.keypoints[body25::kNeck];
  if (!is_detected(root, cfg))
    throw RootUndetected("root_normalize: neck keypoint not detected");
  PoseVector out = PoseVector::Zero();
  for (int i : indices) {
    out.segment<2>(2 * i) = r.keypoints[i].position - root.position;
  }
  return out;
}

double pose_distance_p(const Pose& r, const Pose& s, const MatchConfig& cfg) {
  if (!is_detected(r.keypoints[body25::kNeck], cfg) ||
      !is_detected(s.keypoints[body25::kNeck], cfg))
    return kMaxPoseDistance;
  const std::vector<int> indices = common_indices(r, s, cfg);
  if (indices.size() < 2) return kMaxPoseDistance;
  const PoseVector rn = root_normalize(r, indices, cfg);
  const PoseVector sn = root_normalize(s, indices, cfg);
  const double norm_r = rn.norm();
  const double norm_s = sn.norm();
  if (norm_r == 0.0 || norm_s == 0.0) return kMaxPoseDistance;
  return 1.0 - rn.dot(sn) / (norm_r * norm_s);
}

Pose mirror_pose(const Pose& s) {
  const auto& mirror = body25::mirror_index();
  Pose out;
  out.pose_id = s.pose_id;
  for (int i = 0; i < body25::kKeypointCount; ++i) {
    const Keypoint& kp = s.keypoints[i];
    Keypoint& dst = out.keypoints[mirror[i]];
    dst.confidence = kp.confidence;
    // Undetected keypoints keep the (0,0) convention of the input format.
    if (kp.confidence > 0.0)
      dst.position = Eigen::Vector2d(-kp.position.x(), kp.position.y());
    else
      dst.position = kp.position;
  }
  return out;
}

PoseDistance pose_distance_q(const Pose& r, const Pose& s,
                             const MatchConfig& cfg) {
  const double plain = pose_distance_p(r, s, cfg);
  if (!cfg.flip_enabled) return {plain, false};
  const double mirrored = pose_distance_p(r, mirror_pose(s), cfg);
  if (mirrored < plain) return {mirrored, true};
  return {plain, false};
}

}  // namespace poselink
