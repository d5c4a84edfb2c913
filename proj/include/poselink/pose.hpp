// Copyright (c) 2026 poselink contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "poselink/body25.hpp"

namespace poselink {

struct Keypoint {
  Eigen::Vector2d position{0.0, 0.0};  // pixels, +x right, +y down
  double confidence = 0.0;             // in [0,1]; 0 = not detected

  bool operator==(const Keypoint& o) const {
    return position == o.position && confidence == o.confidence;
  }
};

/// One detected figure: a fixed-length tuple of keypoints, index-aligned to
/// the detector's part map.
struct Pose {
  std::array<Keypoint, body25::kKeypointCount> keypoints{};
  int pose_id = 0;

  bool operator==(const Pose& o) const {
    return keypoints == o.keypoints && pose_id == o.pose_id;
  }
};

/// All matching and verification thresholds. Defaults follow the reference
/// parameterization; see README for the meaning of each knob.
struct MatchConfig {
  double detection_threshold = 0.0;  // keypoint is detected iff confidence > this
  double t = 0.05;                   // per-pose penalty cap in the summed image distance
  double pose_dist_max = 0.1;        // pose pairs above this never reach verification
  double torso_angle_max = 0.4;      // radians; torso prefilter cutoff
  int shortlist_len = 50;            // images forwarded to verification
  double min_inlier_frac = 0.25;     // fraction of keypoints a validated pair must align
  double inlier_dist_factor = 0.25;  // inlier radius as a fraction of query pose size
  bool flip_enabled = true;

  /// Throws std::invalid_argument on out-of-range values.
  void validate() const;

  /// ceil(min_inlier_frac * K); 7 with the defaults.
  int min_inlier_count() const;
};

inline bool is_detected(const Keypoint& kp, const MatchConfig& cfg) {
  return kp.confidence > cfg.detection_threshold;
}

/// A pose takes part in fast matching only if its root (neck) is detected.
inline bool is_eligible(const Pose& pose, const MatchConfig& cfg) {
  return is_detected(pose.keypoints[body25::kNeck], cfg);
}

inline constexpr double kMaxPoseDistance = 2.0;

/// Result of the mirror-invariant pose distance: the value and which branch
/// (original or mirrored) achieved it.
struct PoseDistance {
  double value = kMaxPoseDistance;
  bool flipped = false;
};

struct ImageRecord {
  std::string image_id;
  std::string source_path;  // provenance, typically the keypoints file
  std::vector<Pose> poses;  // may be empty (figure-free artwork)

  bool operator==(const ImageRecord& o) const {
    return image_id == o.image_id && source_path == o.source_path &&
           poses == o.poses;
  }
};

}  // namespace poselink
