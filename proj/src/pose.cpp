// Copyright (c) 2026 poselink contributors
// SPDX-License-Identifier: Apache-2.0

#include "poselink/pose.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "poselink/version.hpp"

#ifndef POSELINK_VERSION
#define POSELINK_VERSION "0.0.0"
#endif

namespace poselink {

const char* tool_version() { return POSELINK_VERSION; }

void MatchConfig::validate() const {
  auto fail = [](const std::string& what) {
    throw std::invalid_argument("MatchConfig: " + what);
  };
  if (!(detection_threshold >= 0.0 && detection_threshold < 1.0))
    fail("detection_threshold must be in [0,1)");
  if (!(t > 0.0)) fail("t must be positive");
  if (!(pose_dist_max > 0.0)) fail("pose_dist_max must be positive");
  if (!(torso_angle_max > 0.0)) fail("torso_angle_max must be positive");
  if (shortlist_len < 1) fail("shortlist_len must be at least 1");
  if (!(min_inlier_frac > 0.0 && min_inlier_frac <= 1.0))
    fail("min_inlier_frac must be in (0,1]");
  if (!(inlier_dist_factor > 0.0)) fail("inlier_dist_factor must be positive");
}

int MatchConfig::min_inlier_count() const {
  return static_cast<int>(
      std::ceil(min_inlier_frac * body25::kKeypointCount));
}

}  // namespace poselink
