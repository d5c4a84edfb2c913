// Copyright (c) 2026 poselink contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "poselink/ingest.hpp"
#include "poselink/pose.hpp"

namespace poselink {

enum class ImageMetric {
  kMin,  // best single pose pair
  kT,    // clipped sum over query poses (approximate bipartite matching)
};

/// A tentative pose correspondence forwarded to verification.
struct PoseMatchCandidate {
  int query_pose_id = 0;
  int db_pose_id = 0;
  double q_value = kMaxPoseDistance;
  bool flipped = false;
};

struct ShortlistEntry {
  std::string image_id;
  double image_distance = 0.0;
  /// All cross pose pairs with q <= pose_dist_max, ordered by
  /// (query_pose_id, db_pose_id). May be empty; such entries rank by
  /// distance but have nothing to verify.
  std::vector<PoseMatchCandidate> candidates;
};

/// Minimum mirror-invariant distance over all cross pose pairs. Symmetric.
/// +inf when either image has no eligible pose.
double image_distance_min(const ImageRecord& a, const ImageRecord& b,
                          const MatchConfig& cfg);

/// sum over query poses r of min(t, min over database poses s of q(r,s)).
/// Asymmetric: the first argument is the query. +inf when the query has no
/// eligible pose; an empty database image costs t per query pose.
double image_distance_t(const ImageRecord& query, const ImageRecord& database,
                        const MatchConfig& cfg);

/// Exhaustive scan of the index: every database image ranked ascending by
/// the chosen metric (ties by image_id), truncated to cfg.shortlist_len.
/// The query itself (by image_id) and images with infinite distance are
/// excluded. Deterministic for any worker count.
std::vector<ShortlistEntry> scan_and_shortlist(const ImageRecord& query,
                                               const PoseIndex& index,
                                               const MatchConfig& cfg,
                                               ImageMetric metric,
                                               int workers = 0);

}  // namespace poselink
