// Copyright (c) 2026 poselink contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "poselink/fast_match.hpp"
#include "poselink/pose.hpp"
#include "poselink/skeleton.hpp"
#include "poselink/transform.hpp"

namespace poselink {

/// Angle of the neck-to-mid-hip vector against the downward vertical,
/// in (-pi, pi]. nullopt when either torso endpoint is undetected.
std::optional<double> torso_angle(const Pose& pose, const MatchConfig& cfg);

/// True when the mutual torso angle is within cfg.torso_angle_max, or when
/// either angle is undefined (the test only applies to poses with a fully
/// detected torso). Under a flip hypothesis the database angle is negated.
bool torso_prefilter(const Pose& query_pose, const Pose& db_pose, bool flipped,
                     const MatchConfig& cfg);

struct PairVerification {
  SimilarityTransform transform;
  std::vector<int> inliers;  // query-side keypoint indices, ascending
};

/// Robust fit of one figure-to-figure transform. Every 2-element subset of
/// the common detected keypoints is tried as a hypothesis (both flip
/// options, keeping the better 2-point fit), inliers are counted within
/// inlier_dist_factor * relative_pose_size(query) of the projected query
/// keypoint, and the winning hypothesis is refit on all of its inliers.
/// nullopt unless the refit transform aligns at least min_inlier_count()
/// keypoints. Fully deterministic: ties break on smaller total inlier
/// residual, then lower hypothesis index.
std::optional<PairVerification> ransac_verify_pair(
    const Pose& query_pose, const Pose& db_pose,
    const CanonicalSkeleton& skeleton, const MatchConfig& cfg);

/// Inliers of `tf` on one pose pair: keypoints (matched across the flip's
/// left/right relabeling when tf.flipped) whose projected database position
/// lands within inlier_dist of the query keypoint. inlier_dist must already
/// include the query pose size factor.
int count_transform_inliers(const SimilarityTransform& tf,
                            const Pose& query_pose, const Pose& db_pose,
                            double inlier_dist, const MatchConfig& cfg);

struct ValidatedPair {
  int query_pose_id = 0;
  int db_pose_id = 0;
  int inlier_count = 0;
};

struct VerifiedLink {
  std::string query_image_id;
  std::string db_image_id;
  int score = 0;  // max over validated transforms of the cross-figure inlier sum
  SimilarityTransform best_transform;
  std::vector<ValidatedPair> validated_pairs;
};

/// Runs pair verification on every candidate, then applies each validated
/// transform globally to all validated pairs; the image score is the best
/// cross-figure inlier sum. nullopt when nothing validates.
std::optional<VerifiedLink> verify_image_pair(
    const ImageRecord& query, const ImageRecord& database,
    std::span<const PoseMatchCandidate> candidates,
    const CanonicalSkeleton& skeleton, const MatchConfig& cfg);

struct RankedHit {
  std::string image_id;
  double distance = 0.0;  // fast-match image distance
  std::optional<VerifiedLink> verification;
};

/// Final ordering: verified images first by descending score (ties by
/// ascending distance, then image_id), then unverified images in shortlist
/// order.
std::vector<RankedHit> rerank(
    std::span<const ShortlistEntry> shortlist,
    const std::vector<std::optional<VerifiedLink>>& verifications);

}  // namespace poselink
