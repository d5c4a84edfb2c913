// Copyright (c) 2026 poselink contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <span>

#include <Eigen/Core>

namespace poselink {

/// Isotropic scale + translation + optional horizontal flip, mapping
/// database-image coordinates to query-image coordinates:
///   x_q = scale * flip(x_d) + translation
/// where flip negates the x coordinate when `flipped` is set.
struct SimilarityTransform {
  double scale = 1.0;
  Eigen::Vector2d translation{0.0, 0.0};
  bool flipped = false;
};

inline Eigen::Vector2d apply_point(const SimilarityTransform& tf,
                                   const Eigen::Vector2d& db_point) {
  const double x = tf.flipped ? -db_point.x() : db_point.x();
  return {tf.scale * x + tf.translation.x(),
          tf.scale * db_point.y() + tf.translation.y()};
}

struct PointCorrespondence {
  Eigen::Vector2d query;
  Eigen::Vector2d database;
};

/// Least-squares fit of scale and translation over the correspondences,
/// with the database x coordinates pre-negated when `flipped` is set:
///   s = sum<d_i - d_mean, q_i - q_mean> / sum||d_i - d_mean||^2
///   t = q_mean - s * d_mean
/// Returns nullopt for degenerate samples: coincident database points or a
/// non-positive scale (the transform family has no rotation to absorb it).
std::optional<SimilarityTransform> estimate_transform_ls(
    std::span<const PointCorrespondence> correspondences, bool flipped);

/// Sum of squared residuals ||T(d_i) - q_i||^2.
double transform_residual_sq(const SimilarityTransform& tf,
                             std::span<const PointCorrespondence> corr);

}  // namespace poselink
