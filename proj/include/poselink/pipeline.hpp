// Copyright (c) 2026 poselink contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "poselink/fast_match.hpp"
#include "poselink/ingest.hpp"
#include "poselink/skeleton.hpp"
#include "poselink/verify.hpp"

namespace poselink {

struct QueryOptions {
  ImageMetric metric = ImageMetric::kT;
  bool verify = true;
  int workers = 0;  // 0 = runtime default
};

struct QueryResult {
  std::string query_id;
  int pose_count = 0;
  std::vector<RankedHit> hits;
};

/// Full per-query pipeline: scan, shortlist, verification, rerank. With
/// verification disabled the hits are the shortlist in fast-match order.
QueryResult run_query(const ImageRecord& query, const PoseIndex& index,
                      const CanonicalSkeleton& skeleton,
                      const MatchConfig& cfg, const QueryOptions& options);

/// Queries every index record against the rest. Results are in index order
/// and identical for any worker count.
std::vector<QueryResult> link_all(const PoseIndex& index,
                                  const CanonicalSkeleton& skeleton,
                                  const MatchConfig& cfg,
                                  const QueryOptions& options);

}  // namespace poselink
