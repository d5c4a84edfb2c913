// Copyright (c) 2026 poselink contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "poselink/errors.hpp"
#include "poselink/pose.hpp"

namespace poselink {

inline constexpr int kIndexFormatVersion = 1;

struct ManifestEntry {
  std::string image_id;
  std::string keypoints_path;
  std::string image_path;  // optional, only used by reports
};

/// The immutable searchable collection. Record order is manifest order.
struct PoseIndex {
  int format_version = kIndexFormatVersion;
  double detection_threshold = 0.0;
  std::string config_fingerprint;
  std::vector<ImageRecord> records;

  const ImageRecord* find(std::string_view image_id) const;

  bool operator==(const PoseIndex& o) const {
    return format_version == o.format_version &&
           detection_threshold == o.detection_threshold &&
           config_fingerprint == o.config_fingerprint && records == o.records;
  }
};

/// Parses a detector keypoints file: top-level "people" array, each person
/// carrying "pose_keypoints_2d" with exactly 75 numbers (x,y,confidence per
/// part). Zero-confidence entries are undetected keypoints. An empty people
/// array is valid and yields no poses. Throws MalformedFile otherwise.
std::vector<Pose> parse_keypoints_file(const std::string& path);

/// Writes poses back in the detector's format (used by the synthetic data
/// generator and tests).
void write_keypoints_file(const std::string& path,
                          const std::vector<Pose>& poses);

/// Manifest: UTF-8, one JSON object per line:
///   {"image_id": str, "keypoints_path": str, "image_path": str?}
/// Relative keypoint paths are resolved against the manifest's directory.
std::vector<ManifestEntry> read_manifest(const std::string& path);

/// Hash of the MatchConfig fields that decide pose eligibility.
std::string config_fingerprint(const MatchConfig& cfg);

/// Deterministic assembly of manifest entries into an index. Poses without a
/// detected root are kept (they can never match) so reports can surface
/// them. Throws DuplicateImageId or propagates parse errors with context.
PoseIndex build_index(const std::vector<ManifestEntry>& manifest,
                      const MatchConfig& cfg, int workers = 0);

/// Versioned JSON-lines persistence; load(save(x)) == x including flags and
/// fingerprint. Loading rejects foreign versions (VersionMismatch) and
/// truncated or corrupt files (MalformedFile with the failing position);
/// no partial index is ever returned.
void save_index(const PoseIndex& index, const std::string& path);
PoseIndex load_index(const std::string& path);

/// As load_index, additionally rejecting indexes whose eligibility
/// fingerprint differs from cfg's (FingerprintMismatch).
PoseIndex load_index(const std::string& path, const MatchConfig& cfg);

}  // namespace poselink
