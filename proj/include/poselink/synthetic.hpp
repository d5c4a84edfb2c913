// Copyright (c) 2026 poselink contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "poselink/eval.hpp"
#include "poselink/pose.hpp"

namespace poselink {

/// Parameters of the synthetic benchmark generator. The generator plants
/// labeled copies (one global transform per record) and composition
/// transfers (per-figure transforms, shared pose shapes), plus two kinds of
/// hard negatives that stress the ranking stages: scenes reusing a single
/// figure from elsewhere, and scenes reusing a whole figure set with a
/// scrambled layout.
struct GeneratorSpec {
  int scene_count = 200;       // base scenes, includes the decoy scenes below
  int copy_count = 50;
  int transfer_group_count = 6;    // groups of mutually linked transfers
  int transfers_per_group = 5;
  int pose_decoy_count = 30;    // scenes borrowing one figure verbatim
  int layout_decoy_count = 25;  // scenes borrowing a figure set, rearranged

  int min_figures = 1;
  int max_figures = 4;

  double noise_sigma = 0.02;    // keypoint noise as a fraction of figure size
  double dropout_rate = 0.10;   // per-keypoint drop probability on planted records
  double flip_fraction = 0.5;   // fraction of planted copies mirrored (exact count)
  double scale_min = 0.5;
  double scale_max = 2.0;
  double max_translation = 200.0;  // pixels, per axis

  double canvas_width = 1000.0;
  double canvas_height = 800.0;

  /// Throws std::invalid_argument on negative rates or impossible counts.
  void validate() const;
};

struct SyntheticBenchmark {
  std::vector<ImageRecord> records;
  GroundTruth ground_truth;
};

/// Deterministic under (spec, seed): identical outputs for identical inputs.
SyntheticBenchmark generate_synthetic_benchmark(const GeneratorSpec& spec,
                                                std::uint64_t seed);

}  // namespace poselink
