// Copyright (c) 2026 poselink contributors
// SPDX-License-Identifier: Apache-2.0

#include "poselink/body25.hpp"

namespace poselink::body25 {

const std::array<const char*, kKeypointCount>& part_names() {
  static const std::array<const char*, kKeypointCount> names = {
      "Nose",      "Neck",      "RShoulder", "RElbow",    "RWrist",
      "LShoulder", "LElbow",    "LWrist",    "MidHip",    "RHip",
      "RKnee",     "RAnkle",    "LHip",      "LKnee",     "LAnkle",
      "REye",      "LEye",      "REar",      "LEar",      "LBigToe",
      "LSmallToe", "LHeel",     "RBigToe",   "RSmallToe", "RHeel"};
  return names;
}

const std::array<int, kKeypointCount>& mirror_index() {
  static const std::array<int, kKeypointCount> map = {
      0,  1,  5,  6,  7,  2,  3,  4,  8,  12, 13, 14, 9,
      10, 11, 16, 15, 18, 17, 22, 23, 24, 19, 20, 21};
  return map;
}

const std::array<std::pair<int, int>, kBoneCount>& bones() {
  static const std::array<std::pair<int, int>, kBoneCount> pairs = {{
      {1, 8},   {1, 2},   {1, 5},   {2, 3},   {3, 4},   {5, 6},
      {6, 7},   {8, 9},   {9, 10},  {10, 11}, {8, 12},  {12, 13},
      {13, 14}, {1, 0},   {0, 15},  {15, 17}, {0, 16},  {16, 18},
      {14, 19}, {19, 20}, {14, 21}, {11, 22}, {22, 23}, {11, 24},
  }};
  return pairs;
}

const std::array<Eigen::Vector2d, kKeypointCount>& canonical_points() {
  static const std::array<Eigen::Vector2d, kKeypointCount> points = {{
      {0.00, -0.33},  // Nose
      {0.00, 0.00},   // Neck
      {-0.37, 0.03},  // RShoulder
      {-0.45, 0.55},  // RElbow
      {-0.49, 1.02},  // RWrist
      {0.37, 0.03},   // LShoulder
      {0.45, 0.55},   // LElbow
      {0.49, 1.02},   // LWrist
      {0.00, 1.00},   // MidHip
      {-0.18, 1.02},  // RHip
      {-0.20, 1.77},  // RKnee
      {-0.21, 2.50},  // RAnkle
      {0.18, 1.02},   // LHip
      {0.20, 1.77},   // LKnee
      {0.21, 2.50},   // LAnkle
      {-0.07, -0.40}, // REye
      {0.07, -0.40},  // LEye
      {-0.14, -0.37}, // REar
      {0.14, -0.37},  // LEar
      {0.23, 2.72},   // LBigToe
      {0.31, 2.70},   // LSmallToe
      {0.19, 2.58},   // LHeel
      {-0.23, 2.72},  // RBigToe
      {-0.31, 2.70},  // RSmallToe
      {-0.19, 2.58},  // RHeel
  }};
  return points;
}

}  // namespace poselink::body25
