// Copyright (c) 2026 poselink contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "poselink/errors.hpp"

namespace poselink {

enum class LinkLabel { kCopy, kCompositionTransfer };

const char* to_string(LinkLabel label);

/// Undirected labeled image pair; canonically stored with a < b.
struct GroundTruthLink {
  std::string a;
  std::string b;
  LinkLabel label = LinkLabel::kCopy;
};

/// Evaluation scenario: which label counts as positive. The other label is
/// ignored (its images are removed from the ranking, not counted negative).
enum class Scenario { kAllPositive, kCopyPositive, kTransferPositive };

const char* to_string(Scenario scenario);

class GroundTruth {
 public:
  /// Canonicalizes each link (a < b). Throws MalformedFile on self-links or
  /// on the same pair carrying two different labels; exact duplicates are
  /// collapsed.
  explicit GroundTruth(std::vector<GroundTruthLink> links = {});

  const std::vector<GroundTruthLink>& links() const { return links_; }

  /// Every image id that appears in at least one link, ascending.
  std::vector<std::string> queries() const;

  std::set<std::string> positives(const std::string& query_id,
                                  Scenario scenario) const;
  std::set<std::string> ignored(const std::string& query_id,
                                Scenario scenario) const;

 private:
  std::vector<GroundTruthLink> links_;
  std::map<std::string, std::vector<const GroundTruthLink*>> by_image_;
};

/// One JSON object per line: {"a": id, "b": id, "label": "copy" |
/// "composition_transfer"}.
GroundTruth load_ground_truth(const std::string& path);
void save_ground_truth(const GroundTruth& gt, const std::string& path);

/// Denominator convention for precision at k when ignored items leave fewer
/// than k candidates. kFixedK matches the usual mP@k definition.
enum class PrecisionDenominator { kFixedK, kEffective };

/// Fraction of the top k ranked items (after removing ignored ids) that are
/// positive. The ranking must not contain the query itself.
double precision_at_k(std::span<const std::string> ranking,
                      const std::set<std::string>& positives,
                      const std::set<std::string>& ignored, int k,
                      PrecisionDenominator denom = PrecisionDenominator::kFixedK);

struct PerQueryPrecision {
  std::string query_id;
  int positive_count = 0;
  bool contributing = false;  // queries without positives are excluded
  std::map<int, double> precision_at;
};

struct EvalReport {
  Scenario scenario = Scenario::kAllPositive;
  std::vector<int> ks;
  std::map<int, double> mp_at;
  std::vector<PerQueryPrecision> per_query;
  int contributing_query_count = 0;
};

inline const std::vector<int>& default_eval_ranks() {
  static const std::vector<int> ks{1, 2, 5, 10, 50};
  return ks;
}

/// Mean precision at each rank over all ground-truth queries that have at
/// least one positive under the scenario. Throws MissingQuery when a
/// ground-truth image has no ranking.
EvalReport mean_precision(
    const std::map<std::string, std::vector<std::string>>& rankings,
    const GroundTruth& gt, Scenario scenario, std::span<const int> ks,
    PrecisionDenominator denom = PrecisionDenominator::kFixedK);

/// Report serialization used by the CLI: one JSON document for a set of
/// named reports, and a flat CSV (one row per method/scenario, one column
/// per rank).
std::string eval_reports_to_json(
    const std::vector<std::pair<std::string, EvalReport>>& reports,
    bool include_per_query = true);
std::string eval_reports_to_csv(
    const std::vector<std::pair<std::string, EvalReport>>& reports);

}  // namespace poselink
