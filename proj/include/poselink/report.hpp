// Copyright (c) 2026 poselink contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

namespace poselink {

/// Renders a results JSON file (cmd: query / link-all schema) into a static
/// self-contained HTML gallery under out_dir, with pose skeletons drawn as
/// inline SVG. Image files from the manifest are referenced when present;
/// missing ones degrade to skeleton-only panels with an inline note. Output
/// bytes are a pure function of the inputs.
void write_html_report(const std::string& results_json_path,
                       const std::string& manifest_path,
                       const std::string& out_dir);

}  // namespace poselink
