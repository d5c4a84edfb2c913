// Copyright (c) 2026 poselink contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace poselink {

const char* tool_version();

}  // namespace poselink
