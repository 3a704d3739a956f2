// Copyright 2026 The phldpc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Small hand-built graphs shared by the unit and acceptance tests.

#pragma once

#include <vector>

#include "phldpc/code.hpp"

namespace phldpc {

/// (n=8, l=3, k=4) code; check 0 is x0 + x2 + x3 + x5 = 0.
inline TannerGraph fixture_8_3_4() {
    return TannerGraph::from_checks(8, 3, 4,
                                    {{0, 2, 3, 5}, {1, 4, 6, 7}, {0, 1, 2, 4}, {3, 5, 6, 7}, {0, 1, 5, 6}, {2, 3, 4, 7}});
}

/// One variable sitting alone in l single-variable checks.
inline TannerGraph isolated_variable(size_t l) {
    return TannerGraph::from_checks(1, l, 1, std::vector<std::vector<uint32_t>>(l, {0u}));
}

}  // namespace phldpc
