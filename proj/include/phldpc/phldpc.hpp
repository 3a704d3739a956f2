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

#pragma once

// Umbrella header for the core library (the SLH oracle needs Eigen and is
// included separately through phldpc/slh_fragments.hpp).

#include "phldpc/channel.hpp"
#include "phldpc/code.hpp"
#include "phldpc/errors.hpp"
#include "phldpc/flipdec.hpp"
#include "phldpc/harness.hpp"
#include "phldpc/photonic_ctmc.hpp"
#include "phldpc/rng.hpp"
#include "phldpc/trajectory.hpp"
