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

#include <cstdint>
#include <random>

namespace phldpc {

using Rng = std::mt19937_64;

/// splitmix64 finalizer; used to derive independent stream seeds.
constexpr uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seed for stream `index` under `master`, optionally tagged by purpose so that
/// the code, channel and simulator streams of one trajectory never coincide.
constexpr uint64_t derive_seed(uint64_t master, uint64_t index, uint64_t tag = 0) {
    return mix64(mix64(master ^ mix64(tag)) + index);
}

namespace stream {
inline constexpr uint64_t code = 0xC0DE;
inline constexpr uint64_t channel = 0xC4A7;
inline constexpr uint64_t sim = 0x51A7;
}  // namespace stream

}  // namespace phldpc
