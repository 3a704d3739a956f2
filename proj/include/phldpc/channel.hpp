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

#include <algorithm>
#include <numeric>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "phldpc/code.hpp"
#include "phldpc/errors.hpp"
#include "phldpc/rng.hpp"

namespace phldpc {

/// Positions flipped by the channel; sorted, distinct, each < n.
struct ErrorPattern {
    std::vector<uint32_t> flipped_indices;

    size_t weight() const { return flipped_indices.size(); }
    bool operator==(const ErrorPattern &) const = default;
};

struct Corrupted {
    Assignment word;
    ErrorPattern pattern;
};

/// XOR `pattern` into `codeword`. Applying the same pattern twice is the identity.
inline Assignment apply_pattern(std::span<const Bit> codeword, const ErrorPattern &pattern) {
    Assignment out(codeword.begin(), codeword.end());
    for (uint32_t i : pattern.flipped_indices) {
        detail::require(i < out.size(), "apply_pattern: index out of range");
        out[i] ^= 1;
    }
    return out;
}

/// Flip exactly `t` distinct positions chosen uniformly at random.
inline Corrupted corrupt_fixed_count(std::span<const Bit> codeword, size_t t, uint64_t seed) {
    const size_t n = codeword.size();
    detail::require(t <= n, "corrupt_fixed_count: t exceeds block length");
    Rng rng(seed);
    std::vector<uint32_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0u);
    // Partial Fisher-Yates: the first t entries become a uniform t-subset.
    for (size_t i = 0; i < t; ++i) {
        std::uniform_int_distribution<size_t> pick(i, n - 1);
        std::swap(idx[i], idx[pick(rng)]);
    }
    ErrorPattern pattern{{idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(t)}};
    std::sort(pattern.flipped_indices.begin(), pattern.flipped_indices.end());
    auto word = apply_pattern(codeword, pattern);
    return {std::move(word), std::move(pattern)};
}

/// Binary symmetric channel: each bit flips independently with probability p.
inline Corrupted corrupt_iid(std::span<const Bit> codeword, double p, uint64_t seed) {
    detail::require(p >= 0.0 && p <= 1.0, "corrupt_iid: p must lie in [0, 1]");
    Rng rng(seed);
    std::bernoulli_distribution flip(p);
    ErrorPattern pattern;
    for (size_t i = 0; i < codeword.size(); ++i) {
        if (flip(rng)) {
            pattern.flipped_indices.push_back(static_cast<uint32_t>(i));
        }
    }
    auto word = apply_pattern(codeword, pattern);
    return {std::move(word), std::move(pattern)};
}

}  // namespace phldpc
