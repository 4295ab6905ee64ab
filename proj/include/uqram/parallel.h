// Copyright 2026 The uqram Authors
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

#ifndef UQRAM_PARALLEL_H_
#define UQRAM_PARALLEL_H_

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace uqram {

/// Below this many items per worker the calling thread does all the work.
inline constexpr std::uint64_t kParallelGrain = std::uint64_t{1} << 16;

namespace detail {
inline std::atomic<unsigned> thread_limit{0};
}  // namespace detail

/// Caps the workers used by parallel loops; 0 means one per hardware thread.
inline void set_thread_limit(unsigned limit) { detail::thread_limit = limit; }

inline std::uint64_t worker_count(std::uint64_t n) {
    unsigned limit = detail::thread_limit;
    std::uint64_t hw = limit ? limit : std::max(1u, std::thread::hardware_concurrency());
    return std::max<std::uint64_t>(1, std::min(hw, n / kParallelGrain));
}

/// Splits [0, n) into contiguous disjoint chunks and calls
/// body(worker, begin, end) once per chunk, concurrently.
template <typename Body>
void for_each_chunk(std::uint64_t n, std::uint64_t workers, Body &&body) {
    std::uint64_t chunk = (n + workers - 1) / workers;
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::uint64_t w = 1; w < workers; w++) {
        std::uint64_t begin = std::min(n, w * chunk);
        std::uint64_t end = std::min(n, begin + chunk);
        pool.emplace_back([&body, w, begin, end] { body(w, begin, end); });
    }
    body(std::uint64_t{0}, std::uint64_t{0}, std::min(n, chunk));
}

/// Calls body(begin, end) over a partition of [0, n). The body must only
/// write state owned by its own range.
template <typename Body>
void parallel_for(std::uint64_t n, Body &&body) {
    std::uint64_t workers = worker_count(n);
    if (workers == 1) {
        body(std::uint64_t{0}, n);
        return;
    }
    for_each_chunk(n, workers, [&](std::uint64_t, std::uint64_t b, std::uint64_t e) { body(b, e); });
}

/// Sums body(begin, end) over a partition of [0, n).
template <typename Body>
std::uint64_t parallel_count(std::uint64_t n, Body &&body) {
    std::uint64_t workers = worker_count(n);
    if (workers == 1) {
        return body(std::uint64_t{0}, n);
    }
    std::vector<std::uint64_t> partial(workers, 0);
    for_each_chunk(n, workers, [&](std::uint64_t w, std::uint64_t b, std::uint64_t e) { partial[w] = body(b, e); });
    std::uint64_t total = 0;
    for (auto c : partial) {
        total += c;
    }
    return total;
}

}  // namespace uqram

#endif  // UQRAM_PARALLEL_H_
