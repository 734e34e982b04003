/*
Copyright (c) 2026 The slfe authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "slfe/scheduler.hpp"

#include <algorithm>
#include <chrono>
#include <thread>

#include "slfe/errors.hpp"

namespace slfe {

ChunkScheduler::ChunkScheduler(uint64_t range_begin, uint64_t range_end,
                               uint32_t num_threads) {
  reset(range_begin, range_end, num_threads);
}

void ChunkScheduler::reset(uint64_t range_begin, uint64_t range_end,
                           uint32_t num_threads) {
  if (num_threads < 1) throw ArgumentError("numThreads must be >= 1");
  if (range_end < range_begin) throw ArgumentError("invalid vertex range");
  range_begin_ = range_begin;
  range_end_ = range_end;
  num_threads_ = num_threads;
  uint64_t span = range_end - range_begin;
  num_chunks_ = (span + kChunkVertices - 1) / kChunkVertices;
  cursors_ = std::vector<Cursor>(num_threads);
  for (uint32_t t = 0; t < num_threads; ++t) {
    auto [first, last] = initial_share(t);
    cursors_[t].next.store(first, std::memory_order_relaxed);
    cursors_[t].end = last;
  }
}

std::pair<uint64_t, uint64_t> ChunkScheduler::initial_share(
    uint32_t thread_id) const {
  uint64_t first = num_chunks_ * thread_id / num_threads_;
  uint64_t last = num_chunks_ * (thread_id + 1) / num_threads_;
  return {first, last};
}

std::pair<uint64_t, uint64_t> ChunkScheduler::chunk_range(uint64_t chunk) const {
  uint64_t first = range_begin_ + chunk * kChunkVertices;
  uint64_t last = std::min(range_end_, first + kChunkVertices);
  return {first, last};
}

std::optional<uint64_t> ChunkScheduler::claim(uint32_t thread_id) {
  Cursor& own = cursors_[thread_id];
  uint64_t idx = own.next.fetch_add(1, std::memory_order_relaxed);
  if (idx < own.end) return idx;

  // Own share exhausted: steal from the victim with the most remaining.
  for (;;) {
    uint32_t victim = num_threads_;
    uint64_t most = 0;
    for (uint32_t t = 0; t < num_threads_; ++t) {
      if (t == thread_id) continue;
      uint64_t next = cursors_[t].next.load(std::memory_order_relaxed);
      uint64_t remaining = next < cursors_[t].end ? cursors_[t].end - next : 0;
      if (remaining > most) {
        most = remaining;
        victim = t;
      }
    }
    if (victim == num_threads_) return std::nullopt;
    idx = cursors_[victim].next.fetch_add(1, std::memory_order_relaxed);
    if (idx < cursors_[victim].end) return idx;
    // Lost the race on this victim; rescan.
  }
}

void parallel_chunks(uint64_t range_begin, uint64_t range_end,
                     uint32_t num_threads,
                     const std::function<void(uint64_t, uint64_t, uint32_t)>& fn,
                     int stall_thread) {
  if (range_end <= range_begin) return;
  ChunkScheduler sched(range_begin, range_end, num_threads);
  if (num_threads == 1) {
    while (auto chunk = sched.claim(0)) {
      auto [first, last] = sched.chunk_range(*chunk);
      fn(first, last, 0);
    }
    return;
  }
  auto worker = [&](uint32_t tid) {
    if (static_cast<int>(tid) == stall_thread) {
      std::this_thread::sleep_for(std::chrono::milliseconds(2));
    }
    while (auto chunk = sched.claim(tid)) {
      auto [first, last] = sched.chunk_range(*chunk);
      fn(first, last, tid);
    }
  };
  std::vector<std::thread> threads;
  threads.reserve(num_threads - 1);
  for (uint32_t t = 1; t < num_threads; ++t) {
    threads.emplace_back(worker, t);
  }
  worker(0);
  for (std::thread& t : threads) t.join();
}

}  // namespace slfe
