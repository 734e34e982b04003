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

#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace slfe {

// Mini-chunk work-stealing over a vertex range. The range is cut into
// 256-vertex chunks (the last one may be short); every thread owns an
// initial contiguous share of chunks and claims from its own share first.
// Once exhausted it steals whole chunks from the victim with the most
// remaining, via atomic cursor claims. Each chunk is claimed exactly once.
class ChunkScheduler {
 public:
  static constexpr uint32_t kChunkVertices = 256;

  ChunkScheduler() = default;
  ChunkScheduler(uint64_t range_begin, uint64_t range_end,
                 uint32_t num_threads);

  void reset(uint64_t range_begin, uint64_t range_end, uint32_t num_threads);

  // Next chunk index for this thread, or nullopt when all work is done.
  std::optional<uint64_t> claim(uint32_t thread_id);

  // Vertex range [first, last) of a chunk.
  std::pair<uint64_t, uint64_t> chunk_range(uint64_t chunk) const;

  uint64_t num_chunks() const { return num_chunks_; }
  uint32_t num_threads() const { return num_threads_; }

  // Initial contiguous share [first, last) of a thread, in chunk indices.
  std::pair<uint64_t, uint64_t> initial_share(uint32_t thread_id) const;

 private:
  struct alignas(64) Cursor {
    std::atomic<uint64_t> next{0};
    uint64_t end = 0;
  };

  uint64_t range_begin_ = 0;
  uint64_t range_end_ = 0;
  uint64_t num_chunks_ = 0;
  uint32_t num_threads_ = 1;
  std::vector<Cursor> cursors_;
};

// Runs fn(first_vertex, last_vertex, thread_id) over every chunk of
// [range_begin, range_end). Single-threaded runs stay on the calling thread.
// stall_thread (when >= 0) delays that worker's first claim; a test hook for
// exercising stealing.
void parallel_chunks(uint64_t range_begin, uint64_t range_end,
                     uint32_t num_threads,
                     const std::function<void(uint64_t, uint64_t, uint32_t)>& fn,
                     int stall_thread = -1);

}  // namespace slfe
