// Copyright 2026 The rnbs-sim Authors
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

#ifndef RNBS_PARALLEL_HPP_
#define RNBS_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace rnbs {

// Number of worker threads implied by a thread-count argument: values < 1
// mean "use the hardware concurrency" (at least 1).
int resolve_threads(int threads);

// Runs fn(0) .. fn(nblocks - 1), possibly concurrently on up to `threads`
// workers. The block decomposition is the caller's and must not depend on
// the thread count; callers combine per-block results in block order, which
// keeps every reduced value bit-identical for any thread count. fn must be
// safe to call concurrently for distinct blocks. Exceptions thrown by fn
// are rethrown on the calling thread.
void run_blocks(std::size_t nblocks, int threads,
                const std::function<void(std::size_t)>& fn);

}  // namespace rnbs

#endif  // RNBS_PARALLEL_HPP_
