// Copyright 2026 The gmspec Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GMSPEC_PARALLEL_HPP_
#define GMSPEC_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace gmspec {

// Worker count: GMSPEC_THREADS if set and positive, otherwise the hardware
// concurrency, never less than 1.
unsigned worker_count();

// Calls fn(i) for i in [0, n) on up to worker_count() threads. The first
// exception thrown by any call is rethrown after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace gmspec

#endif  // GMSPEC_PARALLEL_HPP_
