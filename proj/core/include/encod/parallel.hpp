// Copyright 2026 The EnCoD Authors.
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

#ifndef ENCOD_PARALLEL_HPP_
#define ENCOD_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace encod {

// Name of the environment variable that overrides the worker count.
inline constexpr const char* kThreadsEnvVar = "ENCOD_THREADS";

// ENCOD_THREADS if set to a positive integer, else the hardware concurrency
// (at least 1).
std::size_t default_thread_count();

// Runs fn(i) for i in [0, n) on up to `threads` workers. Work items must
// write to disjoint outputs; the first exception thrown is rethrown on the
// calling thread after all workers have stopped.
void parallel_for(std::size_t n, std::size_t threads,
                  const std::function<void(std::size_t)>& fn);

}  // namespace encod

#endif  // ENCOD_PARALLEL_HPP_
