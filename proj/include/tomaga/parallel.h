// Copyright 2026 The ToMAGA Workbench Authors
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

#ifndef TOMAGA_PARALLEL_H_
#define TOMAGA_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace tomaga {

// Calls task(i) for i in [0, n) on up to `jobs` threads. Tasks must write
// only to their own output slot. jobs <= 0 selects the hardware count.
// The first exception thrown by a task is rethrown after all threads join.
void ParallelFor(std::size_t n, int jobs,
                 const std::function<void(std::size_t)>& task);

}  // namespace tomaga

#endif  // TOMAGA_PARALLEL_H_
