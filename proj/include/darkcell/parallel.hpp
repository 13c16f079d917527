// Copyright 2026 the darkcell authors
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

#ifndef DARKCELL_PARALLEL_HPP
#define DARKCELL_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace darkcell {

// Runs fn(i) for i in [0, n). Each index writes only its own output slot,
// and reductions happen afterwards in index order, so results are
// bit-identical for any worker count. workers == 0 picks the hardware
// concurrency; workers == 1 runs inline.
void parallel_for(std::size_t n, unsigned workers,
                  const std::function<void(std::size_t)>& fn);

unsigned resolve_workers(unsigned workers);

}  // namespace darkcell

#endif  // DARKCELL_PARALLEL_HPP
