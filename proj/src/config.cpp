// Copyright 2026 The stabwit developers
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

#include "stabwit/config.hpp"

#include <atomic>
#include <stdexcept>

namespace stabwit {

namespace {
std::atomic<int> g_dense_cap{12};
}

int dense_cap() { return g_dense_cap.load(std::memory_order_relaxed); }

void set_dense_cap(int cap) {
  if (cap < 1 || cap > kStateCap)
    throw std::invalid_argument("dense cap must be in [1, " +
                                std::to_string(kStateCap) + "]");
  g_dense_cap.store(cap, std::memory_order_relaxed);
}

}  // namespace stabwit
