/*
 * Copyright 2026 The Growth Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <functional>

namespace growth {

/// Worker count: hardware concurrency, capped by GROWTH_THREADS when set.
unsigned worker_count();

/// Runs body(i) for i in [0, count) on up to worker_count() threads. Work is
/// handed out by an atomic counter, so callers must write results into
/// per-index slots to stay deterministic.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace growth
