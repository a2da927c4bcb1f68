// Copyright 2026 The vitalpovm Authors
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

#pragma once

#include <cstddef>
#include <functional>

namespace vitalpovm {

/// Worker count: VITALPOVM_THREADS if set and positive, else hardware
/// concurrency (at least 1).
unsigned worker_count();

/// Runs body(worker) for worker in [0, workers) on separate threads and
/// joins them. With one worker the body runs on the calling thread.
/// Exceptions from any worker are rethrown after all workers finish.
void run_workers(unsigned workers, const std::function<void(unsigned)>& body);

}  // namespace vitalpovm
