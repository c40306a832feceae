// Copyright 2026 The bankshap Authors
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

#ifndef BANKSHAP_DETAIL_PARALLEL_HPP
#define BANKSHAP_DETAIL_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace bankshap::detail {

/// Runs task(k) for k in [0, tasks) on up to `workers` threads. Tasks are
/// handed out statically (worker r takes k = r, r + workers, ...). The first
/// exception thrown by any task is rethrown on the calling thread.
template <class F>
void parallel_for(unsigned workers, std::size_t tasks, F&& task) {
  workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(tasks, 1))));
  if (workers == 1) {
    for (std::size_t k = 0; k < tasks; ++k) task(k);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned r = 0; r < workers; ++r) {
      pool.emplace_back([&, r] {
        try {
          for (std::size_t k = r; k < tasks; k += workers) task(k);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace bankshap::detail

#endif  // BANKSHAP_DETAIL_PARALLEL_HPP
