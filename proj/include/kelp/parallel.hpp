// Copyright 2026 The kelp Authors.
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

#ifndef KELP_PARALLEL_HPP_
#define KELP_PARALLEL_HPP_

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kelp::par {

inline int max_jobs() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// Serial reference path. The parallel driver must produce bit-identical
// results to this for any jobs value; tests compare the two.
template <typename Fn>
void for_each_index_serial(std::size_t n, Fn&& fn) {
  for (std::size_t i = 0; i < n; ++i) fn(i);
}

// Runs fn(0..n-1) with OpenMP when available. jobs <= 0 means the OpenMP
// default, jobs == 1 forces the serial path. Callers write results into
// index-addressed slots, so scheduling cannot reorder anything observable.
// The first exception thrown by any iteration is rethrown after the loop.
template <typename Fn>
void for_each_index(std::size_t n, int jobs, Fn&& fn) {
#ifdef _OPENMP
  if (jobs != 1 && n > 1) {
    std::exception_ptr error;
    std::mutex error_mutex;
    std::atomic<bool> failed{false};
    const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      if (failed.load(std::memory_order_relaxed)) continue;
      try {
        fn(static_cast<std::size_t>(i));
      } catch (...) {
        const std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        failed.store(true, std::memory_order_relaxed);
      }
    }
    if (error) std::rethrow_exception(error);
    return;
  }
#endif
  for_each_index_serial(n, fn);
}

}  // namespace kelp::par

#endif  // KELP_PARALLEL_HPP_
