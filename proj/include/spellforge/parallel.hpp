// Copyright 2026 The Spellforge Authors
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

#ifndef SPELLFORGE_PARALLEL_HPP_
#define SPELLFORGE_PARALLEL_HPP_

#include <cstdint>
#include <exception>
#include <functional>
#include <optional>
#include <thread>
#include <vector>

namespace spellforge {

// Ordered parallel map over a pulled stream. Items are read in fixed-size
// batches, transformed on up to `workers` threads, and emitted strictly in
// input order, so output is byte-identical for any worker count. transform
// must be pure in (ordinal, item).
template <typename T, typename R>
void parallel_ordered_map(const std::function<std::optional<T>()>& next, unsigned workers,
                          std::size_t batch_size,
                          const std::function<R(std::uint64_t, const T&)>& transform,
                          const std::function<void(std::uint64_t, R&&)>& emit) {
  if (workers == 0) workers = 1;
  if (batch_size == 0) batch_size = 1;

  std::uint64_t ordinal = 0;
  std::vector<T> batch;
  batch.reserve(batch_size);
  bool drained = false;

  while (!drained) {
    batch.clear();
    while (batch.size() < batch_size) {
      auto item = next();
      if (!item) {
        drained = true;
        break;
      }
      batch.push_back(std::move(*item));
    }
    if (batch.empty()) break;

    std::vector<R> results(batch.size());
    if (workers == 1 || batch.size() == 1) {
      for (std::size_t i = 0; i < batch.size(); ++i) {
        results[i] = transform(ordinal + i, batch[i]);
      }
    } else {
      const std::size_t n_threads = std::min<std::size_t>(workers, batch.size());
      std::vector<std::thread> threads;
      std::vector<std::exception_ptr> failures(n_threads);
      threads.reserve(n_threads);
      for (std::size_t t = 0; t < n_threads; ++t) {
        threads.emplace_back([&, t]() {
          try {
            for (std::size_t i = t; i < batch.size(); i += n_threads) {
              results[i] = transform(ordinal + i, batch[i]);
            }
          } catch (...) {
            failures[t] = std::current_exception();
          }
        });
      }
      for (auto& thread : threads) thread.join();
      for (const auto& failure : failures) {
        if (failure) std::rethrow_exception(failure);
      }
    }

    for (std::size_t i = 0; i < results.size(); ++i) {
      emit(ordinal + i, std::move(results[i]));
    }
    ordinal += batch.size();
  }
}

}  // namespace spellforge

#endif  // SPELLFORGE_PARALLEL_HPP_
