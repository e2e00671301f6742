// Copyright 2026 The bsstar Authors
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

#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace bsstar::detail {

inline unsigned resolve_workers(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Splits [0, items) into chunks handed out through an atomic counter. Every
// worker owns the state built by `make_state`; the states are returned for an
// order-independent merge. The first exception thrown by a worker is rethrown.
template <class MakeState, class Body>
auto run_chunked(std::uint64_t items, unsigned workers, std::uint64_t chunk,
                 MakeState make_state, Body body) {
  using State = decltype(make_state());
  workers = resolve_workers(workers);
  if (items < chunk * 2) workers = 1;

  std::vector<State> states;
  states.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) states.push_back(make_state());

  std::atomic<std::uint64_t> next{0};
  std::atomic<bool> failed{false};
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](unsigned w) {
    try {
      while (!failed.load(std::memory_order_relaxed)) {
        const std::uint64_t begin = next.fetch_add(chunk);
        if (begin >= items) break;
        body(states[w], begin, std::min(items, begin + chunk));
      }
    } catch (...) {
      errors[w] = std::current_exception();
      failed = true;
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(work, w);
    for (auto& th : threads) th.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return states;
}

}  // namespace bsstar::detail
