// emofeat/threadpool.hpp

// Copyright 2026  emofeat authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef EMOFEAT_THREADPOOL_HPP_
#define EMOFEAT_THREADPOOL_HPP_

#include <atomic>
#include <condition_variable>
#include <functional>
#include <memory>
#include <mutex>
#include <queue>
#include <thread>
#include <vector>

namespace emofeat {

namespace detail {
inline thread_local bool tls_inside_worker = false;
}  // namespace detail

/// Fixed-size worker pool. ParallelFor blocks until every index has run; the
/// calling thread participates, and calls issued from inside a worker run
/// inline, so nesting cannot deadlock.
class ThreadPool {
 public:
  explicit ThreadPool(unsigned threads) {
    if (threads == 0) threads = std::thread::hardware_concurrency();
    if (threads == 0) threads = 1;
    for (unsigned i = 0; i + 1 < threads; ++i) {  // caller thread counts as one
      workers_.emplace_back([this] { WorkerLoop(); });
    }
  }

  ThreadPool(const ThreadPool&) = delete;
  ThreadPool& operator=(const ThreadPool&) = delete;

  ~ThreadPool() {
    {
      std::lock_guard<std::mutex> lock(mu_);
      stop_ = true;
    }
    cv_.notify_all();
    for (auto& w : workers_) w.join();
  }

  std::size_t worker_count() const { return workers_.size() + 1; }

  /// Runs fn(i) for i in [0, n). Exceptions are rethrown on the caller after
  /// all indices finish or are abandoned.
  void ParallelFor(std::size_t n, const std::function<void(std::size_t)>& fn) {
    if (n == 0) return;
    if (workers_.empty() || detail::tls_inside_worker || n == 1) {
      for (std::size_t i = 0; i < n; ++i) fn(i);
      return;
    }
    auto state = std::make_shared<ForState>();
    state->n = n;
    state->fn = &fn;
    {
      std::lock_guard<std::mutex> lock(mu_);
      std::size_t helpers = std::min(workers_.size(), n - 1);
      for (std::size_t i = 0; i < helpers; ++i) jobs_.push(state);
      state->pending_jobs = helpers;
    }
    cv_.notify_all();
    RunShare(*state);
    std::unique_lock<std::mutex> lock(state->mu);
    state->done_cv.wait(lock, [&] { return state->pending_jobs == 0 && state->active == 0; });
    if (state->error) std::rethrow_exception(state->error);
  }

 private:
  struct ForState {
    std::size_t n = 0;
    const std::function<void(std::size_t)>* fn = nullptr;
    std::atomic<std::size_t> next{0};
    std::atomic<int> active{0};
    std::size_t pending_jobs = 0;
    std::exception_ptr error;
    std::mutex mu;
    std::condition_variable done_cv;
  };

  void RunShare(ForState& state) {
    state.active.fetch_add(1);
    for (;;) {
      std::size_t i = state.next.fetch_add(1);
      if (i >= state.n) break;
      try {
        (*state.fn)(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(state.mu);
        if (!state.error) state.error = std::current_exception();
        state.next.store(state.n);  // abandon remaining indices
      }
    }
    std::lock_guard<std::mutex> lock(state.mu);
    state.active.fetch_sub(1);
    state.done_cv.notify_all();
  }

  void WorkerLoop() {
    detail::tls_inside_worker = true;
    for (;;) {
      std::shared_ptr<ForState> state;
      {
        std::unique_lock<std::mutex> lock(mu_);
        cv_.wait(lock, [&] { return stop_ || !jobs_.empty(); });
        if (stop_ && jobs_.empty()) return;
        state = jobs_.front();
        jobs_.pop();
      }
      RunShare(*state);
      {
        std::lock_guard<std::mutex> lock(state->mu);
        state->pending_jobs -= 1;
        state->done_cv.notify_all();
      }
    }
  }

  std::vector<std::thread> workers_;
  std::queue<std::shared_ptr<ForState>> jobs_;
  std::mutex mu_;
  std::condition_variable cv_;
  bool stop_ = false;
};

/// Convenience: pool may be null (sequential execution).
inline void ParallelFor(ThreadPool* pool, std::size_t n,
                        const std::function<void(std::size_t)>& fn) {
  if (pool == nullptr) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  pool->ParallelFor(n, fn);
}

}  // namespace emofeat

#endif  // EMOFEAT_THREADPOOL_HPP_
