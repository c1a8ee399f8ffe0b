#include "islb/threading.hpp"

#include <algorithm>
#include <memory>

namespace islb {

ThreadPool::ThreadPool(int threads) {
  int extra = std::max(0, threads - 1);
  workers_.reserve(static_cast<size_t>(extra));
  for (int i = 0; i < extra; ++i) workers_.emplace_back([this, i] { worker_loop(i + 1); });
}

ThreadPool::~ThreadPool() {
  {
    std::lock_guard<std::mutex> lk(mu_);
    stop_ = true;
  }
  cv_start_.notify_all();
  for (auto& w : workers_) w.join();
}

void ThreadPool::worker_loop(int index) {
  uint64_t seen = 0;
  for (;;) {
    const std::function<void(int)>* fn = nullptr;
    int tasks = 0;
    {
      std::unique_lock<std::mutex> lk(mu_);
      cv_start_.wait(lk, [&] { return stop_ || region_.epoch != seen; });
      if (stop_) return;
      seen = region_.epoch;
      fn = region_.fn;
      tasks = region_.tasks;
    }
    for (int t = index; t < tasks; t += size()) (*fn)(t);
    {
      std::lock_guard<std::mutex> lk(mu_);
      if (--region_.pending == 0) cv_done_.notify_all();
    }
  }
}

void ThreadPool::run(int tasks, const std::function<void(int)>& fn) {
  if (tasks <= 0) return;
  if (workers_.empty() || tasks == 1) {
    for (int t = 0; t < tasks; ++t) fn(t);
    return;
  }
  {
    std::lock_guard<std::mutex> lk(mu_);
    region_.fn = &fn;
    region_.tasks = tasks;
    region_.pending = static_cast<int>(workers_.size());
    ++region_.epoch;
  }
  cv_start_.notify_all();
  for (int t = 0; t < tasks; t += size()) fn(t);
  {
    std::unique_lock<std::mutex> lk(mu_);
    cv_done_.wait(lk, [&] { return region_.pending == 0; });
  }
}

void ThreadPool::run_chunks(int64_t count, const std::function<void(int, int64_t, int64_t)>& fn) {
  const int chunks = size();
  const int64_t per = (count + chunks - 1) / chunks;
  run(chunks, [&](int c) {
    const int64_t begin = c * per;
    const int64_t end = std::min<int64_t>(count, begin + per);
    if (begin < end) fn(c, begin, end);
  });
}

namespace {
std::unique_ptr<ThreadPool> g_pool;
std::mutex g_pool_mu;
}  // namespace

ThreadPool& global_pool() {
  std::lock_guard<std::mutex> lk(g_pool_mu);
  if (!g_pool) g_pool = std::make_unique<ThreadPool>(1);
  return *g_pool;
}

void set_global_threads(int threads) {
  std::lock_guard<std::mutex> lk(g_pool_mu);
  if (threads < 1) threads = 1;
  if (g_pool && g_pool->size() == threads) return;
  g_pool = std::make_unique<ThreadPool>(threads);
}

int global_threads() { return global_pool().size(); }

}  // namespace islb
