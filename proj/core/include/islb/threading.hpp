#pragma once

#include <condition_variable>
#include <cstdint>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace islb {

/// Fixed-size worker pool with deterministic task assignment: task i of a
/// parallel region always runs on worker (i % workers), so reductions that
/// combine per-task partials in index order are bitwise reproducible for a
/// fixed pool size.
class ThreadPool {
 public:
  explicit ThreadPool(int threads);
  ~ThreadPool();

  ThreadPool(const ThreadPool&) = delete;
  ThreadPool& operator=(const ThreadPool&) = delete;

  int size() const { return static_cast<int>(workers_.size()) + 1; }

  /// Runs fn(task) for task in [0, tasks); blocks until all complete.
  /// Worker 0 is the calling thread.
  void run(int tasks, const std::function<void(int)>& fn);

  /// Splits [0, count) into size() contiguous chunks and runs
  /// fn(chunk_index, begin, end) per chunk.
  void run_chunks(int64_t count, const std::function<void(int, int64_t, int64_t)>& fn);

 private:
  struct Region {
    const std::function<void(int)>* fn = nullptr;
    int tasks = 0;
    uint64_t epoch = 0;
    int pending = 0;
  };

  void worker_loop(int index);

  std::vector<std::thread> workers_;
  std::mutex mu_;
  std::condition_variable cv_start_, cv_done_;
  Region region_;
  bool stop_ = false;
};

/// Pool shared by library internals; resized via set_global_threads.
ThreadPool& global_pool();
void set_global_threads(int threads);
int global_threads();

}  // namespace islb
