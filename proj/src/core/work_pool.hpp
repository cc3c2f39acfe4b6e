#pragma once

#include <atomic>
#include <condition_variable>
#include <cstddef>
#include <deque>
#include <exception>
#include <functional>
#include <memory>
#include <mutex>
#include <thread>
#include <vector>

namespace onsat {

/// Fixed-size pool with one deque per worker. Workers pop their own deque
/// LIFO and steal FIFO from the others. Tasks submitted from inside a worker
/// land on that worker's deque.
class WorkStealingPool {
 public:
  using Task = std::function<void()>;

  explicit WorkStealingPool(std::size_t workers);
  ~WorkStealingPool();

  WorkStealingPool(const WorkStealingPool&) = delete;
  WorkStealingPool& operator=(const WorkStealingPool&) = delete;

  void submit(Task task);

  /// Blocks until every submitted task has finished or been dropped by
  /// cancellation; rethrows the first exception a task raised.
  void wait();

  /// Queued tasks are dropped instead of run.
  void cancel() noexcept { cancelled_.store(true, std::memory_order_relaxed); }
  bool cancelled() const noexcept { return cancelled_.load(std::memory_order_relaxed); }

  std::size_t size() const noexcept { return queues_.size(); }

 private:
  struct Queue {
    std::mutex m;
    std::deque<Task> tasks;
  };

  void worker_loop(std::size_t index);
  bool try_take(std::size_t self, Task& out);

  std::vector<std::unique_ptr<Queue>> queues_;
  std::vector<std::thread> threads_;
  std::atomic<std::size_t> pending_{0};
  std::atomic<std::size_t> queued_{0};
  std::atomic<std::size_t> next_queue_{0};
  std::atomic<bool> cancelled_{false};
  std::atomic<bool> stopping_{false};
  std::mutex idle_m_;
  std::condition_variable idle_cv_;
  std::condition_variable done_cv_;
  std::mutex error_m_;
  std::exception_ptr error_;
};

}  // namespace onsat
