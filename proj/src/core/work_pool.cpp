#include "work_pool.hpp"

namespace onsat {

namespace {

thread_local const WorkStealingPool* tl_pool = nullptr;
thread_local std::size_t tl_index = 0;

}  // namespace

WorkStealingPool::WorkStealingPool(std::size_t workers) {
  if (workers == 0) workers = 1;
  queues_.reserve(workers);
  for (std::size_t i = 0; i < workers; ++i) queues_.push_back(std::make_unique<Queue>());
  threads_.reserve(workers);
  for (std::size_t i = 0; i < workers; ++i) threads_.emplace_back([this, i] { worker_loop(i); });
}

WorkStealingPool::~WorkStealingPool() {
  {
    std::lock_guard lk(idle_m_);
    stopping_.store(true);
  }
  idle_cv_.notify_all();
  for (auto& t : threads_) t.join();
}

void WorkStealingPool::submit(Task task) {
  const std::size_t target = tl_pool == this
                                 ? tl_index
                                 : next_queue_.fetch_add(1, std::memory_order_relaxed) %
                                       queues_.size();
  pending_.fetch_add(1);
  {
    std::lock_guard lk(queues_[target]->m);
    queues_[target]->tasks.push_front(std::move(task));
  }
  queued_.fetch_add(1);
  {
    std::lock_guard lk(idle_m_);
  }
  idle_cv_.notify_one();
}

bool WorkStealingPool::try_take(std::size_t self, Task& out) {
  {
    Queue& own = *queues_[self];
    std::lock_guard lk(own.m);
    if (!own.tasks.empty()) {
      out = std::move(own.tasks.front());
      own.tasks.pop_front();
      queued_.fetch_sub(1);
      return true;
    }
  }
  for (std::size_t k = 1; k < queues_.size(); ++k) {
    Queue& victim = *queues_[(self + k) % queues_.size()];
    std::lock_guard lk(victim.m);
    if (!victim.tasks.empty()) {
      out = std::move(victim.tasks.back());
      victim.tasks.pop_back();
      queued_.fetch_sub(1);
      return true;
    }
  }
  return false;
}

void WorkStealingPool::worker_loop(std::size_t index) {
  tl_pool = this;
  tl_index = index;
  while (true) {
    Task task;
    if (try_take(index, task)) {
      if (!cancelled()) {
        try {
          task();
        } catch (...) {
          {
            std::lock_guard lk(error_m_);
            if (!error_) error_ = std::current_exception();
          }
          cancel();
        }
      }
      task = nullptr;
      if (pending_.fetch_sub(1) == 1) {
        std::lock_guard lk(idle_m_);
        done_cv_.notify_all();
      }
      continue;
    }
    std::unique_lock lk(idle_m_);
    idle_cv_.wait(lk, [&] { return stopping_.load() || queued_.load() > 0; });
    if (stopping_.load()) return;
  }
}

void WorkStealingPool::wait() {
  {
    std::unique_lock lk(idle_m_);
    done_cv_.wait(lk, [&] { return pending_.load() == 0; });
  }
  std::lock_guard lk(error_m_);
  if (error_) {
    auto e = error_;
    error_ = nullptr;
    std::rethrow_exception(e);
  }
}

}  // namespace onsat
