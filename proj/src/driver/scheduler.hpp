#pragma once

// Work queue ordered by task key. The thread calling run() works through the
// queue alongside jobs-1 helper threads and returns once nothing is queued or
// running.

#include <condition_variable>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <random>
#include <thread>
#include <vector>

#include "smooth/driver.hpp"

namespace smooth::detail {

class TaskPool {
 public:
  TaskPool(unsigned jobs, std::optional<std::uint64_t> shuffle_seed) : jobs_(jobs ? jobs : 1) {
    if (shuffle_seed) rng_.emplace(*shuffle_seed);
  }

  void submit(TaskKey key, std::function<void()> fn) {
    {
      std::lock_guard lock(mutex_);
      queue_.push_back(Item{std::move(key), std::move(fn)});
    }
    cv_.notify_one();
  }

  void run() {
    std::vector<std::thread> helpers;
    for (unsigned i = 1; i < jobs_; ++i) helpers.emplace_back([this] { work(); });
    work();
    for (auto& t : helpers) t.join();
  }

 private:
  struct Item {
    TaskKey key;
    std::function<void()> fn;
  };

  void work() {
    std::unique_lock lock(mutex_);
    for (;;) {
      cv_.wait(lock, [this] { return !queue_.empty() || running_ == 0; });
      if (queue_.empty()) {
        cv_.notify_all();
        return;
      }
      Item item = pop();
      ++running_;
      lock.unlock();
      item.fn();
      item = Item{};
      lock.lock();
      --running_;
      if (queue_.empty() && running_ == 0) cv_.notify_all();
    }
  }

  Item pop() {
    std::size_t pick = 0;
    if (rng_) {
      pick = std::uniform_int_distribution<std::size_t>(0, queue_.size() - 1)(*rng_);
    } else {
      for (std::size_t i = 1; i < queue_.size(); ++i)
        if (queue_[i].key < queue_[pick].key) pick = i;
    }
    Item item = std::move(queue_[pick]);
    queue_[pick] = std::move(queue_.back());
    queue_.pop_back();
    return item;
  }

  unsigned jobs_;
  std::optional<std::mt19937_64> rng_;
  std::mutex mutex_;
  std::condition_variable cv_;
  std::vector<Item> queue_;
  std::size_t running_ = 0;
};

}  // namespace smooth::detail
