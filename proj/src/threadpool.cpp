#include "palmnet/threadpool.hpp"

#include <atomic>
#include <condition_variable>
#include <cstdlib>
#include <mutex>
#include <thread>
#include <vector>

namespace palmnet {
namespace {

size_t resolve_worker_count() {
  size_t n = std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (const char* env = std::getenv("GRADER_THREADS")) {
    long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1 && static_cast<size_t>(cap) < n) n = static_cast<size_t>(cap);
  }
  return n;
}

// Persistent pool; work items are (range chunk, fn) pairs handed to sleeping
// workers. Chunk boundaries depend only on (total, grain, worker count), so
// any run with the same configuration touches identical index ranges.
class Pool {
 public:
  Pool() : workers_(resolve_worker_count() - 1) {
    threads_.reserve(workers_);
    for (size_t t = 0; t < workers_; ++t) {
      threads_.emplace_back([this] { worker_loop(); });
    }
  }

  ~Pool() {
    {
      std::lock_guard<std::mutex> lock(mu_);
      stop_ = true;
    }
    cv_.notify_all();
    for (auto& t : threads_) t.join();
  }

  void run(size_t total, size_t grain,
           const std::function<void(size_t, size_t)>& fn) {
    size_t parts = workers_ + 1;
    size_t chunk = (total + parts - 1) / parts;
    if (chunk < grain) chunk = grain;

    std::vector<std::pair<size_t, size_t>> ranges;
    for (size_t lo = 0; lo < total; lo += chunk)
      ranges.emplace_back(lo, std::min(lo + chunk, total));
    if (ranges.size() == 1) {
      fn(ranges[0].first, ranges[0].second);
      return;
    }

    std::atomic<size_t> next{1};
    std::atomic<size_t> done{0};
    {
      std::lock_guard<std::mutex> lock(mu_);
      job_ = [&](size_t) {
        for (;;) {
          size_t idx = next.fetch_add(1);
          if (idx >= ranges.size()) break;
          fn(ranges[idx].first, ranges[idx].second);
          done.fetch_add(1);
        }
      };
      job_epoch_++;
    }
    cv_.notify_all();

    fn(ranges[0].first, ranges[0].second);
    for (;;) {
      size_t idx = next.fetch_add(1);
      if (idx >= ranges.size()) break;
      fn(ranges[idx].first, ranges[idx].second);
      done.fetch_add(1);
    }
    // Spin-wait for stragglers; chunks are short-lived.
    while (done.load() < ranges.size() - 1) std::this_thread::yield();
    std::lock_guard<std::mutex> lock(mu_);
    job_ = nullptr;
  }

  size_t workers() const { return workers_ + 1; }

 private:
  void worker_loop() {
    uint64_t seen = 0;
    for (;;) {
      std::function<void(size_t)> job;
      {
        std::unique_lock<std::mutex> lock(mu_);
        cv_.wait(lock, [&] { return stop_ || job_epoch_ != seen; });
        if (stop_) return;
        seen = job_epoch_;
        job = job_;
      }
      if (job) job(0);
    }
  }

  size_t workers_;
  std::vector<std::thread> threads_;
  std::mutex mu_;
  std::condition_variable cv_;
  std::function<void(size_t)> job_;
  uint64_t job_epoch_ = 0;
  bool stop_ = false;
};

Pool& pool() {
  static Pool p;
  return p;
}

}  // namespace

size_t worker_threads() { return pool().workers(); }

void parallel_for(size_t total, size_t grain,
                  const std::function<void(size_t, size_t)>& fn) {
  if (total == 0) return;
  if (pool().workers() == 1 || total <= grain) {
    fn(0, total);
    return;
  }
  pool().run(total, grain, fn);
}

}  // namespace palmnet
