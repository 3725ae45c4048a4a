#pragma once

#include <condition_variable>
#include <cstdlib>
#include <deque>
#include <mutex>
#include <thread>
#include <vector>

namespace folkman::detail {

inline int worker_count() {
    if (const char* env = std::getenv("FOLKMAN_WORKERS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

// Work queue with completion detection: finished when empty and no worker is
// mid-task. Tasks may push further tasks while being processed.
template <typename Item>
class TaskQueue {
public:
    void push(Item item) {
        {
            std::lock_guard<std::mutex> lock(mu_);
            queue_.push_back(std::move(item));
        }
        cv_.notify_one();
    }

    template <typename Fn>
    void run(int workers, Fn process) {
        active_ = 0;
        done_ = false;
        if (workers <= 1) {
            while (!queue_.empty()) {
                Item item = std::move(queue_.front());
                queue_.pop_front();
                process(item, *this);
            }
            return;
        }
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int i = 0; i < workers; ++i)
            pool.emplace_back([&] { worker(process); });
        for (auto& t : pool) t.join();
    }

private:
    template <typename Fn>
    void worker(Fn& process) {
        std::unique_lock<std::mutex> lock(mu_);
        for (;;) {
            cv_.wait(lock, [&] { return done_ || !queue_.empty() || active_ == 0; });
            if (done_) return;
            if (queue_.empty()) {
                done_ = true;
                cv_.notify_all();
                return;
            }
            Item item = std::move(queue_.front());
            queue_.pop_front();
            ++active_;
            lock.unlock();
            process(item, *this);
            lock.lock();
            --active_;
            if (queue_.empty() && active_ == 0) {
                done_ = true;
                cv_.notify_all();
                return;
            }
        }
    }

    std::mutex mu_;
    std::condition_variable cv_;
    std::deque<Item> queue_;
    int active_ = 0;
    bool done_ = false;
};

// Parallel map over a fixed index range, exposing the worker slot.
template <typename Fn>
void parallel_for_worker(long count, int workers, Fn fn) {
    if (count <= 0) return;
    if (workers <= 1) {
        for (long i = 0; i < count; ++i) fn(0, i);
        return;
    }
    std::vector<std::thread> pool;
    std::mutex mu;
    long next = 0;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (;;) {
                long i;
                {
                    std::lock_guard<std::mutex> lock(mu);
                    if (next >= count) return;
                    i = next++;
                }
                fn(w, i);
            }
        });
    for (auto& t : pool) t.join();
}

// Parallel map over a fixed index range.
template <typename Fn>
void parallel_for(long count, int workers, Fn fn) {
    if (count <= 0) return;
    if (workers <= 1) {
        for (long i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::mutex mu;
    long next = 0;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (;;) {
                long i;
                {
                    std::lock_guard<std::mutex> lock(mu);
                    if (next >= count) return;
                    i = next++;
                }
                fn(i);
            }
        });
    for (auto& t : pool) t.join();
}

}  // namespace folkman::detail
