#pragma once

#include <condition_variable>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace scgan {

// Fixed-size worker pool with a deterministic static partition scheme.
// Every parallel_for splits [0, n) into at most pool-size contiguous ranges;
// each element is processed by exactly one thread, so results do not depend
// on scheduling order as long as per-element work is independent.
class ThreadPool {
public:
    static ThreadPool& instance() {
        static ThreadPool pool(env_threads());
        return pool;
    }

    int size() const { return static_cast<int>(workers_.size()) + 1; }

    // fn(begin, end) over a contiguous index range.
    void run_ranges(std::int64_t n, const std::function<void(std::int64_t, std::int64_t)>& fn) {
        if (n <= 0) return;
        const int parts = static_cast<int>(std::min<std::int64_t>(size(), n));
        if (parts == 1) {
            fn(0, n);
            return;
        }
        std::vector<std::pair<std::int64_t, std::int64_t>> ranges(parts);
        const std::int64_t chunk = n / parts, rem = n % parts;
        std::int64_t pos = 0;
        for (int p = 0; p < parts; ++p) {
            std::int64_t len = chunk + (p < rem ? 1 : 0);
            ranges[p] = {pos, pos + len};
            pos += len;
        }
        {
            std::unique_lock<std::mutex> lock(mu_);
            pending_ = parts - 1;
            tasks_.clear();
            for (int p = 1; p < parts; ++p)
                tasks_.emplace_back([&fn, r = ranges[p]] { fn(r.first, r.second); });
            cv_task_.notify_all();
        }
        fn(ranges[0].first, ranges[0].second);
        std::unique_lock<std::mutex> lock(mu_);
        cv_done_.wait(lock, [this] { return pending_ == 0 && tasks_.empty(); });
    }

    ~ThreadPool() {
        {
            std::unique_lock<std::mutex> lock(mu_);
            stop_ = true;
            cv_task_.notify_all();
        }
        for (auto& t : workers_) t.join();
    }

private:
    explicit ThreadPool(int n_threads) {
        for (int i = 0; i < n_threads - 1; ++i)
            workers_.emplace_back([this] { worker_loop(); });
    }

    static int env_threads() {
        if (const char* s = std::getenv("SCGAN_THREADS")) {
            int v = std::atoi(s);
            if (v >= 1) return v;
        }
        unsigned hw = std::thread::hardware_concurrency();
        return hw > 0 ? static_cast<int>(hw) : 1;
    }

    void worker_loop() {
        for (;;) {
            std::function<void()> task;
            {
                std::unique_lock<std::mutex> lock(mu_);
                cv_task_.wait(lock, [this] { return stop_ || !tasks_.empty(); });
                if (stop_ && tasks_.empty()) return;
                if (tasks_.empty()) continue;
                task = std::move(tasks_.back());
                tasks_.pop_back();
            }
            task();
            {
                std::unique_lock<std::mutex> lock(mu_);
                if (--pending_ == 0 && tasks_.empty()) cv_done_.notify_all();
            }
        }
    }

    std::vector<std::thread> workers_;
    std::vector<std::function<void()>> tasks_;
    std::mutex mu_;
    std::condition_variable cv_task_, cv_done_;
    int pending_ = 0;
    bool stop_ = false;
};

inline void parallel_for(std::int64_t n, const std::function<void(std::int64_t, std::int64_t)>& fn) {
    ThreadPool::instance().run_ranges(n, fn);
}

}  // namespace scgan
