#pragma once

#include <algorithm>
#include <condition_variable>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

#include "parsweep/core/errors.hpp"
#include "parsweep/executor.hpp"

namespace parsweep {

/// Fixed pool of worker threads executing statically chunked index ranges.
/// Chunk ownership is a pure function of (count, workers), items inside a
/// chunk run in ascending order, and items write disjoint slots, so results
/// are bitwise identical to the serial schedule for any worker count.
class WorkerPool final : public Executor {
public:
    explicit WorkerPool(std::size_t workers) : workers_(workers == 0 ? 1 : workers) {
        threads_.reserve(workers_ - 1);
        for (std::size_t w = 1; w < workers_; ++w)
            threads_.emplace_back([this, w] { worker_loop(w); });
    }

    WorkerPool(const WorkerPool&) = delete;
    WorkerPool& operator=(const WorkerPool&) = delete;

    ~WorkerPool() override {
        {
            std::unique_lock lock(mutex_);
            stop_ = true;
        }
        start_cv_.notify_all();
        for (auto& t : threads_) t.join();
    }

    std::size_t workers() const override { return workers_; }

    void for_each(std::size_t count,
                  const std::function<void(std::size_t, std::size_t)>& body) override {
        if (count == 0) return;
        {
            std::unique_lock lock(mutex_);
            body_ = &body;
            count_ = count;
            pending_ = workers_ - 1;
            ++generation_;
        }
        start_cv_.notify_all();

        run_chunk(0);

        {
            std::unique_lock lock(mutex_);
            done_cv_.wait(lock, [this] { return pending_ == 0; });
            body_ = nullptr;
        }
        if (failure_) {
            auto f = failure_;
            failure_ = nullptr;
            std::rethrow_exception(f);
        }
    }

private:
    void run_chunk(std::size_t worker) {
        const std::size_t chunk = (count_ + workers_ - 1) / workers_;
        const std::size_t first = worker * chunk;
        const std::size_t last = std::min(count_, first + chunk);
        for (std::size_t item = first; item < last; ++item) {
            try {
                (*body_)(worker, item);
            } catch (const SolverError&) {
                std::unique_lock lock(mutex_);
                if (!failure_) failure_ = std::current_exception();
            } catch (const std::exception& e) {
                std::unique_lock lock(mutex_);
                if (!failure_)
                    failure_ = std::make_exception_ptr(WorkerPanic(worker, e.what()));
            } catch (...) {
                std::unique_lock lock(mutex_);
                if (!failure_)
                    failure_ = std::make_exception_ptr(WorkerPanic(worker, "unknown exception"));
            }
        }
    }

    void worker_loop(std::size_t worker) {
        std::size_t seen = 0;
        for (;;) {
            {
                std::unique_lock lock(mutex_);
                start_cv_.wait(lock, [&] { return stop_ || generation_ != seen; });
                if (stop_) return;
                seen = generation_;
            }
            run_chunk(worker);
            {
                std::unique_lock lock(mutex_);
                if (--pending_ == 0) done_cv_.notify_all();
            }
        }
    }

    std::size_t workers_;
    std::vector<std::thread> threads_;

    std::mutex mutex_;
    std::condition_variable start_cv_;
    std::condition_variable done_cv_;
    const std::function<void(std::size_t, std::size_t)>* body_ = nullptr;
    std::size_t count_ = 0;
    std::size_t pending_ = 0;
    std::size_t generation_ = 0;
    bool stop_ = false;
    std::exception_ptr failure_;
};

}  // namespace parsweep
