#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

#include "skc/search.hpp"

namespace skc::detail {

// Shared state of one search run: node/time budget accounting, the atomic
// incumbent used for pruning, and the best witness found so far.  Witness
// ties are broken by preferring the lowest item index, so the outcome does
// not depend on worker scheduling.
class Driver {
  public:
    explicit Driver(const Budget& b, std::int64_t initial_value = -1)
        : budget_(b), incumbent_(initial_value), start_(std::chrono::steady_clock::now()) {}

    std::int64_t incumbent() const { return incumbent_.load(std::memory_order_relaxed); }

    bool stopped() const { return stop_.load(std::memory_order_relaxed); }

    // Counts one search node; returns false when the budget is exhausted.
    bool tick(std::int64_t& local) {
        if (++local >= 1024) flush(local);
        return !stopped();
    }

    void flush(std::int64_t& local) {
        if (local == 0) return;
        nodes_.fetch_add(local, std::memory_order_relaxed);
        local = 0;
        if (nodes_.load(std::memory_order_relaxed) > budget_.max_nodes) {
            out_of_nodes_ = true;
            stop_ = true;
        }
        if (elapsed() > budget_.max_secs) {
            out_of_time_ = true;
            stop_ = true;
        }
    }

    // Installs a candidate; returns true if it became the incumbent.
    bool offer(std::int64_t value, std::int64_t item, const Witness& w) {
        std::lock_guard<std::mutex> lock(mu_);
        if (value < best_value_ || (value == best_value_ && have_witness_ && item >= best_item_))
            return false;
        best_value_ = value;
        best_item_ = item;
        best_witness_ = w;
        have_witness_ = true;
        std::int64_t cur = incumbent_.load(std::memory_order_relaxed);
        while (cur < value && !incumbent_.compare_exchange_weak(cur, value)) {
        }
        return true;
    }

    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

    void finish(SearchResult& r) {
        r.nodes = nodes_.load();
        r.seconds = elapsed();
        r.best_value = best_value_;
        r.witness = best_witness_;
        r.status = out_of_time_ ? SearchStatus::TimedOut
                   : out_of_nodes_ ? SearchStatus::LowerBoundOnly
                                   : SearchStatus::Optimal;
    }

  private:
    Budget budget_;
    std::atomic<std::int64_t> nodes_{0};
    std::atomic<std::int64_t> incumbent_;
    std::atomic<bool> stop_{false};
    std::atomic<bool> out_of_nodes_{false}, out_of_time_{false};
    std::chrono::steady_clock::time_point start_;

    std::mutex mu_;
    std::int64_t best_value_ = -1;
    std::int64_t best_item_ = 0;
    bool have_witness_ = false;
    Witness best_witness_;
};

// Runs fn(item) over items [0, num_items) on the requested number of
// workers, handing out items through a shared counter.
inline void run_items(int workers, std::int64_t num_items,
                      const std::function<void(std::int64_t)>& fn) {
    workers = std::max(1, workers);
    if (workers == 1) {
        for (std::int64_t i = 0; i < num_items; ++i) fn(i);
        return;
    }
    std::atomic<std::int64_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::int64_t i = next.fetch_add(1); i < num_items; i = next.fetch_add(1)) fn(i);
        });
    for (auto& t : pool) t.join();
}

void validate_budget(const Budget& b);

}  // namespace skc::detail
