#pragma once

// Parallel trial execution. Trial i always draws from the stream derived
// from (master_seed, tag(cell), i), and results are stored by index and
// reduced in index order afterwards, so output does not depend on the
// number of workers or on scheduling.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <string_view>
#include <thread>
#include <vector>

#include "randpoly/errors.hpp"
#include "randpoly/random.hpp"

namespace randpoly::harness {

template <class Result, class TrialFn>
std::vector<Result> run_trials(std::uint64_t trials, int workers, std::uint64_t master_seed,
                               std::string_view cell_label, TrialFn&& trial) {
  require(workers >= 1, "workers must be >= 1");
  const std::uint64_t tag = fnv1a64(cell_label);
  std::vector<Result> results(trials);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  constexpr std::uint64_t kChunk = 64;

  auto work = [&] {
    for (;;) {
      const std::uint64_t begin = next.fetch_add(kChunk);
      if (begin >= trials) return;
      const std::uint64_t end = std::min(trials, begin + kChunk);
      for (std::uint64_t i = begin; i < end; ++i) {
        try {
          RandomStream stream = RandomStream::for_trial(master_seed, tag, i);
          results[i] = trial(stream, i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next.store(trials);
          return;
        }
      }
    }
  };

  const auto thread_count = static_cast<std::uint64_t>(workers);
  if (thread_count == 1 || trials <= kChunk) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(thread_count);
    for (std::uint64_t w = 0; w < thread_count; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

}  // namespace randpoly::harness
