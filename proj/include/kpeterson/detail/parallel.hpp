#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <memory>
#include <optional>
#include <thread>

namespace kpeterson {

template <class R>
std::vector<R> run_parallel(const CartanDatum& d, const std::vector<std::function<R(NilHecke&)>>& tasks, int threads) {
  const auto finite = std::make_shared<const FiniteWeylGroup>(d);
  const std::size_t workers = std::clamp<std::size_t>(threads < 1 ? 1 : threads, 1, std::max<std::size_t>(tasks.size(), 1));
  std::vector<std::optional<R>> out(tasks.size());
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](std::size_t id) {
    try {
      NilHecke nh(finite);
      for (std::size_t k; (k = next.fetch_add(1)) < tasks.size();) out[k].emplace(tasks[k](nh));
    } catch (...) {
      errors[id] = std::current_exception();
      next = tasks.size();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<R> result;
  result.reserve(out.size());
  for (auto& r : out) result.push_back(std::move(*r));
  return result;
}

}  // namespace kpeterson
