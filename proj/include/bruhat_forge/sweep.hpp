#pragma once

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace bruhat {

struct SweepResult {
  std::string name;
  std::size_t checked = 0;
  std::vector<std::string> failures;  // canonical literals plus what went wrong

  bool passed() const { return failures.empty(); }
  void merge(SweepResult other) {
    checked += other.checked;
    for (auto& f : other.failures) failures.push_back(std::move(f));
  }
};

// BRUHAT_FORGE_JOBS if set, otherwise the hardware thread count.
inline int default_jobs() {
  if (const char* env = std::getenv("BRUHAT_FORGE_JOBS")) {
    const int j = std::atoi(env);
    if (j > 0) return j;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

// Runs check(items[i]) on `jobs` workers. Failures are reported in item order,
// so the summary does not depend on scheduling.
template <class T, class Check>
SweepResult parallel_sweep(const std::string& name, const std::vector<T>& items, Check check, int jobs = 0) {
  if (jobs <= 0) jobs = default_jobs();
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(items.size())));
  std::vector<std::optional<std::string>> verdicts(items.size());
  std::exception_ptr error;
  std::mutex error_mu;
  auto worker = [&](int id) {
    try {
      for (std::size_t i = static_cast<std::size_t>(id); i < items.size(); i += static_cast<std::size_t>(jobs))
        verdicts[i] = check(items[i]);
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mu);
      if (!error) error = std::current_exception();
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int id = 0; id < jobs; ++id) pool.emplace_back(worker, id);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
  SweepResult out{name, items.size(), {}};
  for (auto& v : verdicts)
    if (v) out.failures.push_back(std::move(*v));
  return out;
}

}  // namespace bruhat
