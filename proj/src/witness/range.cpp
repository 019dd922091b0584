#include <algorithm>
#include <chrono>
#include <exception>
#include <thread>

#include "lamsol/witness.hpp"

namespace lamsol {

namespace {

using Outcome = std::optional<WitnessRecord>;

void search_batch(const std::vector<PrimePower>& todo, std::size_t begin, std::size_t end,
                  const SearchPolicy& policy, FCache& cache, unsigned workers,
                  std::vector<Outcome>& out) {
  out.assign(end - begin, std::nullopt);
  auto work = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      const auto [p, a] = todo[begin + i];
      out[i] = find_witness(p, a, policy.limit_for(p, a), cache);
    }
  };
  const std::size_t n = end - begin;
  workers = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, workers), n));
  if (workers <= 1) {
    work(0, n);
    return;
  }
  // Slots are filled by index, so the merged order never depends on scheduling.
  const std::size_t chunk = (n + workers - 1) / workers;
  std::vector<std::exception_ptr> errors((n + chunk - 1) / chunk);
  {
    std::vector<std::jthread> threads;
    for (std::size_t lo = 0, t = 0; lo < n; lo += chunk, ++t) {
      threads.emplace_back([&, lo, t] {
        try {
          work(lo, std::min(n, lo + chunk));
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

RangeReport verify_range(const RangeMode& mode, const SearchPolicy& policy, const RunControl& control) {
  const auto started = std::chrono::steady_clock::now();
  FCache private_cache;
  FCache& cache = control.cache ? *control.cache : private_cache;

  Checkpoint state{mode, std::nullopt, {}, {}};
  if (control.resume) {
    if (!(control.resume->mode == mode))
      throw CheckpointError("checkpoint mode '" + to_string(control.resume->mode) +
                            "' does not match requested mode '" + to_string(mode) + "'");
    state = *control.resume;
  }

  const std::vector<PrimePower> all = prime_powers_in(mode);
  std::size_t pos = 0;
  if (state.last_completed) {
    pos = static_cast<std::size_t>(
        std::upper_bound(all.begin(), all.end(), *state.last_completed) - all.begin());
  }
  std::size_t stop = all.size();
  if (control.stop_after) {
    stop = std::max(pos, static_cast<std::size_t>(
                             std::upper_bound(all.begin(), all.end(), *control.stop_after) - all.begin()));
  }

  const std::size_t batch = std::max<std::size_t>(1, control.batch_size);
  std::vector<Outcome> outcomes;
  while (pos < stop) {
    const std::size_t end = std::min(stop, pos + batch);
    search_batch(all, pos, end, policy, cache, control.workers, outcomes);
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      if (outcomes[i])
        state.records.push_back(*outcomes[i]);
      else
        state.failures.push_back(all[pos + i]);
    }
    state.last_completed = all[end - 1];
    pos = end;
    if (control.checkpoint_path) checkpoint_save(state, *control.checkpoint_path);
  }

  RangeReport report;
  report.mode = mode;
  report.records = std::move(state.records);
  report.failures = std::move(state.failures);
  report.witnessed = report.records.size();
  report.examined = report.witnessed + report.failures.size();
  report.complete = pos == all.size();
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

}  // namespace lamsol
