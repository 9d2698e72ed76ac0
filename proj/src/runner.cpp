#include <algorithm>
#include <cstdlib>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "superdom/harness.hpp"

namespace superdom {

namespace {

constexpr std::uint64_t kChunk = std::uint64_t{1} << 14;

Outcome guarded(const std::function<Outcome(std::uint64_t)>& check, std::uint64_t i) {
  try {
    return check(i);
  } catch (const std::exception& e) {
    return Outcome::fail({}, "no exception", std::string("exception: ") + e.what());
  }
}

void merge(const Outcome& o, TheoremCheck& into) {
  switch (o.status) {
    case Outcome::Status::absent: return;
    case Outcome::Status::pass: ++into.passes; break;
    case Outcome::Status::skip: ++into.skipped; break;
    case Outcome::Status::fail:
      ++into.failure_count;
      if (into.failures.size() < TheoremCheck::kMaxFailureRecords) into.failures.push_back(o.failure);
      break;
  }
  ++into.instances;
}

}  // namespace

int default_workers() {
  if (const char* env = std::getenv("SUPERDOM_WORKERS")) {
    const int w = std::atoi(env);
    if (w >= 1) return w;
  }
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void run_indexed(std::uint64_t count, const std::function<Outcome(std::uint64_t)>& check, const RunOptions& options,
                 TheoremCheck& into) {
  std::vector<Outcome> buffer;
  for (std::uint64_t base = 0; base < count; base += kChunk) {
    const auto len = static_cast<std::int64_t>(std::min(kChunk, count - base));
    buffer.assign(static_cast<std::size_t>(len), Outcome{});
    if (options.workers <= 1) {
      // Serial reference path.
      for (std::int64_t i = 0; i < len; ++i) buffer[static_cast<std::size_t>(i)] = guarded(check, base + i);
    } else {
#pragma omp parallel for schedule(dynamic, 8) num_threads(options.workers)
      for (std::int64_t i = 0; i < len; ++i) buffer[static_cast<std::size_t>(i)] = guarded(check, base + i);
    }
    for (const Outcome& o : buffer) merge(o, into);
  }
}

}  // namespace superdom
