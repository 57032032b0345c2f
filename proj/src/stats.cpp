#include <gf2/stats.hpp>

#include <atomic>

namespace gf2 {

namespace {
thread_local OpCounters t_counters;
std::atomic<std::size_t> g_live{0};
std::atomic<std::size_t> g_peak{0};
}  // namespace

OpCounters& counters() noexcept { return t_counters; }
void reset_counters() noexcept { t_counters = OpCounters{}; }

MemoryStats memory_stats() noexcept {
  return {g_live.load(std::memory_order_relaxed), g_peak.load(std::memory_order_relaxed)};
}

void reset_peak_memory() noexcept { g_peak.store(g_live.load(std::memory_order_relaxed), std::memory_order_relaxed); }

namespace detail {

void note_alloc(std::size_t bytes) noexcept {
  const std::size_t now = g_live.fetch_add(bytes, std::memory_order_relaxed) + bytes;
  std::size_t peak = g_peak.load(std::memory_order_relaxed);
  while (now > peak && !g_peak.compare_exchange_weak(peak, now, std::memory_order_relaxed)) {
  }
}

void note_free(std::size_t bytes) noexcept { g_live.fetch_sub(bytes, std::memory_order_relaxed); }

}  // namespace detail
}  // namespace gf2
