#pragma once

#include <cstddef>
#include <cstdint>

namespace gf2 {

// Operation counters used by the structural tests and the benchmark driver.
// Counters are per thread; reset before the region of interest.
struct OpCounters {
  std::uint64_t table_builds = 0;
  std::uint64_t table_row_additions = 0;
  // Fused table-row additions into destination rows (one per row per stripe group).
  std::uint64_t m4rm_row_writes = 0;
  std::uint64_t m4rm_stripe_groups = 0;

  std::uint64_t winograd_steps = 0;
  std::uint64_t winograd_products = 0;
  std::uint64_t winograd_additions = 0;
  std::uint64_t winograd_temporaries = 0;
  std::uint64_t winograd_levels = 0;
  std::uint64_t winograd_base_cases = 0;

  std::uint64_t strassen_calls = 0;
  std::uint64_t strassen_calls_in_fixup = 0;
  std::uint64_t peel_fixups = 0;
};

OpCounters& counters() noexcept;
void reset_counters() noexcept;

// Byte counts of live BitMatrix storage across all threads.
struct MemoryStats {
  std::size_t live_bytes = 0;
  std::size_t peak_bytes = 0;
};

MemoryStats memory_stats() noexcept;
// Resets the peak to the current live count.
void reset_peak_memory() noexcept;

namespace detail {
void note_alloc(std::size_t bytes) noexcept;
void note_free(std::size_t bytes) noexcept;
}  // namespace detail

}  // namespace gf2
