// Shared plumbing: enumeration caps, the cap-exceeded error, and small
// counting helpers used by the exhaustive searches throughout the library.
#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pmc {

// Thrown when an exhaustive enumeration would exceed a configured cap.
// Enumerations abort with this error; they never truncate silently.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Caps for the exhaustive enumerations. Defaults are sized for desk-scale
// universes (k <= 4, arity <= 3, breadth <= 4).
struct Limits {
  std::uint64_t max_collection_size = std::uint64_t{1} << 22;  // matrices per collection
  std::uint64_t max_assignments = std::uint64_t{1} << 24;      // Skolem maps per minor candidate
  std::uint64_t max_tables = std::uint64_t{1} << 22;           // operation tables per arity
  std::uint64_t max_ops = std::uint64_t{1} << 18;              // operations in a closure
  std::uint64_t max_table_length = std::uint64_t{1} << 24;     // entries in one table
  std::uint64_t max_terms = std::uint64_t{1} << 20;            // terms per enumeration
  std::uint64_t max_family = std::uint64_t{1} << 16;           // collections materialized per family
};

inline void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

// base^exp, saturating at `cap` instead of overflowing.
inline std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp,
                                    std::uint64_t cap) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (result > cap / (base == 0 ? 1 : base)) return cap + 1;
    result *= base;
    if (result > cap) return cap + 1;
  }
  return result;
}

// Calls fn once per length-n tuple over {0,...,k-1}, in lexicographic order
// with the last coordinate varying fastest. n = 0 yields the empty tuple.
template <typename Fn>
void for_each_tuple(int k, int n, Fn&& fn) {
  std::vector<int> digits(static_cast<std::size_t>(n), 0);
  for (;;) {
    fn(std::span<const int>(digits));
    int i = n - 1;
    while (i >= 0 && digits[static_cast<std::size_t>(i)] == k - 1) {
      digits[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++digits[static_cast<std::size_t>(i)];
  }
}

}  // namespace pmc
