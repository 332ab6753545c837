#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace linkne {

/// Set partition of {0..n-1}. Blocks are sorted internally and ordered by
/// their least element.
struct Partition {
  std::vector<std::vector<std::size_t>> blocks;

  std::size_t size() const;
  /// Restricted growth string: rgs[i] is the block index of element i.
  std::vector<std::uint8_t> rgs() const;
  std::string to_string() const;  // e.g. "{0,2}{1}"

  friend bool operator==(const Partition&, const Partition&) = default;
};

Partition partition_from_rgs(const std::vector<std::uint8_t>& rgs);

/// All set partitions of an n-set in lexicographic order of their restricted
/// growth strings (so index 0 is the single block, the last is all singletons).
std::vector<Partition> enumerate_set_partitions(std::size_t n);

/// Calls visit(rgs) for every restricted growth string of length n, in
/// lexicographic order, without materialising the list.
template <typename Visit>
void for_each_rgs(std::size_t n, Visit visit) {
  if (n == 0) return;
  std::vector<std::uint8_t> a(n, 0);
  std::vector<std::uint8_t> maxp(n, 1);  // 1 + max(a[0..i-1])
  maxp[0] = 0;
  for (;;) {
    visit(a);
    std::size_t i = n - 1;
    for (;;) {
      if (i == 0) return;
      const std::uint8_t limit = maxp[i];
      if (a[i] < limit) break;
      --i;
    }
    ++a[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      a[j] = 0;
      maxp[j] = static_cast<std::uint8_t>(std::max<int>(maxp[j - 1], a[j - 1] + 1));
    }
  }
}

std::uint64_t bell_number(std::size_t n);

}  // namespace linkne
