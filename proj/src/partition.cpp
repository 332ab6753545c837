#include "linkne/partition.hpp"

#include <algorithm>
#include <sstream>

namespace linkne {

std::size_t Partition::size() const {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.size();
  return n;
}

std::vector<std::uint8_t> Partition::rgs() const {
  std::vector<std::uint8_t> out(size());
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (auto e : blocks[b]) out[e] = static_cast<std::uint8_t>(b);
  }
  return out;
}

std::string Partition::to_string() const {
  std::ostringstream out;
  for (const auto& b : blocks) {
    out << "{";
    for (std::size_t i = 0; i < b.size(); ++i) out << (i ? "," : "") << b[i];
    out << "}";
  }
  return out.str();
}

Partition partition_from_rgs(const std::vector<std::uint8_t>& rgs) {
  Partition p;
  for (std::size_t i = 0; i < rgs.size(); ++i) {
    if (rgs[i] >= p.blocks.size()) p.blocks.resize(rgs[i] + 1u);
    p.blocks[rgs[i]].push_back(i);
  }
  return p;
}

std::vector<Partition> enumerate_set_partitions(std::size_t n) {
  std::vector<Partition> out;
  for_each_rgs(n, [&](const std::vector<std::uint8_t>& a) { out.push_back(partition_from_rgs(a)); });
  return out;
}

std::uint64_t bell_number(std::size_t n) {
  // Bell triangle.
  std::vector<std::uint64_t> row{1};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (auto v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

}  // namespace linkne
