#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace linkne {

/// Finite monoid (or group) given by its full multiplication table.
/// Construction validates closure, associativity and the unit law.
class MulTable {
 public:
  MulTable(std::size_t size, std::vector<std::uint32_t> table, std::size_t unit,
           std::vector<std::string> labels);

  std::size_t size() const { return size_; }
  std::size_t unit() const { return unit_; }
  std::uint32_t at(std::size_t a, std::size_t b) const { return table_[a * size_ + b]; }
  const std::vector<std::uint32_t>& raw() const { return table_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  std::optional<std::size_t> index_of(const std::string& label) const;

  bool is_commutative() const { return commutative_; }
  /// Every element has a two-sided inverse.
  bool is_group() const { return group_; }

  friend bool operator==(const MulTable& a, const MulTable& b) {
    return a.size_ == b.size_ && a.unit_ == b.unit_ && a.table_ == b.table_;
  }

 private:
  std::size_t size_;
  std::vector<std::uint32_t> table_;
  std::size_t unit_;
  std::vector<std::string> labels_;
  bool commutative_ = false;
  bool group_ = false;
};

using TablePtr = std::shared_ptr<const MulTable>;

}  // namespace linkne
