#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "glr/error.hpp"
#include "glr/partitions.hpp"

namespace glr {

// One subset of {1..n} per flag of the sun quiver.
class SubsetTuple {
 public:
  SubsetTuple() = default;
  SubsetTuple(int n, std::vector<Subset> subsets) : n_(n), subsets_(std::move(subsets)) {
    if (subsets_.size() < 4 || subsets_.size() % 2 != 0)
      fail(ErrorKind::UnsupportedShape, "subset tuples need an even number m >= 4 of flags, got m=" +
                                            std::to_string(subsets_.size()));
    for (const auto& s : subsets_)
      if (s.universe() != n)
        fail(ErrorKind::InvalidInput, "subset " + s.str() + " is not a subset of {1.." +
                                          std::to_string(n) + "}");
  }

  // Flag i (1-based) is subsets()[i-1].
  static SubsetTuple from_masks(int n, const std::vector<std::uint64_t>& masks) {
    std::vector<Subset> s;
    for (auto mask : masks) s.push_back(Subset::from_mask(n, mask));
    return SubsetTuple(n, std::move(s));
  }

  int n() const noexcept { return n_; }
  std::size_t m() const noexcept { return subsets_.size(); }
  const std::vector<Subset>& subsets() const noexcept { return subsets_; }
  const Subset& operator[](std::size_t idx) const { return subsets_.at(idx); }

  // Cyclic access by 1-based flag number; flag 0 is flag m.
  const Subset& flag(int i) const {
    const int m = static_cast<int>(subsets_.size());
    return subsets_[static_cast<std::size_t>(((i - 1) % m + m) % m)];
  }

  int total_size() const {
    int t = 0;
    for (const auto& s : subsets_) t += s.size();
    return t;
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < subsets_.size(); ++i) {
      if (i) s += ",";
      s += subsets_[i].str();
    }
    return s + ")";
  }

  friend bool operator==(const SubsetTuple&, const SubsetTuple&) = default;
  // Canonical order: total cardinality first, then flag by flag.
  friend std::strong_ordering operator<=>(const SubsetTuple& a, const SubsetTuple& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    if (auto c = a.subsets_.size() <=> b.subsets_.size(); c != 0) return c;
    if (auto c = a.total_size() <=> b.total_size(); c != 0) return c;
    for (std::size_t i = 0; i < a.subsets_.size(); ++i)
      if (auto c = a.subsets_[i] <=> b.subsets_[i]; c != 0) return c;
    return std::strong_ordering::equal;
  }

 private:
  int n_ = 0;
  std::vector<Subset> subsets_;
};

}  // namespace glr
