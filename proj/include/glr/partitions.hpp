#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "glr/error.hpp"

namespace glr {

using Part = std::int64_t;

// Weakly decreasing integer sequence, identified up to trailing zeros.
// Entries may be negative (GL(n) highest weights); indexing past the stored
// length yields 0.
class IntSequence {
 public:
  IntSequence() = default;
  IntSequence(std::initializer_list<Part> parts)
      : IntSequence(std::vector<Part>(parts)) {}
  explicit IntSequence(std::vector<Part> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 1; i < parts_.size(); ++i) {
      if (parts_[i - 1] < parts_[i])
        fail(ErrorKind::InvalidInput,
             "sequence " + format(parts_) + " is not weakly decreasing");
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  }

  const std::vector<Part>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }

  Part operator[](std::size_t i) const noexcept {
    return i < parts_.size() ? parts_[i] : 0;
  }

  Part size() const noexcept {
    return std::accumulate(parts_.begin(), parts_.end(), Part{0});
  }

  bool is_partition() const noexcept {
    return parts_.empty() || parts_.back() >= 0;
  }

  // Exactly n entries, zero padded.
  std::vector<Part> padded(std::size_t n) const {
    if (parts_.size() > n)
      fail(ErrorKind::InvalidInput, "sequence " + str() + " has more than " +
                                        std::to_string(n) + " parts");
    std::vector<Part> out(parts_);
    out.resize(n, 0);
    return out;
  }

  std::string str() const { return format(parts_); }

  friend bool operator==(const IntSequence&, const IntSequence&) = default;
  friend auto operator<=>(const IntSequence&, const IntSequence&) = default;

  static std::string format(const std::vector<Part>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(v[i]);
    }
    return s + ")";
  }

 private:
  std::vector<Part> parts_;
};

class Partition : public IntSequence {
 public:
  Partition() = default;
  Partition(std::initializer_list<Part> parts)
      : Partition(std::vector<Part>(parts)) {}
  explicit Partition(std::vector<Part> parts)
      : Partition(IntSequence(std::move(parts))) {}
  explicit Partition(const IntSequence& seq) : IntSequence(seq) {
    if (!is_partition())
      fail(ErrorKind::InvalidInput,
           "sequence " + seq.str() + " has a negative part");
  }
};

inline std::optional<Partition> as_partition(const IntSequence& seq) {
  if (!seq.is_partition()) return std::nullopt;
  return Partition(seq);
}

// Subset of {1..n}, kept sorted. n <= 62 so a 64-bit mask always fits.
class Subset {
 public:
  static constexpr int kMaxUniverse = 62;

  Subset() = default;
  Subset(int n, std::vector<int> elements) : n_(n), elems_(std::move(elements)) {
    if (n < 0 || n > kMaxUniverse)
      fail(ErrorKind::InvalidInput,
           "subset universe size " + std::to_string(n) + " outside 0.." +
               std::to_string(kMaxUniverse));
    std::sort(elems_.begin(), elems_.end());
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      if (elems_[i] < 1 || elems_[i] > n)
        fail(ErrorKind::InvalidInput, "subset element " +
                                          std::to_string(elems_[i]) +
                                          " outside {1.." + std::to_string(n) + "}");
      if (i && elems_[i] == elems_[i - 1])
        fail(ErrorKind::InvalidInput,
             "repeated subset element " + std::to_string(elems_[i]));
    }
  }

  static Subset full(int n) {
    std::vector<int> e(static_cast<std::size_t>(std::max(n, 0)));
    std::iota(e.begin(), e.end(), 1);
    return Subset(n, std::move(e));
  }

  static Subset from_mask(int n, std::uint64_t mask) {
    std::vector<int> e;
    for (int z = 1; z <= n; ++z)
      if (mask >> (z - 1) & 1U) e.push_back(z);
    return Subset(n, std::move(e));
  }

  int universe() const noexcept { return n_; }
  const std::vector<int>& elements() const noexcept { return elems_; }
  int size() const noexcept { return static_cast<int>(elems_.size()); }
  bool empty() const noexcept { return elems_.empty(); }
  bool is_full() const noexcept { return size() == n_; }

  bool contains(int z) const {
    return std::binary_search(elems_.begin(), elems_.end(), z);
  }

  std::uint64_t mask() const noexcept {
    std::uint64_t m = 0;
    for (int z : elems_) m |= std::uint64_t{1} << (z - 1);
    return m;
  }

  std::string str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(elems_[i]);
    }
    return s + "}";
  }

  // Canonical order: by cardinality, then lexicographically.
  friend bool operator==(const Subset&, const Subset&) = default;
  friend std::strong_ordering operator<=>(const Subset& a, const Subset& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    if (auto c = a.elems_.size() <=> b.elems_.size(); c != 0) return c;
    return a.elems_ <=> b.elems_;
  }

 private:
  int n_ = 0;
  std::vector<int> elems_;
};

inline Partition conjugate(const Partition& lambda) {
  if (lambda.empty()) return {};
  std::vector<Part> out(static_cast<std::size_t>(lambda[0]), 0);
  for (Part v : lambda.parts())
    for (Part j = 0; j < v; ++j) ++out[static_cast<std::size_t>(j)];
  return Partition(std::move(out));
}

// For I = {z_1 < ... < z_r}: (z_r - r, ..., z_1 - 1).
inline Partition lambda_of_set(const Subset& I) {
  const auto& z = I.elements();
  const std::size_t r = z.size();
  std::vector<Part> out(r);
  for (std::size_t k = 0; k < r; ++k)
    out[k] = z[r - 1 - k] - static_cast<Part>(r - k);
  return Partition(std::move(out));
}

// alpha fits inside lambda as Young diagrams.
inline bool contains(const Partition& alpha, const Partition& lambda) {
  if (alpha.length() > lambda.length()) return false;
  for (std::size_t i = 0; i < alpha.length(); ++i)
    if (alpha[i] > lambda[i]) return false;
  return true;
}

inline IntSequence stretch(const IntSequence& lambda, Part r) {
  if (r <= 0)
    fail(ErrorKind::InvalidInput,
         "stretch factor must be positive, got " + std::to_string(r));
  std::vector<Part> out(lambda.parts());
  for (Part& v : out) v *= r;
  return IntSequence(std::move(out));
}

inline Partition stretch(const Partition& lambda, Part r) {
  return Partition(stretch(static_cast<const IntSequence&>(lambda), r));
}

inline Partition meet(const Partition& a, const Partition& b) {
  const std::size_t len = std::min(a.length(), b.length());
  std::vector<Part> out(len);
  for (std::size_t i = 0; i < len; ++i) out[i] = std::min(a[i], b[i]);
  return Partition(std::move(out));
}

// Rectangle (width^rows).
inline Partition rectangle(Part width, std::size_t rows) {
  if (width <= 0) return {};
  return Partition(std::vector<Part>(rows, width));
}

namespace detail {

template <class F>
void partitions_in_box_rec(const Partition& box, std::size_t row, Part remaining,
                           Part cap, std::vector<Part>& cur, F& f) {
  if (remaining == 0) {
    f(Partition(cur));
    return;
  }
  if (row >= box.length()) return;
  // Rows below cannot hold more than cap each.
  Part room = 0;
  for (std::size_t r = row; r < box.length(); ++r) room += std::min(cap, box[r]);
  if (room < remaining) return;
  const Part hi = std::min({cap, box[row], remaining});
  for (Part v = hi; v >= 1; --v) {
    cur.push_back(v);
    partitions_in_box_rec(box, row + 1, remaining - v, v, cur, f);
    cur.pop_back();
  }
}

}  // namespace detail

// Calls f(alpha) for every partition alpha inside box with |alpha| = size,
// in reverse lexicographic order.
template <class F>
void for_each_partition_in(const Partition& box, Part size, F&& f) {
  if (size < 0 || size > box.size()) return;
  std::vector<Part> cur;
  cur.reserve(box.length());
  detail::partitions_in_box_rec(box, 0, size, box.empty() ? 0 : box[0], cur, f);
}

inline std::vector<Partition> partitions_in(const Partition& box, Part size) {
  std::vector<Partition> out;
  for_each_partition_in(box, size, [&](const Partition& p) { out.push_back(p); });
  return out;
}

inline std::vector<Partition> all_partitions_in(const Partition& box) {
  std::vector<Partition> out;
  for (Part s = 0; s <= box.size(); ++s)
    for_each_partition_in(box, s, [&](const Partition& p) { out.push_back(p); });
  return out;
}

}  // namespace glr

template <>
struct std::hash<glr::IntSequence> {
  std::size_t operator()(const glr::IntSequence& s) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (glr::Part v : s.parts()) {
      h ^= std::hash<glr::Part>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h ^ s.length();
  }
};

template <>
struct std::hash<glr::Partition> {
  std::size_t operator()(const glr::Partition& p) const noexcept {
    return std::hash<glr::IntSequence>{}(p);
  }
};
