#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace ahyp {

/// A weakly decreasing sequence of nonnegative integers with trailing zeros
/// removed. Indexes Schubert classes; the empty partition is the unit class.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  std::span<const int> parts() const noexcept { return parts_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int size() const noexcept;
  bool empty() const noexcept { return parts_.empty(); }

  /// Part i (0-based); zero past the last nonzero part.
  int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

  Partition conjugate() const;

  std::string to_string() const;  // "[2,1]"

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
};

/// The Grassmannian G(k,n) of k-planes in an n-dimensional space, viewed as
/// the box of partitions with at most k parts, each at most n-k.
class RingContext {
 public:
  RingContext(int k, int n);

  int k() const noexcept { return k_; }
  int n() const noexcept { return n_; }
  int width() const noexcept { return n_ - k_; }
  int dimension() const noexcept { return k_ * (n_ - k_); }

  bool fits(const Partition& lambda) const noexcept;
  Partition top() const;  // the full k x (n-k) box

  /// The dual Grassmannian G(n-k, n).
  RingContext dual() const { return RingContext(n_ - k_, n_); }

  friend bool operator==(const RingContext&, const RingContext&) = default;

 private:
  int k_;
  int n_;
};

}  // namespace ahyp
