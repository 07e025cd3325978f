#include "ahyp/partition.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ahyp {

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) {
      throw std::invalid_argument("partition parts must be nonnegative");
    }
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::size() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<int> out(parts_.front(), 0);
  for (int part : parts_) {
    for (int c = 0; c < part; ++c) ++out[c];
  }
  return Partition(std::move(out));
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  os << ']';
  return os.str();
}

RingContext::RingContext(int k, int n) : k_(k), n_(n) {
  if (k < 1 || n <= k) {
    throw std::invalid_argument("Grassmannian G(k,n) requires 1 <= k < n, got G(" +
                                std::to_string(k) + "," + std::to_string(n) + ")");
  }
}

bool RingContext::fits(const Partition& lambda) const noexcept {
  return lambda.length() <= k_ && lambda[0] <= width();
}

Partition RingContext::top() const {
  return Partition(std::vector<int>(k_, width()));
}

}  // namespace ahyp
