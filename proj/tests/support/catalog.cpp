#include "catalog.hpp"

#include <stdexcept>

namespace ahyp::testing {

namespace {

bool in_range(const VarietyDescriptor& v, int lo, int hi) {
  return v.dimension >= lo && v.dimension <= hi;
}

template <typename F>
void try_add(std::vector<VarietyDescriptor>& out, int lo, int hi, F make) {
  try {
    VarietyDescriptor v = make();
    if (in_range(v, lo, hi)) out.push_back(std::move(v));
  } catch (const std::invalid_argument&) {
    // outside the validity gate
  }
}

}  // namespace

std::vector<VarietyDescriptor> single_factor_instances(int min_dim, int max_dim) {
  std::vector<VarietyDescriptor> out;
  for (int n = 1; n <= max_dim; ++n) try_add(out, min_dim, max_dim, [&] { return projective(n); });
  for (int n = 2; n <= max_dim + 2; ++n) {
    for (int k = 1; k < n; ++k) try_add(out, min_dim, max_dim, [&] { return grassmannian(k, n); });
  }
  for (int n = 2; n <= 2 * max_dim + 4; ++n) {
    for (int k = 1; 3 * k <= 2 * n; ++k) {
      try_add(out, min_dim, max_dim, [&] { return orthogonal(k, n); });
      try_add(out, min_dim, max_dim, [&] { return symplectic(k, n); });
    }
  }
  for (int n = 3; n <= 7; ++n) {
    for (unsigned mask = 1; mask < (1u << (n - 1)); ++mask) {
      std::vector<int> ks;
      for (int k = 1; k < n; ++k) {
        if (mask & (1u << (k - 1))) ks.push_back(k);
      }
      if (ks.size() < 2) continue;
      try_add(out, min_dim, max_dim, [&] { return flag(ks, n); });
    }
  }
  return out;
}

std::vector<VarietyDescriptor> catalog_instances(int min_dim, int max_dim) {
  std::vector<VarietyDescriptor> out = single_factor_instances(min_dim, max_dim);
  const auto small = single_factor_instances(1, max_dim - 1);
  for (std::size_t i = 0; i < small.size(); ++i) {
    for (std::size_t j = i; j < small.size(); ++j) {
      if (small[i].dimension + small[j].dimension > max_dim) continue;
      try_add(out, min_dim, max_dim, [&] { return product({small[i], small[j]}); });
    }
  }
  const std::vector<VarietyDescriptor> pieces{projective(1), projective(2), projective(3),
                                              grassmannian(2, 4)};
  for (std::size_t a = 0; a < pieces.size(); ++a) {
    for (std::size_t b = a; b < pieces.size(); ++b) {
      for (std::size_t c = b; c < pieces.size(); ++c) {
        try_add(out, min_dim, max_dim, [&] { return product({pieces[a], pieces[b], pieces[c]}); });
      }
    }
  }
  return out;
}

}  // namespace ahyp::testing
