#include "ahyp/section_dominating.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace ahyp {

MonomialSpace::MonomialSpace(int n, int d) : n_(n), d_(d) {
  if (n < 1 || d < 0) throw std::invalid_argument("MonomialSpace requires n >= 1, d >= 0");
  std::vector<int> e(n + 1, 0);
  // Lexicographically descending exponent vectors, so x_0^d comes first.
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == n) {
      e[var] = remaining;
      basis_.push_back(e);
      return;
    }
    for (int v = remaining; v >= 0; --v) {
      e[var] = v;
      self(self, var + 1, remaining - v);
    }
  };
  rec(rec, 0, d);
}

std::size_t MonomialSpace::index_of(const std::vector<int>& exponents) const {
  auto it = std::lower_bound(basis_.begin(), basis_.end(), exponents, std::greater<>());
  if (it == basis_.end() || *it != exponents) {
    throw std::invalid_argument("monomial not in the degree-" + std::to_string(d_) + " basis");
  }
  return static_cast<std::size_t>(it - basis_.begin());
}

namespace {

using SparseColumn = std::map<std::size_t, mpq_class>;

// Exact column rank by incremental echelon reduction: each incoming column is
// reduced against the stored pivots (keyed by leading row) until it either
// vanishes or opens a new pivot.
std::size_t rational_rank(const std::vector<SparseColumn>& columns) {
  std::map<std::size_t, SparseColumn> pivots;
  for (SparseColumn v : columns) {
    while (!v.empty()) {
      const auto [lead, value] = *v.begin();
      auto it = pivots.find(lead);
      if (it == pivots.end()) {
        pivots.emplace(lead, std::move(v));
        break;
      }
      const mpq_class factor = value / it->second.at(lead);
      for (const auto& [row, x] : it->second) {
        mpq_class& slot = v[row];
        slot -= factor * x;
        if (slot == 0) v.erase(row);
      }
    }
  }
  return pivots.size();
}

}  // namespace

SectionDominatingCheck check_projective_space(int n, int d) {
  if (n < 1 || d < 1) throw std::invalid_argument("check_projective_space requires n, d >= 1");
  const MonomialSpace target(n, d);
  const MonomialSpace lower(n, d - 1);

  // Row r <-> target monomial r+1; x_0^d (index 0) is not in the target.
  // Column (j, m) is the image of x_j (x) m, j >= 1, m of degree d-1.
  const std::size_t rows = target.size() - 1;
  std::vector<SparseColumn> matrix;
  matrix.reserve(static_cast<std::size_t>(n) * lower.size());
  for (int j = 1; j <= n; ++j) {
    for (const auto& mono : lower.basis()) {
      std::vector<int> image = mono;
      ++image[j];
      const std::size_t row = target.index_of(image);
      if (row == 0) throw std::logic_error("x_0^d in the image of the vanishing sections");
      matrix.push_back(SparseColumn{{row - 1, mpq_class(1)}});
    }
  }
  const std::size_t rank = rational_rank(matrix);
  return {n, d, rank == rows, rank, rows, matrix.size()};
}

ProductCheck check_product(const std::vector<std::pair<int, int>>& factors) {
  if (factors.empty()) throw std::invalid_argument("check_product needs at least one factor");
  ProductCheck out{true, {}};
  for (const auto& [n, d] : factors) {
    out.factors.push_back(check_projective_space(n, d));
    out.passes = out.passes && out.factors.back().passes;
  }
  return out;
}

}  // namespace ahyp
