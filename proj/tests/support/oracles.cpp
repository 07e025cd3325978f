#include "oracles.hpp"

#include <algorithm>
#include <stdexcept>

namespace ahyp::testing {

namespace {

using Poly = std::map<std::pair<int, int>, mpz_class>;

void clean(Poly& p) {
  std::erase_if(p, [](const auto& term) { return term.second == 0; });
}

Poly times(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) out[{ea.first + eb.first, ea.second + eb.second}] += ca * cb;
  }
  clean(out);
  return out;
}

mpz_class catalan(int m) {
  mpz_class binom;
  mpz_bin_uiui(binom.get_mpz_t(), 2 * m, m);
  return binom / (m + 1);
}

}  // namespace

Poly root_product(int d) {
  Poly out{{{0, 0}, 1}};
  for (int i = 0; i <= d; ++i) {
    Poly factor;
    if (i) factor[{1, 0}] = i;
    if (d - i) factor[{0, 1}] = d - i;
    out = times(out, factor);
  }
  return out;
}

mpz_class line_count_oracle(int n) {
  if (n < 3) throw std::invalid_argument("n >= 3");
  Poly f = root_product(2 * n - 3);
  const Poly e1{{{1, 0}, 1}, {{0, 1}, 1}};
  const Poly e2{{{1, 1}, 1}};
  mpz_class total = 0;
  while (!f.empty()) {
    // leading term in x: x^p y^q with the largest p, which has p >= q by symmetry
    const auto [exponents, c] = *f.rbegin();
    const auto [p, q] = exponents;
    if (p < q) throw std::logic_error("root product is not symmetric");
    Poly term{{{0, 0}, c}};
    for (int i = 0; i < p - q; ++i) term = times(term, e1);
    for (int i = 0; i < q; ++i) term = times(term, e2);
    for (const auto& [e, t] : term) f[e] -= t;
    clean(f);
    total += c * catalan(n - 1 - q);
  }
  return total;
}

mpz_class standard_tableaux(const std::vector<int>& lambda) {
  std::vector<int> conj;
  int size = 0;
  for (int part : lambda) {
    size += part;
    for (int c = 0; c < part; ++c) {
      if (c >= static_cast<int>(conj.size())) conj.push_back(0);
      ++conj[c];
    }
  }
  mpz_class num;
  mpz_fac_ui(num.get_mpz_t(), size);
  mpz_class hooks = 1;
  for (std::size_t r = 0; r < lambda.size(); ++r) {
    for (int c = 0; c < lambda[r]; ++c) hooks *= (lambda[r] - c - 1) + (conj[c] - static_cast<int>(r) - 1) + 1;
  }
  return num / hooks;
}

namespace {

void extend(std::vector<int>& prefix, int k, int bound, int budget,
            std::vector<std::vector<int>>& out) {
  out.push_back(prefix);
  if (static_cast<int>(prefix.size()) == k) return;
  for (int part = 1; part <= std::min(bound, budget); ++part) {
    prefix.push_back(part);
    extend(prefix, k, part, budget - part, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> box_partitions(int k, int width, int max_size) {
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  extend(prefix, k, width, max_size, out);
  return out;
}

int flag_dimension_oracle(const std::vector<int>& ks, int n) {
  std::vector<int> blocks;
  int prev = 0;
  for (int k : ks) {
    blocks.push_back(k - prev);
    prev = k;
  }
  blocks.push_back(n - prev);
  int dim = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks.size(); ++j) dim += blocks[i] * blocks[j];
  }
  return dim;
}

}  // namespace ahyp::testing
