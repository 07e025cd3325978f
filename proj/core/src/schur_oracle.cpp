#include "ahyp/schur_oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "ahyp/errors.hpp"

namespace ahyp {

namespace {

MultiPolynomial product(const MultiPolynomial& f, const MultiPolynomial& g) {
  MultiPolynomial out;
  for (const auto& [ef, cf] : f) {
    for (const auto& [eg, cg] : g) {
      std::vector<int> e(ef.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ef[i] + eg[i];
      out[e] += cf * cg;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

// prod_{i<j} (x_i - x_j)
MultiPolynomial vandermonde(int variables) {
  MultiPolynomial out{{std::vector<int>(variables, 0), 1}};
  for (int i = 0; i < variables; ++i) {
    for (int j = i + 1; j < variables; ++j) {
      std::vector<int> xi(variables, 0), xj(variables, 0);
      xi[i] = 1;
      xj[j] = 1;
      out = product(out, MultiPolynomial{{xi, 1}, {xj, -1}});
    }
  }
  return out;
}

}  // namespace

MultiPolynomial schur_polynomial(const Partition& lambda, int variables) {
  MultiPolynomial out;
  if (lambda.length() > variables) return out;
  // Cells in row-major order; tableau[r][c] in 1..variables.
  std::vector<std::vector<int>> tableau(lambda.length());
  for (int r = 0; r < lambda.length(); ++r) tableau[r].assign(lambda[r], 0);
  std::vector<int> content(variables, 0);
  auto fill = [&](auto&& self, int r, int c) -> void {
    if (r == lambda.length()) {
      out[content] += 1;
      return;
    }
    if (c == lambda[r]) {
      self(self, r + 1, 0);
      return;
    }
    int low = 1;
    if (c > 0) low = std::max(low, tableau[r][c - 1]);
    if (r > 0) low = std::max(low, tableau[r - 1][c] + 1);
    for (int v = low; v <= variables; ++v) {
      tableau[r][c] = v;
      ++content[v - 1];
      self(self, r, c + 1);
      --content[v - 1];
    }
  };
  fill(fill, 0, 0);
  return out;
}

std::map<Partition, mpz_class, std::greater<>> schur_expansion(const MultiPolynomial& f,
                                                               int variables) {
  const MultiPolynomial alternant = product(f, vandermonde(variables));
  std::map<Partition, mpz_class, std::greater<>> out;
  for (const auto& [e, c] : alternant) {
    std::vector<int> sorted = e;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw InvariantViolation("schur_expansion: input is not symmetric");
    }
    if (sorted != e) continue;
    std::vector<int> parts(variables);
    for (int i = 0; i < variables; ++i) parts[i] = e[i] - (variables - 1 - i);
    out.emplace(Partition(std::move(parts)), c);
  }
  return out;
}

ChowElement schur_oracle_multiply(const ChowElement& x, const ChowElement& y) {
  if (!(x.context() == y.context())) {
    throw std::invalid_argument("incompatible rings in schur_oracle_multiply");
  }
  const int k = x.context().k();
  MultiPolynomial fx, fy;
  auto accumulate = [k](MultiPolynomial& into, const ChowElement& e) {
    for (const auto& [lambda, c] : e.terms()) {
      for (const auto& [mono, m] : schur_polynomial(lambda, k)) into[mono] += c * m;
    }
    std::erase_if(into, [](const auto& kv) { return kv.second == 0; });
  };
  accumulate(fx, x);
  accumulate(fy, y);
  ChowElement out(x.context());
  for (const auto& [lambda, c] : schur_expansion(product(fx, fy), k)) out.add(lambda, c);
  return out;
}

}  // namespace ahyp
