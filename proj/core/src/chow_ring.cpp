#include "ahyp/chow_ring.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ahyp {

ChowElement::ChowElement(RingContext context, const Terms& terms) : context_(context) {
  for (const auto& [lambda, c] : terms) add(lambda, c);
}

ChowElement ChowElement::one(RingContext context) {
  ChowElement e(context);
  e.add(Partition{}, 1);
  return e;
}

mpz_class ChowElement::coefficient(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

std::optional<int> ChowElement::degree() const {
  if (terms_.empty()) return std::nullopt;
  const int first = terms_.begin()->first.size();
  for (const auto& [lambda, c] : terms_) {
    if (lambda.size() != first) return std::nullopt;
  }
  return first;
}

ChowElement& ChowElement::add(const Partition& lambda, const mpz_class& coefficient) {
  if (coefficient == 0 || !context_.fits(lambda)) return *this;
  auto [it, inserted] = terms_.try_emplace(lambda, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

void ChowElement::require_same_ring(const ChowElement& other) const {
  if (!(context_ == other.context_)) {
    throw std::invalid_argument("incompatible rings: G(" + std::to_string(context_.k()) + "," +
                                std::to_string(context_.n()) + ") vs G(" +
                                std::to_string(other.context_.k()) + "," +
                                std::to_string(other.context_.n()) + ")");
  }
}

ChowElement& ChowElement::operator+=(const ChowElement& other) {
  require_same_ring(other);
  for (const auto& [lambda, c] : other.terms_) add(lambda, c);
  return *this;
}

ChowElement& ChowElement::operator-=(const ChowElement& other) {
  require_same_ring(other);
  for (const auto& [lambda, c] : other.terms_) add(lambda, -c);
  return *this;
}

ChowElement& ChowElement::operator*=(const mpz_class& scalar) {
  if (scalar == 0) {
    terms_.clear();
  } else {
    for (auto& [lambda, c] : terms_) c *= scalar;
  }
  return *this;
}

ChowElement make_class(const RingContext& context, const Partition& lambda) {
  ChowElement e(context);
  e.add(lambda, 1);
  return e;
}

namespace {

// Shapes mu inside the box with mu/lambda a horizontal strip of size p:
// mu_1 >= lambda_1 >= mu_2 >= lambda_2 >= ... and no new row below row k.
template <typename Emit>
void horizontal_strips(const RingContext& ctx, const Partition& lambda, int p, Emit&& emit) {
  const int rows = ctx.k();
  std::vector<int> mu(rows);
  auto rec = [&](auto&& self, int row, int remaining) -> void {
    if (row == rows) {
      if (remaining == 0) emit(Partition(mu));
      return;
    }
    const int low = lambda[row];
    const int high = row == 0 ? ctx.width() : lambda[row - 1];
    for (int v = low; v <= high && v - low <= remaining; ++v) {
      mu[row] = v;
      self(self, row + 1, remaining - (v - low));
    }
  };
  rec(rec, 0, p);
}

// Shapes mu inside the box with mu/lambda a vertical strip of size p.
template <typename Emit>
void vertical_strips(const RingContext& ctx, const Partition& lambda, int p, Emit&& emit) {
  const int rows = ctx.k();
  std::vector<int> mu(rows);
  auto rec = [&](auto&& self, int row, int remaining) -> void {
    if (rows - row < remaining) return;
    if (row == rows) {
      emit(Partition(mu));
      return;
    }
    for (int add = 0; add <= 1 && add <= remaining; ++add) {
      const int v = lambda[row] + add;
      if (v > ctx.width() || (row > 0 && v > mu[row - 1])) continue;
      mu[row] = v;
      self(self, row + 1, remaining - add);
    }
  };
  rec(rec, 0, p);
}

template <typename Strips>
ChowElement apply_strip_rule(int p, const ChowElement& x, Strips&& strips) {
  if (p < 0) throw std::invalid_argument("Pieri degree must be nonnegative");
  if (p == 0) return x;
  ChowElement out(x.context());
  for (const auto& [lambda, c] : x.terms()) {
    strips(x.context(), lambda, p, [&](const Partition& mu) { out.add(mu, c); });
  }
  return out;
}

// sigma_lambda * y via the Jacobi-Trudi determinant det(h_{rows_i + j - i}).
// The determinant is expanded row by row; state[mask] accumulates the signed
// partial products whose first popcount(mask) rows used the columns in mask.
// With elementary=true the rows are those of the conjugate and each step is
// a vertical Pieri move (dual Jacobi-Trudi).
ChowElement giambelli_apply(const Partition& rows, bool elementary, const ChowElement& y) {
  const int len = rows.length();
  if (len == 0) return y;
  const std::uint32_t full = (std::uint32_t{1} << len) - 1;
  std::vector<std::optional<ChowElement>> state(full + 1);
  state[0] = y;
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    if (!state[mask] || state[mask]->is_zero()) continue;
    const int row = std::popcount(mask);
    for (int col = 0; col < len; ++col) {
      const std::uint32_t bit = std::uint32_t{1} << col;
      if (mask & bit) continue;
      const int degree = rows[row] + col - row;
      if (degree < 0) continue;
      ChowElement step = elementary ? pieri_vertical(degree, *state[mask])
                                    : pieri(degree, *state[mask]);
      if (step.is_zero()) continue;
      const int inversions = std::popcount(mask & ~((bit << 1) - 1));
      if (inversions % 2) step *= -1;
      auto& target = state[mask | bit];
      if (target) {
        *target += step;
      } else {
        target = std::move(step);
      }
    }
    state[mask].reset();
  }
  return state[full] ? *state[full] : ChowElement(y.context());
}

}  // namespace

ChowElement pieri(int p, const ChowElement& x) {
  return apply_strip_rule(p, x, [](const RingContext& ctx, const Partition& lambda, int q,
                                   auto&& emit) { horizontal_strips(ctx, lambda, q, emit); });
}

ChowElement pieri_vertical(int p, const ChowElement& x) {
  return apply_strip_rule(p, x, [](const RingContext& ctx, const Partition& lambda, int q,
                                   auto&& emit) { vertical_strips(ctx, lambda, q, emit); });
}

ChowElement multiply(const ChowElement& x, const ChowElement& y) {
  if (!(x.context() == y.context())) {
    throw std::invalid_argument("incompatible rings in multiply");
  }
  ChowElement out(x.context());
  for (const auto& [lambda, c] : x.terms()) {
    const Partition conj = lambda.conjugate();
    const bool elementary = conj.length() < lambda.length();
    ChowElement term = giambelli_apply(elementary ? conj : lambda, elementary, y);
    term *= c;
    out += term;
  }
  return out;
}

mpz_class integrate(const ChowElement& x) {
  return x.coefficient(x.context().top());
}

Partition complement(const RingContext& context, const Partition& lambda) {
  if (!context.fits(lambda)) {
    throw std::invalid_argument("partition " + lambda.to_string() + " does not fit the " +
                                std::to_string(context.k()) + "x" +
                                std::to_string(context.width()) + " box");
  }
  const int k = context.k();
  std::vector<int> mu(k);
  for (int j = 0; j < k; ++j) mu[j] = context.width() - lambda[k - 1 - j];
  return Partition(std::move(mu));
}

std::pair<RingContext, Partition> transpose_dual(const RingContext& context,
                                                 const Partition& lambda) {
  if (!context.fits(lambda)) {
    throw std::invalid_argument("partition " + lambda.to_string() + " does not fit the " +
                                std::to_string(context.k()) + "x" +
                                std::to_string(context.width()) + " box");
  }
  return {context.dual(), lambda.conjugate()};
}

ChowElement dual_class_sigma2_product(int d, int big_n) {
  if (d < 2) throw std::invalid_argument("dual class vanishing requires d >= 2");
  if (big_n < d + 3) throw std::invalid_argument("dual class vanishing requires N >= d + 3");
  const RingContext lines(2, big_n);
  const Partition lambda{big_n - 2, big_n - 2 - (d + 1)};
  auto [dual_ctx, dual_lambda] = transpose_dual(lines, lambda);
  return pieri(2, make_class(dual_ctx, dual_lambda));
}

}  // namespace ahyp
