#include "ahyp/chern_fano.hpp"

#include <stdexcept>
#include <string>

#include "ahyp/errors.hpp"

namespace ahyp {

RootPolynomial::RootPolynomial(const LinearForm& form) {
  add(0, 0, form.constant);
  add(1, 0, form.alpha);
  add(0, 1, form.beta);
}

RootPolynomial RootPolynomial::constant(const mpz_class& c) { return monomial(0, 0, c); }

RootPolynomial RootPolynomial::monomial(int alpha_exp, int beta_exp, const mpz_class& c) {
  RootPolynomial p;
  p.add(alpha_exp, beta_exp, c);
  return p;
}

void RootPolynomial::add(int a, int b, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({a, b}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

mpz_class RootPolynomial::coefficient(int alpha_exp, int beta_exp) const {
  auto it = terms_.find({alpha_exp, beta_exp});
  return it == terms_.end() ? mpz_class(0) : it->second;
}

bool RootPolynomial::is_symmetric() const {
  for (const auto& [e, c] : terms_) {
    if (coefficient(e.second, e.first) != c) return false;
  }
  return true;
}

int RootPolynomial::homogeneous_degree() const {
  int degree = -1;
  for (const auto& [e, c] : terms_) {
    const int here = e.first + e.second;
    if (degree >= 0 && here != degree) return -1;
    degree = here;
  }
  return degree;
}

RootPolynomial RootPolynomial::graded_piece(int degree) const {
  RootPolynomial out;
  for (const auto& [e, c] : terms_) {
    if (e.first + e.second == degree) out.add(e.first, e.second, c);
  }
  return out;
}

RootPolynomial& RootPolynomial::operator+=(const RootPolynomial& other) {
  for (const auto& [e, c] : other.terms_) add(e.first, e.second, c);
  return *this;
}

RootPolynomial& RootPolynomial::operator*=(const RootPolynomial& other) {
  RootPolynomial out;
  for (const auto& [e, c] : terms_) {
    for (const auto& [f, g] : other.terms_) out.add(e.first + f.first, e.second + f.second, c * g);
  }
  *this = std::move(out);
  return *this;
}

std::vector<LinearForm> chern_factors(int d) {
  if (d < 1) throw std::invalid_argument("chern_factors requires d >= 1");
  std::vector<LinearForm> out;
  out.reserve(d + 1);
  for (int i = 0; i <= d; ++i) out.push_back({1, d - i, i});
  return out;
}

namespace {

// s_{(p,q)}(alpha, beta) = sum over a = q..p of alpha^a beta^(p+q-a)
RootPolynomial two_row_schur(const Partition& lambda, const mpz_class& c) {
  RootPolynomial out;
  const int p = lambda[0];
  const int q = lambda[1];
  for (int a = q; a <= p; ++a) out += RootPolynomial::monomial(a, p + q - a, c);
  return out;
}

}  // namespace

std::map<Partition, mpz_class, std::greater<>> schur_coefficients(const RootPolynomial& f) {
  if (!f.is_symmetric()) {
    throw InvariantViolation("schur_coefficients: root polynomial is not symmetric");
  }
  const RootPolynomial alternant = f * RootPolynomial(LinearForm{0, 1, -1});
  std::map<Partition, mpz_class, std::greater<>> out;
  for (const auto& [e, c] : alternant.terms()) {
    const auto [a, b] = e;
    if (a == b || alternant.coefficient(b, a) != -c) {
      throw InvariantViolation("schur_coefficients: alternant is not antisymmetric");
    }
    if (a > b) out.emplace(Partition{a - 1, b}, c);
  }
  RootPolynomial back;
  for (const auto& [lambda, c] : out) back += two_row_schur(lambda, c);
  if (!(back == f)) {
    throw InvariantViolation("schur_coefficients: expansion does not reproduce the polynomial");
  }
  return out;
}

ChowElement to_chow(const RootPolynomial& f, int big_n) {
  ChowElement out(RingContext(2, big_n));
  for (const auto& [lambda, c] : schur_coefficients(f)) out.add(lambda, c);
  return out;
}

ChowElement top_chern_sym(int d, int big_n) {
  if (d < 1) throw std::invalid_argument("top_chern_sym requires d >= 1");
  if (big_n < 4) throw std::invalid_argument("top_chern_sym requires N >= 4");
  RootPolynomial product = RootPolynomial::constant(1);
  for (const LinearForm& form : chern_factors(d)) {
    product *= RootPolynomial(LinearForm{0, form.alpha, form.beta});
  }
  if (product.homogeneous_degree() != d + 1) {
    throw InvariantViolation("top Chern class is not homogeneous of degree d+1");
  }
  return to_chow(product, big_n);
}

FanoClassReport fano_class(int d, int big_n) {
  if (d < 2) throw std::invalid_argument("fano_class requires d >= 2");
  if (big_n - 2 < d + 1) {
    throw std::invalid_argument("box width N-2 = " + std::to_string(big_n - 2) +
                                " is smaller than d+1 = " + std::to_string(d + 1) +
                                "; raise N to at least " + std::to_string(d + 3));
  }
  FanoClassReport report{d, big_n, top_chern_sym(d, big_n), false, {}};
  bool ok = report.expansion.coefficient(Partition{d + 1}) == 0;
  for (int j = 1; 2 * j <= d + 1; ++j) {
    if (report.expansion.coefficient(Partition{d + 1 - j, j}) <= 0) ok = false;
  }
  report.missing_class_ok = ok;
  for (const auto& [lambda, c] : report.expansion.terms()) {
    if (c > 0) report.positive_coefficients.emplace_back(lambda, c);
  }
  return report;
}

ChowElement paired_rearrangement(int d, int big_n) {
  if (d < 2 || d % 2 != 0) {
    throw std::invalid_argument("paired_rearrangement requires an even d >= 2");
  }
  const RingContext ctx(2, big_n);
  const ChowElement s1 = make_class(ctx, Partition{1});
  const ChowElement s11 = make_class(ctx, Partition{1, 1});
  const ChowElement s1_squared = multiply(s1, s1);

  ChowElement out = s11 * mpz_class(d * d);
  for (int i = 1; i < d / 2; ++i) {
    const ChowElement pair =
        s1_squared * mpz_class(i * (d - i)) + s11 * mpz_class((d - 2 * i) * (d - 2 * i));
    out = multiply(out, pair);
  }
  return multiply(out, s1 * mpz_class(d / 2));
}

mpz_class line_count(int n) {
  if (n < 3) throw std::invalid_argument("line_count requires n >= 3");
  return integrate(top_chern_sym(2 * n - 3, n + 1));
}

}  // namespace ahyp
