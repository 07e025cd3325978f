#pragma once

#include <map>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "ahyp/chow_ring.hpp"

namespace ahyp {

/// A linear form c + u*alpha + v*beta in the Chern roots of S*.
struct LinearForm {
  mpz_class constant;
  mpz_class alpha;
  mpz_class beta;

  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

/// Polynomial in the two Chern roots alpha, beta of S* on G(2,N), keyed by
/// (alpha exponent, beta exponent).
class RootPolynomial {
 public:
  using Terms = std::map<std::pair<int, int>, mpz_class>;

  RootPolynomial() = default;
  explicit RootPolynomial(const LinearForm& form);
  static RootPolynomial constant(const mpz_class& c);
  static RootPolynomial monomial(int alpha_exp, int beta_exp, const mpz_class& c);

  const Terms& terms() const noexcept { return terms_; }
  mpz_class coefficient(int alpha_exp, int beta_exp) const;

  bool is_symmetric() const;
  /// Common total degree, or -1 if zero or inhomogeneous.
  int homogeneous_degree() const;
  /// Part of total degree exactly `degree`.
  RootPolynomial graded_piece(int degree) const;

  RootPolynomial& operator+=(const RootPolynomial& other);
  RootPolynomial& operator*=(const RootPolynomial& other);
  friend RootPolynomial operator*(RootPolynomial a, const RootPolynomial& b) { return a *= b; }
  friend RootPolynomial operator+(RootPolynomial a, const RootPolynomial& b) { return a += b; }
  friend bool operator==(const RootPolynomial&, const RootPolynomial&) = default;

 private:
  void add(int a, int b, const mpz_class& c);
  Terms terms_;
};

/// The d+1 factors 1 + (d-i)*alpha + i*beta, i = 0..d, of c(Sym^d S*).
/// Throws std::invalid_argument for d < 1.
std::vector<LinearForm> chern_factors(int d);

/// Schur expansion of a symmetric polynomial in alpha, beta, as a map from
/// two-row partitions to coefficients. Coefficients are read off the
/// alternant f*(alpha - beta); the expansion is expanded back and compared
/// with f. Throws InvariantViolation when f is not symmetric.
std::map<Partition, mpz_class, std::greater<>> schur_coefficients(const RootPolynomial& f);

/// The class in G(2,N) of a symmetric root polynomial (box-truncated).
ChowElement to_chow(const RootPolynomial& f, int big_n);

/// c_{d+1}(Sym^d S*) on G(2,N). Requires d >= 1, N >= 4.
ChowElement top_chern_sym(int d, int big_n);

struct FanoClassReport {
  int d;
  int big_n;
  ChowElement expansion;
  /// sigma_{(d+1,0)} has coefficient 0 and every sigma_{(i,j)} with
  /// i+j = d+1, i >= j >= 1, has a positive coefficient.
  bool missing_class_ok;
  std::vector<std::pair<Partition, mpz_class>> positive_coefficients;
};

/// Class of the Fano scheme of lines of a degree-d hypersurface, with the
/// positivity certificate. Requires d >= 2 and N - 2 >= d + 1.
FanoClassReport fano_class(int d, int big_n);

/// top_chern_sym(d, N) recomputed by pairing the root factors i and d-i:
/// d^2 s11 * prod_{i=1}^{d/2-1} [i(d-i) s1^2 + (d-2i)^2 s11] * (d/2) s1.
/// Even d >= 2 only.
ChowElement paired_rearrangement(int d, int big_n);

/// Number of lines on a general hypersurface of degree 2n-3 in P^n.
mpz_class line_count(int n);

}  // namespace ahyp
