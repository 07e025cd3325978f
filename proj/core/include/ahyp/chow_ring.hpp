#pragma once

#include <functional>
#include <map>
#include <optional>
#include <utility>

#include <gmpxx.h>

#include "ahyp/partition.hpp"

namespace ahyp {

/// An integer combination of Schubert classes in the Chow ring of G(k,n).
///
/// Terms are kept sorted by partition in descending lexicographic order,
/// never hold a zero coefficient, and never hold a partition outside the
/// box. Adding an out-of-box class is a no-op: the quotient ring sends
/// such classes to zero.
class ChowElement {
 public:
  using Terms = std::map<Partition, mpz_class, std::greater<>>;

  explicit ChowElement(RingContext context) : context_(context) {}
  ChowElement(RingContext context, const Terms& terms);

  static ChowElement one(RingContext context);

  const RingContext& context() const noexcept { return context_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Coefficient of sigma_lambda (zero if absent).
  mpz_class coefficient(const Partition& lambda) const;

  /// Common degree of all terms, or nullopt when zero or inhomogeneous.
  std::optional<int> degree() const;

  ChowElement& add(const Partition& lambda, const mpz_class& coefficient);
  ChowElement& operator+=(const ChowElement& other);
  ChowElement& operator-=(const ChowElement& other);
  ChowElement& operator*=(const mpz_class& scalar);

  friend ChowElement operator+(ChowElement a, const ChowElement& b) { return a += b; }
  friend ChowElement operator-(ChowElement a, const ChowElement& b) { return a -= b; }
  friend ChowElement operator*(ChowElement a, const mpz_class& s) { return a *= s; }
  friend ChowElement operator*(const mpz_class& s, ChowElement a) { return a *= s; }
  friend bool operator==(const ChowElement&, const ChowElement&) = default;

 private:
  void require_same_ring(const ChowElement& other) const;

  RingContext context_;
  Terms terms_;
};

/// sigma_lambda, or zero when lambda does not fit the box.
ChowElement make_class(const RingContext& context, const Partition& lambda);

/// sigma_p * x by the horizontal-strip rule.
ChowElement pieri(int p, const ChowElement& x);

/// sigma_{1^p} * x by the vertical-strip rule.
ChowElement pieri_vertical(int p, const ChowElement& x);

/// Ring product. Each term of x is expanded as a Jacobi-Trudi determinant in
/// special classes and applied to y through iterated Pieri steps. Throws
/// std::invalid_argument when the rings differ.
ChowElement multiply(const ChowElement& x, const ChowElement& y);

/// Coefficient of the point class.
mpz_class integrate(const ChowElement& x);

/// The partition whose class pairs with sigma_lambda to the point class.
Partition complement(const RingContext& context, const Partition& lambda);

/// The conjugate partition, viewed in the dual Grassmannian G(n-k, n).
std::pair<RingContext, Partition> transpose_dual(const RingContext& context,
                                                 const Partition& lambda);

/// sigma_2 times the dual of the class sigma_{N-2, N-2-(d+1)} in G(N-2, N).
/// Vanishes for every d >= 2, N >= d+3; callers check is_zero(). Requires
/// d >= 2 and N >= d + 3.
ChowElement dual_class_sigma2_product(int d, int big_n);

}  // namespace ahyp
