#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace ahyp {

/// Degree-d monomials in x_0..x_n, in graded lexicographic order (x_0^d first).
class MonomialSpace {
 public:
  MonomialSpace(int n, int d);

  int n() const noexcept { return n_; }
  int d() const noexcept { return d_; }
  const std::vector<std::vector<int>>& basis() const noexcept { return basis_; }
  std::size_t size() const noexcept { return basis_.size(); }
  /// Position of an exponent vector in the basis; throws if absent.
  std::size_t index_of(const std::vector<int>& exponents) const;

 private:
  int n_;
  int d_;
  std::vector<std::vector<int>> basis_;
};

struct SectionDominatingCheck {
  int n;
  int d;
  bool passes;
  std::size_t rank;
  std::size_t target_dimension;  // C(n+d, d) - 1
  std::size_t columns;           // n * C(n+d-1, d-1)
};

/// Builds the multiplication map H0(O(1) (x) I_p) (x) H0(O(d-1)) -> H0(O(d) (x) I_p)
/// at p = (1:0:...:0) as an explicit rational matrix and compares its rank
/// with the dimension of the target (all degree-d monomials but x_0^d).
SectionDominatingCheck check_projective_space(int n, int d);

/// Factor-wise check for the hyperplane classes of a product of projective
/// spaces; passes iff every factor passes.
struct ProductCheck {
  bool passes;
  std::vector<SectionDominatingCheck> factors;
};
ProductCheck check_product(const std::vector<std::pair<int, int>>& factors);

}  // namespace ahyp
