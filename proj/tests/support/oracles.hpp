#pragma once

#include <map>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace ahyp::testing {

/// prod_{i=0}^{d} (i*x + (d-i)*y) as a map (deg x, deg y) -> coefficient,
/// expanded directly without the library polynomial type.
std::map<std::pair<int, int>, mpz_class> root_product(int d);

/// Lines on a general (2n-3)-ic in P^n: write the root product in the
/// elementary basis e1^a e2^b and use that sigma_1^a sigma_{1,1}^b
/// integrates to Catalan(n-1-b) over G(2, n+1).
mpz_class line_count_oracle(int n);

/// Number of standard Young tableaux of shape lambda (hook length formula).
mpz_class standard_tableaux(const std::vector<int>& lambda);

/// Every partition with at most k parts, parts <= width and size <= max_size,
/// generated by plain recursion (independent of RingContext::fits).
std::vector<std::vector<int>> box_partitions(int k, int width, int max_size);

/// Dimension of Fl(k_1..k_m; n) as sum over pairs of block sizes.
int flag_dimension_oracle(const std::vector<int>& ks, int n);

}  // namespace ahyp::testing
