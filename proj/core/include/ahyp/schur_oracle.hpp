#pragma once

#include <map>
#include <vector>

#include <gmpxx.h>

#include "ahyp/chow_ring.hpp"

namespace ahyp {

/// Polynomial in k commuting variables: exponent vector -> coefficient.
using MultiPolynomial = std::map<std::vector<int>, mpz_class>;

/// s_lambda(x_1..x_k) as a sum over semistandard tableaux with entries <= k.
MultiPolynomial schur_polynomial(const Partition& lambda, int variables);

/// Schur expansion of a symmetric polynomial, read off from f * a_delta.
/// Throws InvariantViolation if f * a_delta is not alternating.
std::map<Partition, mpz_class, std::greater<>> schur_expansion(const MultiPolynomial& f,
                                                               int variables);

/// Same product as multiply(), by a route that shares nothing with it:
/// multiply Schur polynomials in k variables, re-expand in the Schur basis,
/// drop classes with a part wider than n-k. Meant for small k and degree.
ChowElement schur_oracle_multiply(const ChowElement& x, const ChowElement& y);

}  // namespace ahyp
