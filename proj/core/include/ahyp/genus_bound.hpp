#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ahyp/variety.hpp"

namespace ahyp {

/// Coefficients c with 2g - 2 >= sum_i c_i (H_i . C).
using CoefficientVector = std::vector<mpq_class>;

/// Intersection numbers e_i = H_i . C of a curve; nonnegative, not all zero.
struct CurveDegrees {
  std::vector<std::int64_t> e;

  explicit CurveDegrees(std::vector<std::int64_t> values);
  std::size_t size() const noexcept { return e.size(); }
};

/// Multiplicities s_i of the Lazarsfeld-Mukai bundles M_{H_i} surjecting
/// onto the normal bundle. sum s_i <= D - 2.
struct SurjectionProfile {
  std::vector<int> s;
};

/// 2g - 2 = deg N + K.C
std::int64_t degree_genus_relation(std::int64_t deg_normal, std::int64_t k_dot_c);

/// Lower bound -sum d_i e_i for deg N coming from semistability.
std::int64_t mukai_degree_bound(const VarietyDescriptor& v, const DegreeVector& d,
                                const CurveDegrees& e);

/// K_X . C = sum (a_i + d_i) e_i, by adjunction.
std::int64_t canonical_degree(const VarietyDescriptor& v, const DegreeVector& d,
                              const CurveDegrees& e);

/// c_i = a_i + d_i - s_i. Throws std::invalid_argument when the profile has
/// the wrong length, a negative entry, or sum s_i > D - 2.
CoefficientVector basic_bound(const VarietyDescriptor& v, const DegreeVector& d,
                              const SurjectionProfile& s);

/// min_i (d_i + a_i - D + 2) when positive.
std::optional<mpq_class> method1_certificate(const VarietyDescriptor& v, const DegreeVector& d);

/// The three scroll-argument bounds for distinguished index j (0-based):
///   uniform  (s_j <= D-3):         c_i = a_i + d_i - D + 3
///   quadric  (scroll inside Z):    c_j = a_j + d_j - D + 2 + 1/2,  c_i = a_i + d_i - 1
///   section  (scroll not in Z):    c_j = a_j + d_j - D + 2 + 1/d_j, c_i = a_i + d_i - d_i/d_j
struct ScrollCases {
  CoefficientVector uniform;
  CoefficientVector quadric;
  CoefficientVector section;
};

ScrollCases scroll_case_bounds(const VarietyDescriptor& v, const DegreeVector& d, std::size_t j);

/// Lower bounds for deg Q of the rank-one quotient, as used in the quadric
/// and section cases: -e_j/2 - sum_{i!=j} e_i and
/// (1/d_j - 1) e_j - sum_{i!=j} (d_i/d_j) e_i.
mpq_class quadric_degq_bound(const CurveDegrees& e, std::size_t j);
mpq_class section_degq_bound(const DegreeVector& d, const CurveDegrees& e, std::size_t j);

/// H_i H_j . Sigma for the scroll: e_j + deg Q at i = j, e_i otherwise.
std::vector<std::int64_t> scroll_intersection_numbers(const CurveDegrees& e, std::int64_t deg_q,
                                                      std::size_t j = 0);

struct CaseBound {
  char label;                    // 'A', 'B' or 'C'
  std::optional<std::size_t> j;  // distinguished index; none for the uniform case
  CoefficientVector coefficients;

  mpq_class minimum() const;
};

struct GenusBoundReport {
  VarietyDescriptor variety;
  DegreeVector degrees;
  std::vector<CaseBound> cases;
  mpq_class minimum;  // min over cases of the smallest coefficient
  std::optional<mpq_class> epsilon;  // present iff minimum > 0
  char binding_case = 'A';
  std::optional<std::size_t> binding_j;
  std::vector<std::string> ledger_flags;
};

/// Evaluates every scroll case for every distinguished index and certifies
/// epsilon = min coefficient. Throws InvariantViolation if D >= 4 and all
/// d_i >= D - a_i - 2 but no certificate results, or if such an instance
/// has some d_i < 4.
GenusBoundReport hyperbolicity_certificate(const VarietyDescriptor& v, const DegreeVector& d);

std::string to_string(const mpq_class& q);

}  // namespace ahyp
