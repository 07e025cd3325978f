#include "ahyp/genus_bound.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ahyp/errors.hpp"

namespace ahyp {

namespace {

void require_length(const VarietyDescriptor& v, std::size_t length, const char* what) {
  if (length != v.canonical.size()) {
    throw std::invalid_argument(std::string(what) + " has " + std::to_string(length) +
                                " entries but the Picard rank is " +
                                std::to_string(v.canonical.size()));
  }
}

void require_index(const VarietyDescriptor& v, std::size_t j) {
  if (j >= v.canonical.size()) {
    throw std::invalid_argument("distinguished index " + std::to_string(j + 1) +
                                " is out of range");
  }
}

const char* kCaseCFlag =
    "case-C-degQ-sign: the displayed bound deg Q >= -(1/d_1 - 1)(H_1.C) - ... has the wrong "
    "sign; (1/d_1 - 1)(H_1.C) - sum (d_i/d_1)(H_i.C) follows from d_1(H_1.C + deg Q) + "
    "sum d_i(H_i.C) >= H_1.C and gives the coefficient a_1 + d_1 - D + 2 + 1/d_1";

}  // namespace

CurveDegrees::CurveDegrees(std::vector<std::int64_t> values) : e(std::move(values)) {
  if (std::any_of(e.begin(), e.end(), [](std::int64_t x) { return x < 0; })) {
    throw std::invalid_argument("curve intersection numbers must be nonnegative");
  }
  if (std::accumulate(e.begin(), e.end(), std::int64_t{0}) == 0) {
    throw std::invalid_argument("curve intersection numbers must not all vanish");
  }
}

std::int64_t degree_genus_relation(std::int64_t deg_normal, std::int64_t k_dot_c) {
  return deg_normal + k_dot_c;
}

std::int64_t mukai_degree_bound(const VarietyDescriptor& v, const DegreeVector& d,
                                const CurveDegrees& e) {
  require_length(v, d.size(), "degree vector");
  require_length(v, e.size(), "curve degrees");
  std::int64_t total = 0;
  for (std::size_t i = 0; i < d.size(); ++i) total += d[i] * e.e[i];
  return -total;
}

std::int64_t canonical_degree(const VarietyDescriptor& v, const DegreeVector& d,
                              const CurveDegrees& e) {
  require_length(v, d.size(), "degree vector");
  require_length(v, e.size(), "curve degrees");
  std::int64_t total = 0;
  for (std::size_t i = 0; i < d.size(); ++i) total += (v.canonical[i] + d[i]) * e.e[i];
  return total;
}

CoefficientVector basic_bound(const VarietyDescriptor& v, const DegreeVector& d,
                              const SurjectionProfile& s) {
  require_length(v, d.size(), "degree vector");
  require_length(v, s.s.size(), "surjection profile");
  int total = 0;
  for (int x : s.s) {
    if (x < 0) throw std::invalid_argument("surjection multiplicities must be nonnegative");
    total += x;
  }
  if (total > v.dimension - 2) {
    throw std::invalid_argument("surjection profile sums to " + std::to_string(total) +
                                ", above the normal bundle rank D - 2 = " +
                                std::to_string(v.dimension - 2));
  }
  CoefficientVector out;
  for (std::size_t i = 0; i < d.size(); ++i) out.emplace_back(v.canonical[i] + d[i] - s.s[i]);
  return out;
}

std::optional<mpq_class> method1_certificate(const VarietyDescriptor& v, const DegreeVector& d) {
  require_length(v, d.size(), "degree vector");
  mpq_class eps = d[0] + v.canonical[0] - v.dimension + 2;
  for (std::size_t i = 1; i < d.size(); ++i) {
    eps = std::min(eps, mpq_class(d[i] + v.canonical[i] - v.dimension + 2));
  }
  if (eps > 0) return eps;
  return std::nullopt;
}

ScrollCases scroll_case_bounds(const VarietyDescriptor& v, const DegreeVector& d, std::size_t j) {
  require_length(v, d.size(), "degree vector");
  require_index(v, j);
  const int dim = v.dimension;
  const mpq_class dj = d[j];
  ScrollCases out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const mpq_class base = v.canonical[i] + d[i];
    out.uniform.push_back(base - dim + 3);
    if (i == j) {
      out.quadric.push_back(base - dim + 2 + mpq_class(1, 2));
      mpq_class c = base - dim + 2 + 1 / dj;
      c.canonicalize();
      out.section.push_back(c);
    } else {
      out.quadric.push_back(base - 1);
      mpq_class c = base - d[i] / dj;
      c.canonicalize();
      out.section.push_back(c);
    }
  }
  return out;
}

mpq_class quadric_degq_bound(const CurveDegrees& e, std::size_t j) {
  mpq_class out = mpq_class(-e.e.at(j), 2);
  out.canonicalize();
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i != j) out -= e.e[i];
  }
  return out;
}

mpq_class section_degq_bound(const DegreeVector& d, const CurveDegrees& e, std::size_t j) {
  if (d.size() != e.size()) throw std::invalid_argument("length mismatch");
  const mpq_class dj = d[j];
  mpq_class out = (1 / dj - 1) * mpq_class(e.e.at(j));
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i != j) out -= mpq_class(d[i]) / dj * mpq_class(e.e[i]);
  }
  out.canonicalize();
  return out;
}

std::vector<std::int64_t> scroll_intersection_numbers(const CurveDegrees& e, std::int64_t deg_q,
                                                      std::size_t j) {
  if (j >= e.size()) throw std::invalid_argument("distinguished index out of range");
  std::vector<std::int64_t> out = e.e;
  out[j] += deg_q;
  return out;
}

mpq_class CaseBound::minimum() const {
  return *std::min_element(coefficients.begin(), coefficients.end());
}

GenusBoundReport hyperbolicity_certificate(const VarietyDescriptor& v, const DegreeVector& d) {
  require_length(v, d.size(), "degree vector");
  GenusBoundReport report{v, d, {}, 0, std::nullopt, 'A', std::nullopt, {kCaseCFlag}};

  for (std::size_t j = 0; j < d.size(); ++j) {
    ScrollCases cases = scroll_case_bounds(v, d, j);
    if (j == 0) report.cases.push_back({'A', std::nullopt, std::move(cases.uniform)});
    report.cases.push_back({'B', j, std::move(cases.quadric)});
    report.cases.push_back({'C', j, std::move(cases.section)});
  }

  report.minimum = report.cases.front().minimum();
  for (const CaseBound& c : report.cases) {
    const mpq_class m = c.minimum();
    if (m < report.minimum) {
      report.minimum = m;
      report.binding_case = c.label;
      report.binding_j = c.j;
    }
  }
  if (report.minimum > 0) report.epsilon = report.minimum;

  const auto threshold = hyperbolicity_threshold(v);
  bool at_or_above = true;
  for (std::size_t i = 0; i < d.size(); ++i) at_or_above = at_or_above && d[i] >= threshold[i];
  if (v.dimension >= 4 && at_or_above) {
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (d[i] < 4) {
        throw InvariantViolation("d_i >= D - a_i - 2 with a_i <= -2 should force d_i >= 4");
      }
    }
    if (!report.epsilon) {
      throw InvariantViolation("no hyperbolicity certificate above the threshold for " + v.name);
    }
  }
  return report;
}

std::string to_string(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  return c.get_str();
}

}  // namespace ahyp
