#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ahyp {

enum class Family { Grassmannian, Projective, Orthogonal, Symplectic, Flag };

/// One homogeneous factor of a (possibly product) variety.
struct Factor {
  Family family;
  std::vector<int> ks;  // k for Gr/OG/SG, k_1 < ... < k_m for Fl, empty for P
  int n;
  int dimension;
  std::vector<int> canonical;  // a_i with K = sum a_i H_i, one per Picard generator

  std::string name() const;
  friend bool operator==(const Factor&, const Factor&) = default;
};

/// Picard-level data of a homogeneous variety A: dimension D and the
/// canonical coefficients a_1..a_m, K_A = sum a_i H_i.
struct VarietyDescriptor {
  std::string name;
  int dimension = 0;
  std::vector<int> canonical;
  std::vector<Factor> factors;

  int picard_rank() const noexcept { return static_cast<int>(canonical.size()); }
  friend bool operator==(const VarietyDescriptor&, const VarietyDescriptor&) = default;
};

/// Multidegree (d_1..d_m) of a hypersurface; every d_i >= 1.
struct DegreeVector {
  std::vector<int> d;

  DegreeVector() = default;
  explicit DegreeVector(std::vector<int> degrees);
  std::size_t size() const noexcept { return d.size(); }
  int operator[](std::size_t i) const { return d[i]; }
  friend bool operator==(const DegreeVector&, const DegreeVector&) = default;
};

// Constructors. Each throws std::invalid_argument on parameters outside its
// domain; orthogonal/symplectic additionally refuse non-integral dimension
// and any canonical coefficient above -2.
VarietyDescriptor grassmannian(int k, int n);
VarietyDescriptor projective(int n);
VarietyDescriptor orthogonal(int k, int n);
VarietyDescriptor symplectic(int k, int n);
VarietyDescriptor flag(const std::vector<int>& ks, int n);
VarietyDescriptor product(const std::vector<VarietyDescriptor>& factors);

/// D - a_i - 2 per Picard generator.
std::vector<int> hyperbolicity_threshold(const VarietyDescriptor& v);
/// D - a_i - 4 per Picard generator.
std::vector<int> lines_threshold(const VarietyDescriptor& v);
/// D - a_i - 3: dimension of the family of H_i-lines on A.
int fano_lines_dimension(const VarietyDescriptor& v, std::size_t i);

struct Classification {
  enum class Kind { Hyperbolic, ContainsLines, OpenGap, LowDimension };
  Kind kind;
  /// ContainsLines: the witness index. OpenGap: every index with
  /// d_i = D - a_i - 3. Empty otherwise. 0-based.
  std::vector<std::size_t> indices;

  friend bool operator==(const Classification&, const Classification&) = default;
};

std::string_view to_string(Classification::Kind kind);

/// The hyperbolicity / line-containment dichotomy. Throws
/// std::invalid_argument on a length mismatch.
Classification classify(const VarietyDescriptor& v, const DegreeVector& d);

struct CounterexampleNote {
  std::string variety;
  std::string note;
  std::string citation;
};

/// Entries of the known-counterexample table matching (v, d).
std::vector<CounterexampleNote> known_counterexamples(const VarietyDescriptor& v,
                                                      const DegreeVector& d);

/// Bounds exactly as printed in the family-by-family statements, next to the
/// uniformly derived ones, with a flag for every place the two disagree.
struct PrintedBounds {
  std::vector<int> hyperbolic;
  std::vector<int> lines;
  std::vector<std::string> discrepancies;
};

/// Only defined for a single Gr/P/OG/SG/Fl factor or a product of
/// Grassmannians; nullopt otherwise.
std::optional<PrintedBounds> printed_bounds(const VarietyDescriptor& v);

/// Name with every Gr(1,n) factor written as P(n-1); used for table lookups.
std::string canonical_name(const VarietyDescriptor& v);

}  // namespace ahyp
