#include "ahyp/variety.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ahyp {

namespace {

std::string join_ints(const std::vector<int>& values) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) os << ',';
    os << values[i];
  }
  return os.str();
}

VarietyDescriptor single(Factor f) {
  VarietyDescriptor v;
  v.name = f.name();
  v.dimension = f.dimension;
  v.canonical = f.canonical;
  v.factors.push_back(std::move(f));
  return v;
}

std::string pair_label(const char* family, int k, int n) {
  return std::string(family) + "(" + std::to_string(k) + "," + std::to_string(n) + ")";
}

// Shared gate for the isotropic Grassmannians: integral D >= 1, a <= -2.
void check_isotropic(const char* family, int k, int n, int twice_dim, int a) {
  const std::string label = pair_label(family, k, n);
  if (k < 1 || n < 1) throw std::invalid_argument(label + ": k and n must be positive");
  if (twice_dim % 2 != 0) throw std::invalid_argument(label + ": dimension is not an integer");
  if (twice_dim / 2 < 1) throw std::invalid_argument(label + ": dimension must be at least 1");
  if (a > -2) {
    throw std::invalid_argument(label + ": canonical coefficient " + std::to_string(a) +
                                " violates a <= -2");
  }
}

}  // namespace

std::string Factor::name() const {
  switch (family) {
    case Family::Grassmannian: return pair_label("Gr", ks.at(0), n);
    case Family::Projective: return "P(" + std::to_string(n) + ")";
    case Family::Orthogonal: return pair_label("OG", ks.at(0), n);
    case Family::Symplectic: return pair_label("SG", ks.at(0), n);
    case Family::Flag: return "Fl(" + join_ints(ks) + ";" + std::to_string(n) + ")";
  }
  return {};
}

DegreeVector::DegreeVector(std::vector<int> degrees) : d(std::move(degrees)) {
  for (int x : d) {
    if (x < 1) throw std::invalid_argument("degrees must be positive integers");
  }
}

VarietyDescriptor grassmannian(int k, int n) {
  if (k < 1 || n <= k) {
    throw std::invalid_argument(pair_label("Gr", k, n) + ": requires 1 <= k < n");
  }
  return single({Family::Grassmannian, {k}, n, k * (n - k), {-n}});
}

VarietyDescriptor projective(int n) {
  if (n < 1) throw std::invalid_argument("P(" + std::to_string(n) + "): requires n >= 1");
  return single({Family::Projective, {}, n, n, {-(n + 1)}});
}

VarietyDescriptor orthogonal(int k, int n) {
  const int twice_dim = k * (2 * n - 3 * k - 1);
  const int a = -n + 3 * k - 1;
  check_isotropic("OG", k, n, twice_dim, a);
  return single({Family::Orthogonal, {k}, n, twice_dim / 2, {a}});
}

VarietyDescriptor symplectic(int k, int n) {
  const int twice_dim = k * (2 * n - 3 * k + 1);
  const int a = -n + 3 * k - 2;
  check_isotropic("SG", k, n, twice_dim, a);
  return single({Family::Symplectic, {k}, n, twice_dim / 2, {a}});
}

VarietyDescriptor flag(const std::vector<int>& ks, int n) {
  const std::string label = "Fl(" + join_ints(ks) + ";" + std::to_string(n) + ")";
  if (ks.empty()) throw std::invalid_argument(label + ": needs at least one step");
  std::vector<int> steps{0};
  steps.insert(steps.end(), ks.begin(), ks.end());
  steps.push_back(n);
  for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
    if (steps[i] >= steps[i + 1]) {
      throw std::invalid_argument(label + ": requires 0 < k_1 < ... < k_m < n");
    }
  }
  const std::size_t m = ks.size();
  std::vector<int> a(m);
  int dimension = 0;
  for (std::size_t i = 1; i <= m; ++i) {
    a[i - 1] = -(steps[i + 1] - steps[i - 1]);
    dimension += steps[i] * (steps[i + 1] - steps[i]);
  }
  return single({Family::Flag, ks, n, dimension, std::move(a)});
}

VarietyDescriptor product(const std::vector<VarietyDescriptor>& parts) {
  if (parts.empty()) throw std::invalid_argument("product needs at least one factor");
  if (parts.size() == 1) return parts.front();
  VarietyDescriptor v;
  for (const VarietyDescriptor& p : parts) {
    if (!v.name.empty()) v.name += "x";
    v.name += p.name;
    v.dimension += p.dimension;
    v.canonical.insert(v.canonical.end(), p.canonical.begin(), p.canonical.end());
    v.factors.insert(v.factors.end(), p.factors.begin(), p.factors.end());
  }
  return v;
}

std::vector<int> hyperbolicity_threshold(const VarietyDescriptor& v) {
  std::vector<int> out;
  for (int a : v.canonical) out.push_back(v.dimension - a - 2);
  return out;
}

std::vector<int> lines_threshold(const VarietyDescriptor& v) {
  std::vector<int> out;
  for (int a : v.canonical) out.push_back(v.dimension - a - 4);
  return out;
}

int fano_lines_dimension(const VarietyDescriptor& v, std::size_t i) {
  return v.dimension - v.canonical.at(i) - 3;
}

std::string_view to_string(Classification::Kind kind) {
  switch (kind) {
    case Classification::Kind::Hyperbolic: return "Hyperbolic";
    case Classification::Kind::ContainsLines: return "ContainsLines";
    case Classification::Kind::OpenGap: return "OpenGap";
    case Classification::Kind::LowDimension: return "LowDimension";
  }
  return "";
}

Classification classify(const VarietyDescriptor& v, const DegreeVector& d) {
  if (d.size() != v.canonical.size()) {
    throw std::invalid_argument("degree vector has " + std::to_string(d.size()) +
                                " entries but the Picard rank is " +
                                std::to_string(v.canonical.size()));
  }
  using Kind = Classification::Kind;
  if (v.dimension < 4) return {Kind::LowDimension, {}};
  const auto lines = lines_threshold(v);
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] <= lines[i]) return {Kind::ContainsLines, {i}};
  }
  const auto hyper = hyperbolicity_threshold(v);
  std::vector<std::size_t> gap;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] < hyper[i]) gap.push_back(i);
  }
  if (gap.empty()) return {Kind::Hyperbolic, {}};
  return {Kind::OpenGap, std::move(gap)};
}

std::string canonical_name(const VarietyDescriptor& v) {
  std::string out;
  for (const Factor& f : v.factors) {
    if (!out.empty()) out += "x";
    if (f.family == Family::Grassmannian && f.ks.at(0) == 1) {
      out += "P(" + std::to_string(f.n - 1) + ")";
    } else {
      out += f.name();
    }
  }
  return out;
}

namespace {

struct TableEntry {
  enum class Trigger { DegreeEquals, Boundary };
  const char* variety;
  Trigger trigger;
  std::vector<std::size_t> indices;  // DegreeEquals: any of these has d_i == degree
  int degree;
  const char* note;
  const char* citation;
};

const std::vector<TableEntry>& counterexample_table() {
  using T = TableEntry::Trigger;
  static const std::vector<TableEntry> table{
      {"P(2)xP(2)", T::DegreeEquals, {0, 1}, 4,
       "a very general surface with d_1 = 4 or d_2 = 4 contains an elliptic curve; "
       "not algebraically hyperbolic",
       "Yeong 2022, Lemma 4.2"},
      {"P(2)xP(1)xP(1)", T::DegreeEquals, {0}, 4,
       "a very general surface with d_1 = 4 contains an elliptic curve; "
       "not algebraically hyperbolic",
       "argument of Yeong 2022, Lemma 4.2"},
      {"P(1)xP(1)xP(1)", T::Boundary, {}, 0,
       "d_i >= D - a_i - 3 for all i does not imply algebraic hyperbolicity",
       "Coskun-Riedl 2019"},
      {"P(2)xP(1)", T::Boundary, {}, 0,
       "d_i >= D - a_i - 3 for all i does not imply algebraic hyperbolicity",
       "Coskun-Riedl 2019"},
  };
  return table;
}

}  // namespace

std::vector<CounterexampleNote> known_counterexamples(const VarietyDescriptor& v,
                                                      const DegreeVector& d) {
  std::vector<CounterexampleNote> out;
  const std::string name = canonical_name(v);
  for (const TableEntry& entry : counterexample_table()) {
    if (name != entry.variety || d.size() != v.canonical.size()) continue;
    bool hit = false;
    if (entry.trigger == TableEntry::Trigger::DegreeEquals) {
      hit = std::any_of(entry.indices.begin(), entry.indices.end(), [&](std::size_t i) {
        return i < d.size() && d[i] == entry.degree;
      });
    } else {
      bool all_at_least = true;
      bool some_equal = false;
      for (std::size_t i = 0; i < d.size(); ++i) {
        const int bound = fano_lines_dimension(v, i);
        all_at_least = all_at_least && d[i] >= bound;
        some_equal = some_equal || d[i] == bound;
      }
      hit = all_at_least && some_equal;
    }
    if (hit) out.push_back({entry.variety, entry.note, entry.citation});
  }
  return out;
}

std::optional<PrintedBounds> printed_bounds(const VarietyDescriptor& v) {
  const int dim = v.dimension;
  const bool all_grassmannian =
      std::all_of(v.factors.begin(), v.factors.end(), [](const Factor& f) {
        return f.family == Family::Grassmannian || f.family == Family::Projective;
      });
  PrintedBounds out;
  if (all_grassmannian) {
    // d >= n_j + sum k_i(n_i - k_i) - 2 and d_j <= n_j + sum k_i(n_i - k_i) - 4
    for (const Factor& f : v.factors) {
      const int ambient = f.family == Family::Projective ? f.n + 1 : f.n;
      out.hyperbolic.push_back(ambient + dim - 2);
      out.lines.push_back(ambient + dim - 4);
    }
    return out;
  }
  if (v.factors.size() != 1) return std::nullopt;
  const Factor& f = v.factors.front();
  switch (f.family) {
    case Family::Orthogonal: {
      const int k = f.ks[0];
      out.hyperbolic.push_back(f.n - 3 * k - 1 + dim);
      out.lines.push_back(f.n - 3 * k - 3 + dim);
      break;
    }
    case Family::Symplectic: {
      const int k = f.ks[0];
      out.hyperbolic.push_back(f.n + 3 * k + dim);
      out.lines.push_back(f.n + 3 * k - 2 + dim);
      std::ostringstream os;
      os << "symplectic-threshold-sign: printed bounds d >= n+3k+D = " << out.hyperbolic[0]
         << " and d <= n+3k-2+D = " << out.lines[0] << " disagree with K_SG = (-n+3k-2)H, "
         << "which gives D-a-2 = D+n-3k = " << dim + f.n - 3 * k << " and D-a-4 = "
         << dim + f.n - 3 * k - 2;
      out.discrepancies.push_back(os.str());
      break;
    }
    case Family::Flag: {
      // printed dimension: sum_{i=0}^{m} k_{i+1}(k_{i+1} - k_i), k_0 = 0, k_{m+1} = n
      std::vector<int> steps{0};
      steps.insert(steps.end(), f.ks.begin(), f.ks.end());
      steps.push_back(f.n);
      int printed_dim = 0;
      for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
        printed_dim += steps[i + 1] * (steps[i + 1] - steps[i]);
      }
      for (int a : f.canonical) {
        out.hyperbolic.push_back(-a + printed_dim - 2);
        out.lines.push_back(-a + printed_dim - 4);
      }
      if (printed_dim != dim) {
        out.discrepancies.push_back(
            "flag-dimension-variance: printed dimension sum_{i=0}^{m} k_{i+1}(k_{i+1}-k_i) = " +
            std::to_string(printed_dim) + " differs from the standard dimension " +
            std::to_string(dim) + "; thresholds use the standard dimension");
      }
      out.discrepancies.push_back(
          "flag-lines-inequality-direction: printed line-containment clause reads "
          "d_i >= ... - 4; the dichotomy requires d_i <= D - a_i - 4");
      break;
    }
    default:
      return std::nullopt;
  }
  return out;
}

}  // namespace ahyp
