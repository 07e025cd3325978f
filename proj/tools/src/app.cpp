#include "ahyp/cli/app.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <future>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "ahyp/chern_fano.hpp"
#include "ahyp/chow_io.hpp"
#include "ahyp/cli/variety_parser.hpp"
#include "ahyp/errors.hpp"
#include "ahyp/genus_bound.hpp"
#include "ahyp/json.hpp"
#include "ahyp/section_dominating.hpp"

namespace ahyp::cli {

namespace {

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("malformed ") + what + ": '" + text + "'");
    }
  }
  if (out.empty()) throw std::invalid_argument(std::string("empty ") + what);
  return out;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw std::invalid_argument("range must look like lo..hi");
  const int lo = parse_int_list(text.substr(0, dots), "range")[0];
  const int hi = parse_int_list(text.substr(dots + 2), "range")[0];
  if (lo < 1 || hi < lo) throw std::invalid_argument("range needs 1 <= lo <= hi");
  return {lo, hi};
}

DegreeVector degrees_for(const VarietyDescriptor& v, const std::string& text) {
  std::vector<int> d = parse_int_list(text, "degree list");
  if (d.size() == 1 && v.picard_rank() > 1) d.assign(v.picard_rank(), d[0]);
  return DegreeVector(std::move(d));
}

std::string join(const std::vector<int>& values) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i];
  return os.str();
}

std::string bracket(const std::vector<int>& values) { return "[" + join(values) + "]"; }

std::string render_eps(const std::optional<mpq_class>& eps) {
  return eps ? to_string(*eps) : "none";
}

Json eps_json(const std::optional<mpq_class>& eps) {
  return eps ? Json(to_string(*eps)) : Json(nullptr);
}

Partition parse_partition(std::string text) {
  std::erase_if(text, [](char c) { return c == '[' || c == ']' || c == ' '; });
  if (text.empty()) return {};
  return Partition(parse_int_list(text, "partition"));
}

std::vector<std::string> discrepancies(const VarietyDescriptor& v) {
  if (auto printed = printed_bounds(v)) return printed->discrepancies;
  return {};
}

// ---------------------------------------------------------------- commands

void cmd_info(const VarietyDescriptor& v, bool json, std::ostream& os) {
  if (json) {
    os << to_json(v).dump(2) << '\n';
    return;
  }
  std::vector<int> line_dims;
  for (std::size_t i = 0; i < v.canonical.size(); ++i) {
    line_dims.push_back(fano_lines_dimension(v, i));
  }
  os << v.name << '\n'
     << "  dimension D            " << v.dimension << '\n'
     << "  canonical a            " << bracket(v.canonical) << '\n'
     << "  hyperbolic for d >=    " << bracket(hyperbolicity_threshold(v)) << '\n'
     << "  contains lines, d <=   " << bracket(lines_threshold(v)) << '\n'
     << "  line family dimension  " << bracket(line_dims) << '\n';
  if (auto printed = printed_bounds(v)) {
    os << "  printed bounds         hyperbolic " << bracket(printed->hyperbolic) << ", lines "
       << bracket(printed->lines) << '\n';
    for (const auto& flag : printed->discrepancies) os << "  discrepancy: " << flag << '\n';
  }
}

void cmd_threshold(const VarietyDescriptor& v, bool json, std::ostream& os) {
  if (json) {
    Json j{{"variety", v.name},
           {"hyperbolicity_threshold", hyperbolicity_threshold(v)},
           {"lines_threshold", lines_threshold(v)},
           {"paper_discrepancies", discrepancies(v)}};
    os << j.dump(2) << '\n';
    return;
  }
  os << v.name << ": hyperbolic for d >= " << bracket(hyperbolicity_threshold(v))
     << ", contains lines for d <= " << bracket(lines_threshold(v)) << '\n';
}

void cmd_classify(const VarietyDescriptor& v, const DegreeVector& d, bool json,
                  std::ostream& os) {
  const Classification c = classify(v, d);
  const GenusBoundReport report = hyperbolicity_certificate(v, d);
  const auto notes = known_counterexamples(v, d);
  if (json) {
    Json annotations = Json::array();
    for (const auto& n : notes) {
      annotations.push_back({{"variety", n.variety}, {"note", n.note}, {"citation", n.citation}});
    }
    Json j{{"variety", v.name},
           {"degrees", d.d},
           {"classification", to_json(c)},
           {"hyperbolicity_threshold", hyperbolicity_threshold(v)},
           {"lines_threshold", lines_threshold(v)},
           {"epsilon", eps_json(report.epsilon)},
           {"counterexamples", std::move(annotations)},
           {"paper_discrepancies", discrepancies(v)}};
    os << j.dump(2) << '\n';
    return;
  }
  using Kind = Classification::Kind;
  os << to_string(c.kind);
  switch (c.kind) {
    case Kind::ContainsLines:
      os << ", witness=" << c.indices[0] + 1 << ", lines_threshold=" << join(lines_threshold(v));
      break;
    case Kind::OpenGap: {
      std::vector<int> idx;
      for (auto i : c.indices) idx.push_back(static_cast<int>(i) + 1);
      os << ", indices=" << join(idx) << ", threshold=" << join(hyperbolicity_threshold(v));
      break;
    }
    case Kind::LowDimension:
      os << ", D=" << v.dimension;
      break;
    case Kind::Hyperbolic:
      os << ", threshold=" << join(hyperbolicity_threshold(v));
      break;
  }
  os << ", epsilon=" << render_eps(report.epsilon) << '\n';
  for (const auto& n : notes) os << "note: " << n.note << " [" << n.citation << "]\n";
}

void cmd_fano(int d, int big_n, bool json, std::ostream& os) {
  const FanoClassReport report = fano_class(d, big_n);
  if (json) {
    os << to_json(report).dump(2) << '\n';
    return;
  }
  os << "[F_1] for d=" << d << " in G(2," << big_n << "): " << to_string(report.expansion) << '\n'
     << "missing_class_ok: " << (report.missing_class_ok ? "true" : "false") << '\n';
}

void cmd_line_count(int n, bool json, std::ostream& os) {
  const mpz_class count = line_count(n);
  if (json) {
    Json j{{"n", n}, {"d", 2 * n - 3}, {"N", n + 1}, {"line_count", count.get_str()}};
    os << j.dump(2) << '\n';
    return;
  }
  os << count.get_str() << '\n';
}

struct SweepRow {
  int degree;
  Classification classification;
  std::optional<mpq_class> epsilon;
  std::optional<mpq_class> method1;
  std::optional<bool> fano_positive;
  std::optional<bool> section_dominating;  // none: no projective factor to check
};

SweepRow sweep_row(const VarietyDescriptor& v, int degree) {
  const DegreeVector d(std::vector<int>(v.picard_rank(), degree));
  SweepRow row{degree, classify(v, d), hyperbolicity_certificate(v, d).epsilon,
               method1_certificate(v, d), std::nullopt, std::nullopt};
  if (degree >= 2) row.fano_positive = fano_class(degree, degree + 3).missing_class_ok;
  std::vector<std::pair<int, int>> projective_factors;
  for (const Factor& f : v.factors) {
    if (f.family == Family::Projective) projective_factors.emplace_back(f.n, degree);
  }
  if (!projective_factors.empty()) row.section_dominating = check_product(projective_factors).passes;
  return row;
}

std::string yes_no(const std::optional<bool>& b) { return b ? (*b ? "yes" : "no") : "-"; }

void cmd_sweep(const VarietyDescriptor& v, std::pair<int, int> range, bool json,
               std::ostream& os) {
  std::vector<std::future<SweepRow>> pending;
  for (int degree = range.first; degree <= range.second; ++degree) {
    pending.push_back(std::async(std::launch::async, sweep_row, std::cref(v), degree));
  }
  std::vector<SweepRow> rows;
  for (auto& f : pending) rows.push_back(f.get());

  if (json) {
    Json out_rows = Json::array();
    for (const SweepRow& r : rows) {
      auto opt_bool = [](const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); };
      out_rows.push_back({{"d", r.degree},
                          {"classification", to_json(r.classification)},
                          {"epsilon", eps_json(r.epsilon)},
                          {"method1_epsilon", eps_json(r.method1)},
                          {"fano_positive", opt_bool(r.fano_positive)},
                          {"section_dominating", opt_bool(r.section_dominating)}});
    }
    Json j{{"variety", v.name},
           {"range", {range.first, range.second}},
           {"rows", std::move(out_rows)},
           {"paper_discrepancies", discrepancies(v)}};
    os << j.dump(2) << '\n';
    return;
  }
  os << "sweep " << v.name << " d=" << range.first << ".." << range.second << '\n';
  os << std::left << std::setw(5) << "d" << std::setw(16) << "classification" << std::setw(10)
     << "epsilon" << std::setw(10) << "method1" << std::setw(15) << "fano_positive"
     << "section_dominating" << '\n';
  for (const SweepRow& r : rows) {
    os << std::left << std::setw(5) << r.degree << std::setw(16)
       << to_string(r.classification.kind) << std::setw(10) << render_eps(r.epsilon)
       << std::setw(10) << render_eps(r.method1) << std::setw(15) << yes_no(r.fano_positive)
       << yes_no(r.section_dominating) << '\n';
  }
}

void cmd_certify(const VarietyDescriptor& v, const DegreeVector& d, bool json,
                 std::ostream& os) {
  const GenusBoundReport report = hyperbolicity_certificate(v, d);
  if (json) {
    os << to_json(report).dump(2) << '\n';
    return;
  }
  os << v.name << " d=" << bracket(d.d) << '\n';
  for (const CaseBound& c : report.cases) {
    std::ostringstream label;
    label << c.label;
    if (c.j) label << " j=" << *c.j + 1;
    os << "  " << std::left << std::setw(8) << label.str() << '[';
    for (std::size_t i = 0; i < c.coefficients.size(); ++i) {
      os << (i ? ", " : "") << to_string(c.coefficients[i]);
    }
    os << "]\n";
  }
  os << "epsilon=" << render_eps(report.epsilon) << " (binding case " << report.binding_case;
  if (report.binding_j) os << ", j=" << *report.binding_j + 1;
  os << ")\n";
  for (const auto& flag : report.ledger_flags) os << "flag: " << flag << '\n';
}

void cmd_genus_bound(const VarietyDescriptor& v, const DegreeVector& d,
                     const std::string& profile_text, const std::string& curve_text, bool json,
                     std::ostream& os) {
  SurjectionProfile profile;
  if (profile_text.empty()) {
    profile.s.assign(v.picard_rank(), 0);
    profile.s[0] = std::max(v.dimension - 2, 0);
  } else {
    profile.s = parse_int_list(profile_text, "surjection profile");
  }
  const CoefficientVector bound = basic_bound(v, d, profile);
  const auto eps = method1_certificate(v, d);

  std::optional<CurveDegrees> curve;
  if (!curve_text.empty()) {
    std::vector<std::int64_t> e;
    for (int x : parse_int_list(curve_text, "curve degrees")) e.push_back(x);
    curve.emplace(std::move(e));
  }
  std::vector<std::string> coeffs;
  for (const auto& q : bound) coeffs.push_back(to_string(q));

  if (json) {
    Json j{{"variety", v.name},
           {"degrees", d.d},
           {"profile", profile.s},
           {"basic_bound", coeffs},
           {"method1_epsilon", eps_json(eps)},
           {"curve", nullptr}};
    if (curve) {
      const auto k_dot_c = canonical_degree(v, d, *curve);
      const auto deg_n = mukai_degree_bound(v, d, *curve);
      j["curve"] = {{"e", curve->e},
                    {"K_dot_C", k_dot_c},
                    {"deg_normal_lower_bound", deg_n},
                    {"two_g_minus_two_lower_bound", degree_genus_relation(deg_n, k_dot_c)}};
    }
    os << j.dump(2) << '\n';
    return;
  }
  os << v.name << " d=" << bracket(d.d) << " s=" << bracket(profile.s) << '\n'
     << "  2g-2 >= sum c_i (H_i.C), c = [";
  for (std::size_t i = 0; i < coeffs.size(); ++i) os << (i ? ", " : "") << coeffs[i];
  os << "]\n  method-1 epsilon: " << render_eps(eps) << '\n';
  if (curve) {
    const auto k_dot_c = canonical_degree(v, d, *curve);
    const auto deg_n = mukai_degree_bound(v, d, *curve);
    os << "  K.C = " << k_dot_c << ", deg N >= " << deg_n
       << ", 2g-2 >= " << degree_genus_relation(deg_n, k_dot_c) << '\n';
  }
}

void cmd_section_dom(std::optional<int> n, std::optional<int> d, const std::string& factors,
                     bool json, std::ostream& os) {
  if (!factors.empty()) {
    std::vector<std::pair<int, int>> pairs;
    std::stringstream ss(factors);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto colon = item.find(':');
      if (colon == std::string::npos) throw std::invalid_argument("factors look like n:d,n:d");
      pairs.emplace_back(parse_int_list(item.substr(0, colon), "factor")[0],
                         parse_int_list(item.substr(colon + 1), "factor")[0]);
    }
    const ProductCheck check = check_product(pairs);
    if (json) {
      os << to_json(check).dump(2) << '\n';
      return;
    }
    for (const auto& f : check.factors) {
      os << "P(" << f.n << ") d=" << f.d << ": rank " << f.rank << "/" << f.target_dimension
         << (f.passes ? " pass" : " FAIL") << '\n';
    }
    os << (check.passes ? "product: pass" : "product: FAIL") << '\n';
    return;
  }
  std::vector<SectionDominatingCheck> checks;
  const int n_lo = n.value_or(1), n_hi = n.value_or(4);
  const int d_lo = d.value_or(1), d_hi = d.value_or(6);
  for (int ni = n_lo; ni <= n_hi; ++ni) {
    for (int di = d_lo; di <= d_hi; ++di) checks.push_back(check_projective_space(ni, di));
  }
  if (json) {
    Json j = Json::array();
    for (const auto& c : checks) j.push_back(to_json(c));
    os << j.dump(2) << '\n';
    return;
  }
  os << std::left << std::setw(4) << "n" << std::setw(4) << "d" << std::setw(8) << "rank"
     << std::setw(8) << "target" << "result" << '\n';
  for (const auto& c : checks) {
    os << std::left << std::setw(4) << c.n << std::setw(4) << c.d << std::setw(8) << c.rank
       << std::setw(8) << c.target_dimension << (c.passes ? "pass" : "FAIL") << '\n';
  }
}

void cmd_schubert(const std::string& op, int k, int n, const std::vector<std::string>& operands,
                  bool json, std::ostream& os) {
  const RingContext ctx(k, n);
  if (op == "dual") {
    // a bracketed argument arrives split into its entries
    if (operands.empty()) throw std::invalid_argument("dual takes one partition");
    std::string joined;
    for (const auto& part : operands) joined += (joined.empty() ? "" : ",") + part;
    const Partition lambda = parse_partition(joined);
    const Partition comp = complement(ctx, lambda);
    const auto [dual_ctx, dual_lambda] = transpose_dual(ctx, lambda);
    if (json) {
      Json j{{"k", k},
             {"n", n},
             {"partition", std::vector<int>(lambda.parts().begin(), lambda.parts().end())},
             {"complement", std::vector<int>(comp.parts().begin(), comp.parts().end())},
             {"dual",
              {{"k", dual_ctx.k()},
               {"n", dual_ctx.n()},
               {"partition",
                std::vector<int>(dual_lambda.parts().begin(), dual_lambda.parts().end())}}}};
      os << j.dump(2) << '\n';
      return;
    }
    os << "complement: " << comp.to_string() << '\n'
       << "transpose_dual: G(" << dual_ctx.k() << "," << dual_ctx.n() << ") "
       << dual_lambda.to_string() << '\n';
    return;
  }
  if (operands.empty()) throw std::invalid_argument(op + " needs at least one operand");
  ChowElement acc = parse_chow_element(ctx, operands[0]);
  for (std::size_t i = 1; i < operands.size(); ++i) {
    acc = multiply(acc, parse_chow_element(ctx, operands[i]));
  }
  if (op == "mul") {
    os << (json ? to_json(acc).dump(2) : to_string(acc)) << '\n';
    return;
  }
  // integrate: product of all operands, then the point-class coefficient
  const mpz_class value = integrate(acc);
  if (json) {
    os << Json{{"k", k}, {"n", n}, {"integral", value.get_str()}}.dump(2) << '\n';
  } else {
    os << value.get_str() << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Algebraic hyperbolicity and line thresholds for hypersurfaces in homogeneous "
               "varieties",
               "ahyp"};
  app.require_subcommand(1);

  bool json = false;
  std::string out_file;
  std::string variety_text, deg_text, range_text, profile_text, curve_text, factors_text;
  std::string schubert_op;
  std::vector<std::string> operands;
  int d = 0, big_n = 0, n = 0, k = 0;
  std::optional<int> opt_n, opt_d;
  std::function<void(std::ostream&)> action;

  auto common = [&](CLI::App* sub) {
    sub->add_flag("--json", json, "Emit JSON instead of text");
    sub->add_option("--out", out_file, "Write output to FILE");
  };
  auto with_variety = [&](CLI::App* sub) {
    sub->add_option("variety", variety_text, "Variety, e.g. Gr(2,4)xP(2)")->required();
    common(sub);
  };

  auto* info = app.add_subcommand("info", "Descriptor, thresholds and discrepancy flags");
  with_variety(info);
  info->callback([&] {
    action = [&](std::ostream& os) { cmd_info(parse_variety(variety_text), json, os); };
  });

  auto* threshold = app.add_subcommand("threshold", "Hyperbolicity and line thresholds");
  with_variety(threshold);
  threshold->callback([&] {
    action = [&](std::ostream& os) { cmd_threshold(parse_variety(variety_text), json, os); };
  });

  auto* cls = app.add_subcommand("classify", "Classify a very general hypersurface");
  with_variety(cls);
  cls->add_option("--deg", deg_text, "Degrees d1,d2,...")->required();
  cls->callback([&] {
    action = [&](std::ostream& os) {
      const auto v = parse_variety(variety_text);
      cmd_classify(v, degrees_for(v, deg_text), json, os);
    };
  });

  auto* fano = app.add_subcommand("fano-class", "Class of the Fano scheme of lines in G(2,N)");
  fano->add_option("--d", d, "Hypersurface degree")->required();
  fano->add_option("--N", big_n, "Ambient G(2,N); defaults to d+3");
  common(fano);
  fano->callback([&] {
    action = [&](std::ostream& os) { cmd_fano(d, big_n ? big_n : d + 3, json, os); };
  });

  auto* lines = app.add_subcommand("line-count", "Lines on a general (2n-3)-ic in P^n");
  lines->add_option("--n", n, "Projective dimension n >= 3")->required();
  common(lines);
  lines->callback([&] { action = [&](std::ostream& os) { cmd_line_count(n, json, os); }; });

  auto* schubert = app.add_subcommand("schubert", "Schubert calculus in G(k,n)");
  schubert->add_option("op", schubert_op, "mul | integrate | dual")
      ->required()
      ->check(CLI::IsMember({"mul", "integrate", "dual"}));
  schubert->add_option("--k", k, "Subspace dimension k")->required();
  schubert->add_option("--n", n, "Ambient dimension n")->required();
  schubert->add_option("operands", operands, "Classes like '2*s[2,1] + s[1]' or a partition");
  common(schubert);
  schubert->callback([&] {
    action = [&](std::ostream& os) { cmd_schubert(schubert_op, k, n, operands, json, os); };
  });

  auto* genus = app.add_subcommand("genus-bound", "Genus lower bound from a surjection profile");
  with_variety(genus);
  genus->add_option("--deg", deg_text, "Degrees d1,d2,...")->required();
  genus->add_option("--s", profile_text, "Profile s1,s2,...; defaults to (D-2,0,...)");
  genus->add_option("--e", curve_text, "Curve intersection numbers e1,e2,...");
  genus->callback([&] {
    action = [&](std::ostream& os) {
      const auto v = parse_variety(variety_text);
      cmd_genus_bound(v, degrees_for(v, deg_text), profile_text, curve_text, json, os);
    };
  });

  auto* certify = app.add_subcommand("certify", "Scroll-argument hyperbolicity certificate");
  with_variety(certify);
  certify->add_option("--deg", deg_text, "Degrees d1,d2,...")->required();
  certify->callback([&] {
    action = [&](std::ostream& os) {
      const auto v = parse_variety(variety_text);
      cmd_certify(v, degrees_for(v, deg_text), json, os);
    };
  });

  auto* section = app.add_subcommand("section-dom", "Section-dominating check on P^n");
  section->add_option("--n", opt_n, "Single n (default grid 1..4)");
  section->add_option("--d", opt_d, "Single d (default grid 1..6)");
  section->add_option("--factors", factors_text, "Product check, e.g. 2:2,1:3");
  common(section);
  section->callback([&] {
    action = [&](std::ostream& os) { cmd_section_dom(opt_n, opt_d, factors_text, json, os); };
  });

  auto* sweep = app.add_subcommand("sweep", "Classify a range of uniform degrees");
  with_variety(sweep);
  sweep->add_option("--range", range_text, "Degree range lo..hi")->required();
  sweep->callback([&] {
    action = [&](std::ostream& os) {
      cmd_sweep(parse_variety(variety_text), parse_range(range_text), json, os);
    };
  });

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    std::ostringstream buffer;
    action(buffer);
    if (out_file.empty()) {
      out << buffer.str() << std::flush;
    } else {
      std::ofstream file(out_file, std::ios::binary);
      if (!file) throw std::invalid_argument("cannot open output file " + out_file);
      file << buffer.str();
    }
    return kOk;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

}  // namespace ahyp::cli
