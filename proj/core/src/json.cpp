#include "ahyp/json.hpp"

#include <stdexcept>

namespace ahyp {

Json to_json(const ChowElement& x) {
  Json terms = Json::array();
  for (const auto& [lambda, c] : x.terms()) {
    Json parts = Json::array();
    for (int p : lambda.parts()) parts.push_back(p);
    terms.push_back({{"partition", std::move(parts)}, {"coeff", c.get_str()}});
  }
  return {{"k", x.context().k()}, {"n", x.context().n()}, {"terms", std::move(terms)}};
}

ChowElement chow_element_from_json(const Json& j) {
  const RingContext ctx(j.at("k").get<int>(), j.at("n").get<int>());
  ChowElement out(ctx);
  for (const Json& term : j.at("terms")) {
    const mpz_class c(term.at("coeff").get<std::string>());
    out.add(Partition(term.at("partition").get<std::vector<int>>()), c);
  }
  return out;
}

Json to_json(const FanoClassReport& report) {
  Json positive = Json::array();
  for (const auto& [lambda, c] : report.positive_coefficients) {
    Json parts = Json::array();
    for (int p : lambda.parts()) parts.push_back(p);
    positive.push_back({{"partition", std::move(parts)}, {"coeff", c.get_str()}});
  }
  Json out{{"d", report.d},
           {"N", report.big_n},
           {"expansion", to_json(report.expansion)},
           {"missing_class_ok", report.missing_class_ok},
           {"positive_coefficients", std::move(positive)}};
  const bool zero_dimensional = report.d + 1 == report.expansion.context().dimension();
  out["line_count"] =
      zero_dimensional ? Json(integrate(report.expansion).get_str()) : Json(nullptr);
  return out;
}

namespace {

Json factor_json(const Factor& f) {
  static const char* families[] = {"Grassmannian", "Projective", "Orthogonal", "Symplectic",
                                   "Flag"};
  return {{"name", f.name()},
          {"family", families[static_cast<int>(f.family)]},
          {"ks", f.ks},
          {"n", f.n},
          {"D", f.dimension},
          {"a", f.canonical}};
}

}  // namespace

Json to_json(const VarietyDescriptor& v) {
  Json factors = Json::array();
  for (const Factor& f : v.factors) factors.push_back(factor_json(f));
  std::vector<int> line_dims;
  for (std::size_t i = 0; i < v.canonical.size(); ++i) {
    line_dims.push_back(fano_lines_dimension(v, i));
  }
  Json out{{"name", v.name},
           {"D", v.dimension},
           {"a", v.canonical},
           {"factors", std::move(factors)},
           {"hyperbolicity_threshold", hyperbolicity_threshold(v)},
           {"lines_threshold", lines_threshold(v)},
           {"line_family_dimension", line_dims}};
  Json discrepancies = Json::array();
  if (auto printed = printed_bounds(v)) {
    out["printed_bounds"] = {{"hyperbolic", printed->hyperbolic}, {"lines", printed->lines}};
    for (const auto& flag : printed->discrepancies) discrepancies.push_back(flag);
  } else {
    out["printed_bounds"] = nullptr;
  }
  out["paper_discrepancies"] = std::move(discrepancies);
  return out;
}

Json to_json(const Classification& c) {
  Json indices = Json::array();
  for (std::size_t i : c.indices) indices.push_back(i + 1);
  return {{"kind", std::string(to_string(c.kind))}, {"indices", std::move(indices)}};
}

Json to_json(const GenusBoundReport& report) {
  Json cases = Json::array();
  for (const CaseBound& c : report.cases) {
    Json coefficients = Json::array();
    for (const mpq_class& q : c.coefficients) coefficients.push_back(to_string(q));
    cases.push_back({{"case", std::string(1, c.label)},
                     {"j", c.j ? Json(*c.j + 1) : Json(nullptr)},
                     {"coefficients", std::move(coefficients)}});
  }
  return {{"variety", report.variety.name},
          {"degrees", report.degrees.d},
          {"epsilon", report.epsilon ? Json(to_string(*report.epsilon)) : Json(nullptr)},
          {"minimum", to_string(report.minimum)},
          {"binding_case", std::string(1, report.binding_case)},
          {"binding_j", report.binding_j ? Json(*report.binding_j + 1) : Json(nullptr)},
          {"cases", std::move(cases)},
          {"ledger_flags", report.ledger_flags}};
}

Json to_json(const SectionDominatingCheck& check) {
  return {{"n", check.n},
          {"d", check.d},
          {"passes", check.passes},
          {"rank", check.rank},
          {"target_dimension", check.target_dimension},
          {"columns", check.columns}};
}

Json to_json(const ProductCheck& check) {
  Json factors = Json::array();
  for (const auto& f : check.factors) factors.push_back(to_json(f));
  return {{"passes", check.passes}, {"factors", std::move(factors)}};
}

}  // namespace ahyp
