#include "tropseq/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tropseq::io {

json to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return parse_rational(j.dump());
  throw std::invalid_argument("expected a rational string, got " + j.dump());
}

json to_json(const Polynomial& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_json(c));
  return out;
}

Polynomial polynomial_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be a JSON array, got " + j.dump());
  std::vector<Rational> coeffs;
  for (const auto& c : j) coeffs.push_back(rational_from_json(c));
  return Polynomial(std::move(coeffs));
}

json to_json(const HolonomicSystem& sys) {
  json coeffs = json::array();
  for (const auto& p : sys.coeffs()) coeffs.push_back(to_json(p));
  return {{"order", sys.order()}, {"coeffs", coeffs}};
}

HolonomicSystem system_from_json(const json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("coeffs")) {
    throw std::invalid_argument("system must be an object with \"order\" and \"coeffs\"");
  }
  if (!j["order"].is_number_integer()) throw std::invalid_argument("\"order\" must be an integer");
  const auto order = j["order"].get<long>();
  const auto& coeffs = j["coeffs"];
  if (!coeffs.is_array()) throw std::invalid_argument("\"coeffs\" must be an array");
  if (order < 1) throw std::invalid_argument("\"order\" must be at least 1");
  if (static_cast<long>(coeffs.size()) != order + 1) {
    throw std::invalid_argument("order " + std::to_string(order) + " needs " + std::to_string(order + 1) +
                                " coefficient polynomials, got " + std::to_string(coeffs.size()));
  }
  std::vector<Polynomial> polys;
  for (const auto& c : coeffs) polys.push_back(polynomial_from_json(c));
  return HolonomicSystem(std::move(polys));
}

json sequence_to_json(const Sequence& w) {
  json out = json::array();
  for (const auto& v : w) out.push_back(to_json(v));
  return out;
}

Sequence sequence_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("sequence must be a JSON array, got " + j.dump());
  Sequence w;
  for (const auto& v : j) w.push_back(rational_from_json(v));
  return w;
}

json to_json(const EntropyClass& cls) {
  return {{"case", std::string(to_string(cls.case_id))},
          {"entropy", to_json(cls.entropy)},
          {"D", to_json(cls.d)},
          {"E", to_json(cls.e)},
          {"j0", cls.j0}};
}

json to_json(const Pattern& pat) {
  json out = json::array();
  for (WindowSet s : pat.windows) out.push_back(positions(s));
  return out;
}

json to_json(const AttainmentGraph& g) {
  json edges = json::array();
  for (const auto& [a, b] : g.edges) edges.push_back({a, b});
  return {{"vertices", g.vertex_count}, {"edges", edges}, {"components", components(g)}};
}

json to_json(const LinearSystem& ls) {
  const auto rows = [](const std::vector<Constraint>& cs) {
    json out = json::array();
    for (const auto& c : cs) out.push_back({{"row", sequence_to_json(c.row)}, {"rhs", to_json(c.rhs)}});
    return out;
  };
  return {{"ambient_dim", ls.ambient_dim},
          {"equalities", rows(ls.equalities)},
          {"strict_inequalities", rows(ls.strict_inequalities)}};
}

json to_json(const ScanReport& report) {
  json rows = json::array();
  for (const auto& r : report.rows) rows.push_back({{"N", r.n}, {"dim", r.dim}, {"ratio", to_json(r.ratio)}});
  return {{"system", to_json(report.system)},
          {"rows", rows},
          {"classified_entropy", report.classified_entropy ? to_json(*report.classified_entropy) : json(nullptr)}};
}

json to_json(const LemmaReport& report) {
  json violations = json::array();
  for (const auto& v : report.violations) {
    violations.push_back(
        {{"rule", v.rule}, {"detail", v.detail}, {"pattern", to_json(v.pattern)}, {"graph", to_json(v.graph)}});
  }
  return {{"classification", to_json(report.classification)},
          {"N", report.n},
          {"cells_checked", report.cells_checked},
          {"violations", violations}};
}

std::string scan_to_csv(const ScanReport& report) {
  std::ostringstream os;
  os << "N,dim,ratio_num,ratio_den,classified_entropy\n";
  const std::string entropy = report.classified_entropy ? to_string(*report.classified_entropy) : "";
  for (const auto& r : report.rows) {
    os << r.n << ',' << r.dim << ',' << r.ratio.get_num().get_str() << ',' << r.ratio.get_den().get_str() << ','
       << entropy << '\n';
  }
  return os.str();
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

}  // namespace tropseq::io
