#include "lcpol/io.hpp"

#include <sstream>

namespace lcpol {

using json = nlohmann::ordered_json;

namespace {

std::string degree_csv(const MultiDegree& a) {
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(a[i]);
  }
  return out;
}

// Single-line form of the ideal text, used inside reports.
std::string ideal_one_line(const MonomialIdeal& ideal) {
  std::string text = format_ideal(ideal);
  if (!text.empty() && text.back() == '\n') text.pop_back();
  for (auto& c : text)
    if (c == '\n') c = ';';
  return text;
}

}  // namespace

json table_to_json(const LCTable& table) {
  json entries = json::array();
  for (const auto& [key, dim] : table.entries)
    entries.push_back({{"degree", key.first.entries()}, {"i", key.second}, {"dim", dim}});
  return {{"vars", table.ideal.var_names()}, {"field", table.field.to_string()}, {"entries", entries}};
}

std::string table_to_tsv(const LCTable& table) {
  std::ostringstream os;
  os << "degree\ti\tdim\n";
  for (const auto& [key, dim] : table.entries)
    os << degree_csv(key.first) << '\t' << key.second << '\t' << dim << '\n';
  return os.str();
}

std::string table_to_text(const LCTable& table) {
  std::ostringstream os;
  os << "# local cohomology of S/I over " << table.field.to_string() << ", vars";
  for (const auto& v : table.ideal.var_names()) os << ' ' << v;
  os << '\n';
  for (const auto& [key, dim] : table.entries)
    os << "H^" << key.second << " degree " << format_degree(key.first) << " : " << dim << '\n';
  return os.str();
}

json ideal_to_json(const MonomialIdeal& ideal) {
  json gens = json::array();
  for (const auto& m : ideal.gens()) gens.push_back(format_monomial(m, ideal.var_names()));
  return {{"vars", ideal.var_names()}, {"gens", gens}, {"rho", rho(ideal)}, {"rho_sum", rho_sum(ideal)}};
}

json complex_to_json(const SimplicialComplex& complex, const std::vector<std::string>& vertex_names) {
  json facets = json::array();
  for (FaceMask f : complex.facets()) {
    json face = json::array();
    for (auto v : face_vertices(f)) face.push_back(vertex_names.at(v));
    facets.push_back(face);
  }
  return {{"void", complex.is_void()},
          {"facets", facets},
          {"text", format_complex(complex, vertex_names)},
          {"euler_characteristic", euler_characteristic_reduced(complex)}};
}

json report_to_json(const VerificationReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    json failures = json::array();
    for (const auto& f : c.failures) {
      json entry = {{"degree", f.degree.entries()}, {"i", f.index}, {"lhs", f.lhs}, {"rhs", f.rhs}};
      if (!f.detail.empty()) entry["detail"] = f.detail;
      failures.push_back(entry);
    }
    checks.push_back({{"name", c.name},
                      {"degrees_checked", c.degrees_checked},
                      {"indices_checked", c.indices_checked},
                      {"failures", failures},
                      {"pass", c.passed()}});
  }
  return {{"ideal", ideal_one_line(report.ideal)},
          {"field", report.field.to_string()},
          {"checks", checks},
          {"pass", report.passed()}};
}

std::string report_to_text(const VerificationReport& report) {
  std::ostringstream os;
  os << "ideal: " << ideal_one_line(report.ideal) << "\nfield: " << report.field.to_string() << '\n';
  for (const auto& c : report.checks) {
    os << (c.passed() ? "PASS " : "FAIL ") << c.name << " (" << c.degrees_checked << " degrees, "
       << c.indices_checked << " indices)\n";
    for (const auto& f : c.failures) {
      os << "  degree " << format_degree(f.degree) << " i=" << f.index << " lhs=" << f.lhs
         << " rhs=" << f.rhs;
      if (!f.detail.empty()) os << " [" << f.detail << ']';
      os << '\n';
    }
  }
  os << (report.passed() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

}  // namespace lcpol
