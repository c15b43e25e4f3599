#pragma once

// CSV and JSON renderings of relation systems, matrices and classes. Output is
// a pure function of the input: fixed basis order, "p/q" rationals, LF endings.

#include <bn2/basis.hpp>
#include <bn2/relations.hpp>
#include <bn2/solver.hpp>

#include <json.hpp>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace bn2 {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string csv_line(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t n = 0; n < fields.size(); ++n) {
    if (n) out += ',';
    out += csv_field(fields[n]);
  }
  return out + "\n";
}

/// Right-hand side as exported: evaluated when k is given, symbolic otherwise.
inline std::string rhs_text(const Relation& rel, std::optional<int> k) {
  if (k) return to_string(evaluate_rhs(rel, *k));
  return describe(rel.rhs, rel.genus);
}

/// Header "source,<labels>,rhs" followed by one line per relation.
inline std::string relations_csv(const RelationSystem& sys, std::optional<int> k = std::nullopt) {
  std::vector<std::string> header{"source"};
  for (const auto& l : sys.basis.labels()) header.push_back(to_string(l));
  header.push_back("rhs");
  std::string out = csv_line(header);
  const auto q = build_matrix(sys);
  for (std::size_t r = 0; r < sys.rows.size(); ++r) {
    std::vector<std::string> fields{sys.rows[r].source};
    for (std::size_t c = 0; c < q.cols(); ++c) fields.push_back(to_string(q(r, c)));
    fields.push_back(rhs_text(sys.rows[r], k));
    out += csv_line(fields);
  }
  return out;
}

inline nlohmann::json relations_json(const RelationSystem& sys, std::optional<int> k = std::nullopt) {
  nlohmann::json labels = nlohmann::json::array();
  for (const auto& l : sys.basis.labels()) labels.push_back(to_string(l));
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& rel : sys.rows) {
    nlohmann::json coeffs = nlohmann::json::object();
    for (const auto& [l, v] : rel.coefficients) coeffs[to_string(l)] = to_string(v);
    rows.push_back({{"source", rel.source}, {"coeffs", coeffs}, {"rhs", rhs_text(rel, k)}});
  }
  nlohmann::json out{{"g", sys.genus}, {"labels", labels}, {"rows", rows}};
  if (k) out["k"] = *k;
  return out;
}

/// A matrix whose rows are indexed by basis labels (e.g. T_g); columns are numbered.
inline std::string labelled_matrix_csv(const Basis& basis, const RationalMatrix& m) {
  std::vector<std::string> header{"label"};
  for (std::size_t c = 0; c < m.cols(); ++c) header.push_back("c" + std::to_string(c + 1));
  std::string out = csv_line(header);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::vector<std::string> fields{to_string(basis[r])};
    for (std::size_t c = 0; c < m.cols(); ++c) fields.push_back(to_string(m(r, c)));
    out += csv_line(fields);
  }
  return out;
}

inline nlohmann::json labelled_matrix_json(const Basis& basis, const RationalMatrix& m) {
  nlohmann::json labels = nlohmann::json::array();
  for (const auto& l : basis.labels()) labels.push_back(to_string(l));
  nlohmann::json columns = nlohmann::json::array();
  for (std::size_t c = 0; c < m.cols(); ++c) {
    nlohmann::json col = nlohmann::json::object();
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (m(r, c) != 0) col[to_string(basis[r])] = to_string(m(r, c));
    columns.push_back(col);
  }
  return {{"g", basis.genus()}, {"labels", labels}, {"columns", columns}};
}

/// One "label coefficient" line per generator, in basis order.
inline std::string class_text(const ClassExpression& cls) {
  std::ostringstream out;
  for (const auto& l : enumerate_basis(cls.genus())) out << to_string(l) << ' ' << to_string(cls.coefficient(l)) << '\n';
  return out.str();
}

inline std::string class_csv(const ClassExpression& cls) {
  std::string out = csv_line({"label", "coefficient"});
  for (const auto& l : enumerate_basis(cls.genus())) out += csv_line({to_string(l), to_string(cls.coefficient(l))});
  return out;
}

inline nlohmann::json class_json(const ClassExpression& cls) {
  nlohmann::json labels = nlohmann::json::array();
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& l : enumerate_basis(cls.genus())) {
    labels.push_back(to_string(l));
    coeffs.push_back(to_string(cls.coefficient(l)));
  }
  return {{"g", cls.genus()}, {"labels", labels}, {"coefficients", coeffs}};
}

}  // namespace bn2
