#include "qcomb/io.hpp"

#include <sstream>
#include <stdexcept>

namespace qcomb {

using nlohmann::json;

json poly_to_json(const QPoly& p) {
  json j;
  j["coeffs"] = json::array();
  if (p.is_zero()) {
    j["minexp"] = 0;
    return j;
  }
  const int lo = p.min_exponent();
  const int hi = p.max_exponent();
  j["minexp"] = lo;
  for (int e = lo; e <= hi; ++e) j["coeffs"].push_back(p.coeff(e).str());
  return j;
}

QPoly poly_from_json(const json& j) {
  if (!j.is_object() || !j.contains("minexp") || !j.contains("coeffs"))
    throw std::invalid_argument("malformed polynomial object");
  const int lo = j.at("minexp").get<int>();
  QPoly p;
  int e = lo;
  for (const auto& c : j.at("coeffs")) {
    p += QPoly::term(BigInt(c.get<std::string>()), e);
    ++e;
  }
  return p;
}

json matrix_to_json(const TransitionMatrix& m) {
  json j;
  j["n"] = m.n;
  j["from"] = basis_name(m.from);
  j["to"] = basis_name(m.to);
  j["order"] = json::array();
  for (const auto& c : m.order) j["order"].push_back(c.label());
  j["rows"] = json::array();
  for (const auto& row : m.entry) {
    json r = json::array();
    for (const auto& p : row) r.push_back(poly_to_json(p));
    j["rows"].push_back(r);
  }
  return j;
}

namespace {

Composition composition_from_label(const std::string& label) {
  std::vector<int> parts;
  std::string tok;
  std::istringstream is(label);
  while (std::getline(is, tok, '.')) parts.push_back(std::stoi(tok));
  return Composition(std::move(parts));
}

}  // namespace

TransitionMatrix matrix_from_json(const json& j) {
  TransitionMatrix m;
  m.n = j.at("n").get<int>();
  auto from = basis_from_string(j.at("from").get<std::string>());
  auto to = basis_from_string(j.at("to").get<std::string>());
  if (!from || !to) throw std::invalid_argument("unknown basis name");
  m.from = *from;
  m.to = *to;
  for (const auto& label : j.at("order"))
    m.order.push_back(composition_from_label(label.get<std::string>()));
  for (const auto& row : j.at("rows")) {
    m.entry.emplace_back();
    for (const auto& p : row) m.entry.back().push_back(poly_from_json(p));
  }
  if (m.order.size() != m.entry.size())
    throw std::invalid_argument("row count does not match order");
  for (const auto& row : m.entry)
    if (row.size() != m.order.size())
      throw std::invalid_argument("column count does not match order");
  return m;
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string matrix_to_csv(const TransitionMatrix& m) {
  std::ostringstream os;
  os << "row";
  for (const auto& c : m.order) os << ',' << csv_escape(c.label());
  os << '\n';
  for (size_t i = 0; i < m.entry.size(); ++i) {
    os << csv_escape(m.order[i].label());
    for (const auto& p : m.entry[i]) os << ',' << csv_escape(p.str());
    os << '\n';
  }
  return os.str();
}

std::string matrix_to_pretty(const TransitionMatrix& m) {
  const size_t size = m.order.size();
  std::vector<std::vector<std::string>> cells(size + 1,
                                              std::vector<std::string>(size + 1));
  cells[0][0] = basis_name(m.from) + std::string("->") + basis_name(m.to);
  for (size_t j = 0; j < size; ++j) cells[0][j + 1] = m.order[j].label();
  for (size_t i = 0; i < size; ++i) {
    cells[i + 1][0] = m.order[i].label();
    for (size_t j = 0; j < size; ++j) {
      const QPoly& p = m.entry[i][j];
      cells[i + 1][j + 1] = p.is_zero() ? "." : p.bracket_str();
    }
  }
  std::vector<size_t> width(size + 1, 0);
  for (const auto& row : cells)
    for (size_t j = 0; j <= size; ++j)
      width[j] = std::max(width[j], row[j].size());
  std::ostringstream os;
  for (const auto& row : cells) {
    for (size_t j = 0; j <= size; ++j) {
      if (j) os << "  ";
      os << row[j] << std::string(width[j] - row[j].size(), ' ');
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace qcomb
