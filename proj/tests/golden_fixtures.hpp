#pragma once

// Frozen reference matrices for small weights, written in a compact entry
// language: "." is zero, "[k]" is the q-integer, "/[k]" divides exactly,
// "q^3" and plain integers mean what they say, "+" separates terms.

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcomb/bases.hpp"
#include "qcomb/qpoly.hpp"

namespace golden {

inline qcomb::QPoly parse_entry(const std::string& text) {
  using qcomb::QPoly;
  if (text == ".") return QPoly();
  QPoly total;
  size_t i = 0;
  const auto read_int = [&]() {
    size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      ++i;
    if (start == i) throw std::invalid_argument("digit expected: " + text);
    return std::stoi(text.substr(start, i - start));
  };
  while (i < text.size()) {
    QPoly term(1);
    bool saw_factor = false;
    if (std::isdigit(static_cast<unsigned char>(text[i]))) {
      term = QPoly(read_int());
      saw_factor = true;
    }
    while (i < text.size() && text[i] != '+') {
      if (text[i] == 'q') {
        ++i;
        int e = 1;
        if (i < text.size() && text[i] == '^') {
          ++i;
          e = read_int();
        }
        term *= QPoly::term(1, e);
      } else if (text[i] == '[') {
        ++i;
        int k = read_int();
        if (i >= text.size() || text[i] != ']')
          throw std::invalid_argument("missing ] in " + text);
        ++i;
        term *= qcomb::q_int(k);
      } else if (text[i] == '/') {
        ++i;
        if (i >= text.size() || text[i] != '[')
          throw std::invalid_argument("missing [ after / in " + text);
        ++i;
        int k = read_int();
        if (i >= text.size() || text[i] != ']')
          throw std::invalid_argument("missing ] in " + text);
        ++i;
        auto d = term.divided_exactly_by(qcomb::q_int(k));
        if (!d) throw std::invalid_argument("inexact division in " + text);
        term = *d;
      } else {
        throw std::invalid_argument("bad character in " + text);
      }
      saw_factor = true;
    }
    if (!saw_factor) throw std::invalid_argument("empty term in " + text);
    total += term;
    if (i < text.size()) ++i;  // skip '+'
  }
  return total;
}

struct GoldenMatrix {
  std::string family;
  int n;
  qcomb::BasisId from;
  qcomb::BasisId to;
  std::vector<std::vector<std::string>> cells;  // canonical row/column order
};

inline const std::vector<GoldenMatrix>& all_matrices() {
  using qcomb::BasisId;
  static const std::vector<GoldenMatrix> data = {
      {"SP", 1, BasisId::S, BasisId::Psi, {{"1"}}},
      {"RP", 1, BasisId::R, BasisId::Psi, {{"1"}}},
      {"MLP", 1, BasisId::L, BasisId::Psi, {{"1"}}},
      {"SL", 1, BasisId::S, BasisId::L, {{"1"}}},
      {"RL", 1, BasisId::R, BasisId::L, {{"1"}}},
      {"SP",
       3,
       BasisId::S,
       BasisId::Psi,
       {{"1", "1", "1", "1"},
        {"1", "[3]", "[2]", "[2][2]"},
        {"1", "1", "[2]", "[2]"},
        {"1", "[3]", "[3]", "[2][3]"}}},
      {"SP",
       4,
       BasisId::S,
       BasisId::Psi,
       {{"1", "1", "1", "1", "1", "1", "1", "1"},
        {"1", "[4]", "[3]", "[2][3]", "[2]", "[2][3]", "[2][2]", "[2][2][2]"},
        {"1", "1", "[3]", "[3]", "[2]", "[2]", "[2][2]", "[2][2]"},
        {"1", "[4]", "[4][3]/[2]", "[3][4]", "[3]", "[3][3]", "[3][3]",
         "[2][3][3]"},
        {"1", "1", "1", "1", "[2]", "[2]", "[2]", "[2]"},
        {"1", "[4]", "[3]", "[2][3]", "[3]", "[3][3]", "[2][3]", "[2][2][3]"},
        {"1", "1", "[3]", "[3]", "[3]", "[3]", "[2][3]", "[2][3]"},
        {"1", "[4]", "[4][3]/[2]", "[3][4]", "[4]", "[3][4]", "[3][4]",
         "[2][3][4]"}}},
      {"RP",
       3,
       BasisId::R,
       BasisId::Psi,
       {{"1", ".", ".", "."},
        {"1", "q+q^2", "q", "."},
        {"1", ".", "q", "."},
        {"1", "q+q^2", "q+q^2", "q^3"}}},
      {"RP",
       4,
       BasisId::R,
       BasisId::Psi,
       {{"1", ".", ".", ".", ".", ".", ".", "."},
        {"1", "q[3]", "q+q^2", ".", "q", "q^2", ".", "."},
        {"1", ".", "q+q^2", ".", "q", ".", ".", "."},
        {"1", "q[3]", "q+2q^2+q^3+q^4", "q^3[3]", "q+q^2", "q^2+q^3+q^4",
         "q^3", "."},
        {"1", ".", ".", ".", "q", ".", ".", "."},
        {"1", "q[3]", "q+q^2", ".", "q+q^2", "q^2+q^3+q^4", "q^3", "."},
        {"1", ".", "q+q^2", ".", "q+q^2", ".", "q^3", "."},
        {"1", "q[3]", "q+2q^2+q^3+q^4", "q^3[3]", "q[3]", "q^2+q^3+2q^4+q^5",
         "q^3[3]", "q^6"}}},
      {"MLP",
       3,
       BasisId::L,
       BasisId::Psi,
       {{"1", ".", ".", "."},
        {"1", "q", ".", "."},
        {"1", ".", "q", "."},
        {"1", "q", "q^2", "q^3"}}},
      {"MLP",
       4,
       BasisId::L,
       BasisId::Psi,
       {{"1", ".", ".", ".", ".", ".", ".", "."},
        {"1", "q", ".", ".", ".", ".", ".", "."},
        {"1", ".", "q", ".", ".", ".", ".", "."},
        {"1", "q", "q^2", "q^3", ".", ".", ".", "."},
        {"1", ".", ".", ".", "q", ".", ".", "."},
        {"1", "q", ".", ".", "q^2", "q^3", ".", "."},
        {"1", ".", "q", ".", "q^2", ".", "q^3", "."},
        {"1", "q", "q^2", "q^3", "q^3", "q^4", "q^5", "q^6"}}},
      {"SL",
       3,
       BasisId::S,
       BasisId::L,
       {{"1", "1", "1", "1"},
        {".", "1+q", "1", "2+q"},
        {".", ".", "1", "1"},
        {".", ".", ".", "1"}}},
      {"SL",
       4,
       BasisId::S,
       BasisId::L,
       {{"1", "1", "1", "1", "1", "1", "1", "1"},
        {".", "1+q+q^2", "1+q", "2+2q+q^2", "1", "2+2q+q^2", "2+q",
         "3+3q+q^2"},
        {".", ".", "1+q", "1+q", "1", "1", "2+q", "2+q"},
        {".", ".", "q", "1+2q+q^2", ".", "1+q", "1+q", "3+3q+q^2"},
        {".", ".", ".", ".", "1", "1", "1", "1"},
        {".", ".", ".", ".", ".", "1+q", "1", "2+q"},
        {".", ".", ".", ".", ".", ".", "1", "1"},
        {".", ".", ".", ".", ".", ".", ".", "1"}}},
      {"RL",
       3,
       BasisId::R,
       BasisId::L,
       {{"1", ".", ".", "."},
        {".", "1+q", "1", "."},
        {".", ".", "1", "."},
        {".", ".", ".", "1"}}},
      {"RL",
       4,
       BasisId::R,
       BasisId::L,
       {{"1", ".", ".", ".", ".", ".", ".", "."},
        {".", "1+q+q^2", "1+q", ".", "1", "q", ".", "."},
        {".", ".", "1+q", ".", "1", ".", ".", "."},
        {".", ".", "q", "1+q+q^2", ".", "1+q", "1", "."},
        {".", ".", ".", ".", "1", ".", ".", "."},
        {".", ".", ".", ".", ".", "1+q", "1", "."},
        {".", ".", ".", ".", ".", ".", "1", "."},
        {".", ".", ".", ".", ".", ".", ".", "1"}}},
  };
  return data;
}

}  // namespace golden
