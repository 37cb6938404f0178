// Copyright (c) 2026 The crsphere authors
// SPDX-License-Identifier: Apache-2.0

#include "crsphere/qform.hpp"

#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace crsphere {

nlohmann::ordered_json polynomial_to_json(const Polynomial& p) {
  auto j = nlohmann::ordered_json::array();
  for (const auto& [a, c] : p.terms()) {
    j.push_back({{"exponents", a.exponents()}, {"coeff", crsphere::to_string(c)}});
  }
  return j;
}

Polynomial polynomial_from_json(const nlohmann::ordered_json& j) {
  Polynomial p;
  for (const auto& term : j) {
    p.add_term(MultiIndex(term.at("exponents").get<std::vector<int>>()),
               rational_from_string(term.at("coeff").get<std::string>()));
  }
  return p;
}

std::string BasisLabel::to_string() const {
  std::string slot;
  if (alpha >= 4) {
    slot = "f" + std::to_string(alpha);
  } else if (alpha == 1) {
    slot = "h";
  } else {
    slot = "f";
  }
  return slot + index.to_string();
}

int SymQForm::index_of(const BasisLabel& label) const {
  for (size_t i = 0; i < basis.size(); ++i) {
    if (basis[i] == label) return static_cast<int>(i);
  }
  throw std::invalid_argument("label not in basis: " + label.to_string());
}

nlohmann::ordered_json SymQForm::to_json() const {
  nlohmann::ordered_json j;
  j["dim"] = dim();
  auto basis_json = nlohmann::ordered_json::array();
  for (const auto& label : basis) {
    basis_json.push_back({{"alpha", label.alpha}, {"index", label.index.exponents()}});
  }
  j["basis"] = std::move(basis_json);
  auto entries = nlohmann::ordered_json::array();
  for (int i = 0; i < dim(); ++i) {
    for (int k = i; k < dim(); ++k) {
      if (matrix.at(i, k) == 0) continue;
      entries.push_back({i, k, crsphere::to_string(matrix.at(i, k))});
    }
  }
  j["entries"] = std::move(entries);
  return j;
}

SymQForm SymQForm::from_json(const nlohmann::ordered_json& j) {
  SymQForm q;
  for (const auto& item : j.at("basis")) {
    BasisLabel label;
    label.alpha = item.at("alpha").get<int>();
    label.index = MultiIndex(item.at("index").get<std::vector<int>>());
    q.basis.push_back(std::move(label));
  }
  int n = static_cast<int>(q.basis.size());
  q.matrix = RatMatrix(n, n);
  for (const auto& entry : j.at("entries")) {
    int row = entry.at(0).get<int>();
    int col = entry.at(1).get<int>();
    Rational value = rational_from_string(entry.at(2).get<std::string>());
    q.matrix.at(row, col) = value;
    q.matrix.at(col, row) = value;
  }
  return q;
}

std::string SymQForm::to_csv() const {
  std::ostringstream out;
  for (const auto& label : basis) out << "," << label.to_string();
  out << "\n";
  for (int i = 0; i < dim(); ++i) {
    out << basis[i].to_string();
    for (int k = 0; k < dim(); ++k) out << "," << crsphere::to_string(matrix.at(i, k));
    out << "\n";
  }
  return out.str();
}

}  // namespace crsphere
