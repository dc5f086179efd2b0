#pragma once

#include <vector>

#include <json.hpp>

#include "tabkit/laurent.hpp"
#include "tabkit/shape.hpp"
#include "tabkit/tableau.hpp"

namespace tabkit {

// Filling of a generalized diagram of level n by [n] (right of the line) and [-n] (left).
// rows[k] lists entries left to right, so a row with parts[k] < 0 holds negative values.
struct RationalTableau {
  GenPartition shape;
  std::vector<std::vector<int>> rows;

  int level() const { return shape.level(); }
  // Entries of column col (col != 0), top to bottom.
  std::vector<int> column(int col) const;
  // Signed content m_k - m_{-k}, k = 1..n.
  std::vector<int> content() const;
  bool operator==(const RationalTableau&) const = default;
};

bool validate_rational(const RationalTableau& t);  // ShapeMismatch if rows do not cover the shape

RationalTableau sigma(const RationalTableau& t);
RationalTableau sigma_inv(const RationalTableau& t);
RationalTableau sigma_pow(RationalTableau t, int k);  // k may be negative

RationalTableau to_rational(const Tableau& t, int n);  // t over an n-letter alphabet, positions 0..n-1
Tableau to_ordinary(const RationalTableau& t);          // over interval(n); shape must be a partition

// Rectangular complement (sigma^{-k} T)^pi, relabelled into [n].
Tableau delta(const Tableau& t, int n, int k);
// transpose(delta(t, d, m)) over prime(interval(d)); the U_i of the A/B product.
Tableau delta_swapped(const Tableau& t, int d, int m);

bool check_stroomer(const Tableau& t1, const Tableau& t2, int n, int p, int q);

std::vector<RationalTableau> enumerate_rational_serial(const GenPartition& lambda);
std::vector<RationalTableau> enumerate_rational(const GenPartition& lambda);
LaurentPoly rational_schur(const GenPartition& lambda);
long long kostka(const GenPartition& lambda, const std::vector<int>& content);

nlohmann::json to_json(const RationalTableau& t);
RationalTableau rational_from_json(const nlohmann::json& j);
std::string to_ascii(const RationalTableau& t);

}  // namespace tabkit
