#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tabkit/laurent.hpp"
#include "tabkit/shape.hpp"
#include "tabkit/tableau.hpp"

namespace tabkit {

// (T+, T-) of shape lambda (or lambda/mu when skew is set), embedded at width d over the partition inner.
struct ABTableau {
  GenPartition shape;
  std::optional<GenPartition> skew;  // mu of a skew shape lambda/mu
  int d = 0;
  Partition inner;
  Tableau tplus;   // over A, shape (lambda+(d^n))/inner
  Tableau tminus;  // over B, shape (d^n)/inner or (mu+(d^n))/inner

  int level() const { return shape.level(); }
  bool operator==(const ABTableau& o) const {
    return shape == o.shape && skew == o.skew && d == o.d && inner == o.inner && tplus == o.tplus &&
           tminus == o.tminus;
  }
};

struct ABWeight {
  std::vector<int> plus, minus;
  bool operator==(const ABWeight&) const = default;
};

// Empty string when valid; otherwise the first failed condition.
std::string ab_violation(const ABTableau& x);
bool validate_ab(const ABTableau& x);

// Outer shape of T- for the given data.
Partition tminus_outer(const GenPartition& lambda, const std::optional<GenPartition>& mu, int d);
ABTableau make_ab(const GenPartition& lambda, std::optional<GenPartition> mu, int d, const Tableau& tplus,
                  const Tableau& tminus);

ABTableau canonicalize(ABTableau x);
bool is_canonical(const ABTableau& x);
// Same class, one column wider.
ABTableau widen(const ABTableau& x);
ABTableau widen_to(ABTableau x, int d);

ABWeight weight_ab(const ABTableau& x);

// Canonical elements with |sh(T-)| <= bound.
std::vector<ABTableau> enumerate_ab_serial(const GenPartition& lambda, const std::optional<GenPartition>& mu,
                                           const AlphabetPtr& a, const AlphabetPtr& b, int bound);
std::vector<ABTableau> enumerate_ab(const GenPartition& lambda, const std::optional<GenPartition>& mu,
                                    const AlphabetPtr& a, const AlphabetPtr& b, int bound);

// Variables: the letters of A, then the letters of B (exponents of B are negated).
LaurentPoly monomial_ab(const ABWeight& w);
LaurentPoly character_ab(const GenPartition& lambda, const std::optional<GenPartition>& mu, const AlphabetPtr& a,
                         const AlphabetPtr& b, int bound);

struct Branching {
  Tableau q;       // minimal representative of the bold class LR^{lambda/mu}_{nu*}
  Tableau s_plus;  // over A, shape mu
  Tableau s_minus; // over B, shape nu
};
Branching branch(const ABTableau& x);
ABTableau branch_inv(const GenPartition& lambda, const Branching& br);

nlohmann::json to_json(const ABTableau& x);
ABTableau ab_from_json(const nlohmann::json& j);
std::string to_ascii(const ABTableau& x);

}  // namespace tabkit
