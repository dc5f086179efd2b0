#pragma once

#include <utility>
#include <vector>

#include <json.hpp>

#include "tabkit/abtableau.hpp"
#include "tabkit/rational.hpp"

namespace tabkit {

// A level-one A/B tableau, as a pair of single rows.
struct WordPair {
  Tableau plus;   // over A
  Tableau minus;  // over B
  int charge() const { return plus.size() - minus.size(); }
  bool operator==(const WordPair&) const = default;
};

WordPair word_pair(const ABTableau& x);  // x of level one
ABTableau level_one(const WordPair& w);  // canonical

struct RskResult {
  ABTableau p;
  RationalTableau q;  // over [n], same shape as p
};

// extra > 0 runs the construction that many columns wider than needed.
RskResult kappa(const std::vector<WordPair>& w, const AlphabetPtr& a, const AlphabetPtr& b, int extra = 0);
std::vector<WordPair> kappa_inv(const ABTableau& p, const RationalTableau& q);

struct ProductResult {
  ABTableau t;
  Tableau r;  // minimal representative of the product class
};

ProductResult rho_ab(const ABTableau& t1, const ABTableau& t2, int extra = 0);
std::pair<ABTableau, ABTableau> rho_ab_inv(const ABTableau& t, const Tableau& r, const GenPartition& mu,
                                           const GenPartition& nu);

struct SkewResult {
  ABTableau j;
  Tableau r;  // minimal representative of the slash class lambda/mu, nu
};

SkewResult skew_jdt_ab(const ABTableau& x, int extra = 0);
ABTableau skew_jdt_ab_inv(const GenPartition& lambda, const GenPartition& mu, const ABTableau& j, const Tableau& r);

// Bijection checks on a window |sh(T-)| <= bound. lhs and rhs are the two cardinalities;
// failures counts inputs whose image was wrong, repeated, or did not invert.
struct WindowReport {
  long long lhs = 0, rhs = 0, failures = 0;
  bool ok() const { return lhs == rhs && failures == 0; }
};

WindowReport kappa_window(int n, const AlphabetPtr& a, const AlphabetPtr& b, int bound);
WindowReport kappa_content_window(const std::vector<int>& charges, const AlphabetPtr& a, const AlphabetPtr& b,
                                  int bound);
WindowReport rho_ab_window(const GenPartition& mu, const GenPartition& nu, const AlphabetPtr& a, const AlphabetPtr& b,
                           int bound);
WindowReport skew_jdt_window(const GenPartition& lambda, const GenPartition& mu, const AlphabetPtr& a,
                             const AlphabetPtr& b, int bound);

nlohmann::json to_json(const WordPair& w);
WordPair word_pair_from_json(const nlohmann::json& j, const AlphabetPtr& a, const AlphabetPtr& b);

}  // namespace tabkit
