#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "tabkit/abtableau.hpp"
#include "tabkit/laurent.hpp"

namespace tabkit {

using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

// Cofactor expansion along the first row; square, size <= 6.
LaurentPoly det(const PolyMatrix& m);
// Sum over permutations. Reference for tests only.
LaurentPoly det_leibniz(const PolyMatrix& m);

// Variables of an A/B polynomial: letters of A, then letters of B, then x1..xn.
std::vector<std::string> variable_names(const AlphabetPtr& a, const AlphabetPtr& b, int n = 0);

struct CheckReport {
  std::string name;
  long long monomials = 0;          // distinct monomials compared
  std::vector<std::string> diffs;   // "monomial: lhs vs rhs" or a failed side condition
  bool ok() const { return diffs.empty(); }
};

// Window: x_B^{-1}-degree <= d and sum of |exponents| over x_[n] <= e.
struct Window {
  int d = 0, e = 0;
};

CheckReport cauchy_check(int n, const AlphabetPtr& a, const AlphabetPtr& b, Window w);
// Both sides of the Cauchy identity inside the window, for printing.
std::pair<LaurentPoly, LaurentPoly> cauchy_sides(int n, const AlphabetPtr& a, const AlphabetPtr& b, Window w);

using AlphabetFamily = std::function<AlphabetPtr(int)>;

// det(S_{lambda_i - i + j}) against S_lambda with x_B^{-1}-degree <= d, at truncation k and k+1.
CheckReport jacobi_trudi_check(const GenPartition& lambda, const AlphabetFamily& a, const AlphabetFamily& b, int k,
                               int d);
LaurentPoly jacobi_trudi_det(const GenPartition& lambda, const AlphabetPtr& a, const AlphabetPtr& b, int d);

// H_mu = prod S_{mu_i} against sum_lambda K_{lambda mu} S_lambda, plus K_{lambda mu} = 0 unless lambda >= mu.
CheckReport h_expansion_check(const GenPartition& mu, const AlphabetPtr& a, const AlphabetPtr& b, int d);

// Diagonal keys are 2k, so half-integers stay integral.
struct HighestWeight {
  std::map<int, int> diag;
  int central = 0;
  bool operator==(const HighestWeight&) const = default;
};

HighestWeight highest_weight_super(const GenPartition& lambda);
HighestWeight highest_weight_gl(const GenPartition& lambda);
// Weight of a canonical A/B tableau over the half-integer alphabets, keyed like HighestWeight::diag.
std::map<int, int> half_weight(const ABTableau& x);

// k = 0 picks the smallest truncation holding every entry.
int highest_weight_truncation(const GenPartition& lambda);
ABTableau highest_weight_tableau(const GenPartition& lambda, int k = 0);

enum class CharMode { Super, Gl };
AlphabetPtr mode_plus(CharMode m, int k);
AlphabetPtr mode_minus(CharMode m, int k);
LaurentPoly super_character_window(const GenPartition& lambda, CharMode m, int k, int d);
// sum over partitions mu, nu of c^lambda_{mu nu*} S^A_mu S^B_nu, x_B^{-1}-degree <= d.
LaurentPoly character_by_expansion(const GenPartition& lambda, const AlphabetPtr& a, const AlphabetPtr& b, int d);

nlohmann::json to_json(const HighestWeight& h);
nlohmann::json to_json(const CheckReport& r);

}  // namespace tabkit
