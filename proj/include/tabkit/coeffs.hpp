#pragma once

#include <map>
#include <utility>
#include <vector>

#include "tabkit/shape.hpp"
#include "tabkit/tableau.hpp"

namespace tabkit {

// N^lambda_{mu nu}, memoized.
long long lr_coeff(const Partition& lambda, const Partition& mu, const Partition& nu);

struct ShiftPQ {
  int p = 0, q = 0;
};
// Smallest p, q >= 0 with mu+(p^n), nu+(q^n), lambda+((p+q)^n) partitions.
ShiftPQ c_shift(const GenPartition& lambda, const GenPartition& mu, const GenPartition& nu);
// Smallest d >= 0 with lambda+(d^{m+n}), mu+(d^m), nu+(d^n) partitions.
int c_hat_shift(const GenPartition& lambda, const GenPartition& mu, const GenPartition& nu);

long long c(const GenPartition& lambda, const GenPartition& mu, const GenPartition& nu);
long long c_hat(const GenPartition& lambda, const GenPartition& mu, const GenPartition& nu);

// LR^lambda_{mu nu} -> LR^{lambda+((p+q)^n)}_{mu+(p^n), nu+(q^n)}.
Tableau pi_shift(const Tableau& q, int n, int p, int qq);
Tableau pi_shift_inv(const Tableau& q, int n, int p, int qq);

// Drops the first l rows (which must be H^{(n^l)} sitting right of m inner cells) and subtracts l.
Tableau pi_level(const Tableau& q, int m, int n, int l);
Tableau pi_level_inv(const Tableau& q, int m, int n, int l);

// LR^lambda_{mu nu} -> LR^{delta_{p+q}(lambda)}_{delta_p(mu), delta_q(nu)} at level n.
Tableau delta_pq_lr(const Tableau& q, int n, int p, int qq);
Tableau delta_pq_lr_inv(const Tableau& q, int n, int p, int qq);

// Representatives of the bold LR classes at their minimal shift.
std::vector<Tableau> lr_class_slash(const GenPartition& lambda, const GenPartition& mu, const GenPartition& nu);
std::vector<Tableau> lr_class_product(const GenPartition& lambda, const GenPartition& mu, const GenPartition& nu);
// Reduce an element of a class to the minimal-shift representative.
Tableau canonical_slash(const Tableau& q, const GenPartition& lambda, const GenPartition& mu, const GenPartition& nu,
                        ShiftPQ at);
Tableau canonical_product(const Tableau& q, int m, int n, int l_extra);

// Image of a product-class representative in the starred class.
Tableau star_rep(const Tableau& q, const GenPartition& lambda, const GenPartition& mu, const GenPartition& nu);
std::vector<std::pair<Tableau, Tableau>> star_class(const GenPartition& lambda, const GenPartition& mu,
                                                     const GenPartition& nu);

// Finitely supported elements of the dual ring; the level-0 key is the unit.
using DualElem = std::map<GenPartition, long long>;
DualElem dual_product(const DualElem& a, const DualElem& b, int window);
DualElem omega(const DualElem& a);

}  // namespace tabkit
